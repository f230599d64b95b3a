"""JSON encoding with exact rationals.

Rationals cross the wire as strings ("3", "-1/2"), matrices as row-major
arrays of such strings; nothing is ever rounded.  ``canonical_dumps`` fixes
key order and whitespace so identical runs produce byte-identical reports.
"""

from __future__ import annotations

import json
from fractions import Fraction


def fraction_to_str(x) -> str:
    return str(Fraction(x))


def vec_to_json(v) -> list:
    return [fraction_to_str(x) for x in v]


def mat_to_json(rows) -> list:
    return [vec_to_json(r) for r in rows]


def parse_fraction(s) -> Fraction:
    return Fraction(str(s))


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"
