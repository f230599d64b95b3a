"""Weight systems and the piecewise-linear rho inequality.

For a toral subalgebra a inside h, every a-stable module V splits exactly
into joint rational eigenspaces; rho_V(Y) is half the multiplicity-weighted
sum of |alpha(Y)| over the weights alpha.  The inequality rho_h <= rho_{g/h}
is decided for ALL real Y at once: both sides are linear on each chamber of
the arrangement cut out by the weight hyperplanes, so it suffices to check
the extreme rays of the chambers, which are enumerated exactly.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg as la
from .core import LieAlgebra, Subspace
from .errors import InputError, ResourceBudgetError

DEFAULT_CHAMBER_BUDGET = 100000


@dataclass
class ToralSubalgebra:
    """Commuting, rationally-diagonalizable elements spanning a torus in h."""

    algebra: LieAlgebra
    subalgebra: Subspace
    basis: tuple[la.Vec, ...]
    undetermined: bool = False

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass
class WeightSystem:
    """Joint weights of a toral basis on a module, with multiplicities."""

    weights: tuple[tuple[Fraction, ...], ...]
    multiplicities: tuple[int, ...]
    module_label: str
    module_dim: int

    def items(self):
        return zip(self.weights, self.multiplicities)


@dataclass
class RhoReport:
    verdict: Optional[bool]
    failing_ray: Optional[tuple[Fraction, ...]] = None
    failing_element: Optional[la.Vec] = None
    chamber_count: int = 0
    rays_checked: int = 0
    vacuous: bool = False
    undetermined: bool = False
    ray_table: tuple = ()
    weights_h: Optional[WeightSystem] = None
    weights_quotient: Optional[WeightSystem] = None


def _validate_toral_vector(g: LieAlgebra, v) -> None:
    if la.rational_eigenvalues(g.ad(v)) is None:
        raise InputError(
            "element does not act diagonalizably with rational eigenvalues")


def find_toral(g: LieAlgebra, h: Subspace, hint=None,
               trials: int = 8, seed: int = 0) -> ToralSubalgebra:
    """Locate a toral subalgebra of h.

    Order of preference: explicit hint, constructor-stamped basis, the zero
    torus when h is unipotent, and finally a generic-element search that
    intersects h with the centralizer of a diagonalizable sample.  When the
    search fails the zero torus is returned flagged as undetermined.
    """
    if hint is not None:
        basis = tuple(la.vec(t) for t in hint)
        if len(la.rref(basis)[0]) != len(basis):
            raise InputError("toral hint rows are linearly dependent")
        for t in basis:
            if not h.contains(t):
                raise InputError("toral hint element lies outside the subalgebra")
        for i, t in enumerate(basis):
            for s in basis[i + 1:]:
                if not la.is_zero_vec(g.bracket(t, s)):
                    raise InputError("toral hint elements do not commute")
            _validate_toral_vector(g, t)
        return ToralSubalgebra(g, h, basis)
    if h.toral_basis is not None:
        basis = h.toral_basis
        for i, t in enumerate(basis):
            for s in basis[i + 1:]:
                if not la.is_zero_vec(g.bracket(t, s)):
                    raise InputError("stamped toral basis does not commute")
            _validate_toral_vector(g, t)
        return ToralSubalgebra(g, h, basis)
    if h.dim == 0 or g.is_unipotent_subalgebra(h):
        return ToralSubalgebra(g, h, ())
    rng = random.Random(seed)
    for _ in range(trials):
        x = h.random_element(rng)
        if la.is_zero_vec(x):
            continue
        if la.rational_eigenvalues(g.ad(x)) is None:
            continue
        candidate = la.intersect_rowspaces(h.basis, g.centralizer(x).basis)
        ok = True
        for i, t in enumerate(candidate):
            for s in candidate[i + 1:]:
                if not la.is_zero_vec(g.bracket(t, s)):
                    ok = False
                    break
            if ok and la.rational_eigenvalues(g.ad(t)) is None:
                ok = False
            if not ok:
                break
        if ok and candidate:
            return ToralSubalgebra(g, h, tuple(candidate))
    return ToralSubalgebra(g, h, (), undetermined=True)


def _sorted_weight_system(blocks, label, module_dim) -> WeightSystem:
    pairs = sorted((weight, len(rows)) for weight, rows in blocks if len(rows))
    return WeightSystem(weights=tuple(w for w, _ in pairs),
                        multiplicities=tuple(m for _, m in pairs),
                        module_label=label, module_dim=module_dim)


def weight_system(g: LieAlgebra, a: ToralSubalgebra, module: Subspace,
                  label: str = "h") -> WeightSystem:
    """Weights of the toral basis acting on a stable subspace of g."""
    ops = []
    for t in a.basis:
        try:
            ops.append(la.restrict_operator(g.ad(t), module.basis))
        except ArithmeticError:
            raise InputError("module is not stable under the toral action")
    try:
        blocks = la.simultaneous_eigenblocks(ops, module.dim)
    except ArithmeticError as exc:
        raise InputError(str(exc))
    return _sorted_weight_system(blocks, label, module.dim)


def quotient_weight_system(g: LieAlgebra, a: ToralSubalgebra, h: Subspace,
                           label: str = "g/h") -> WeightSystem:
    """Weights of the toral basis acting on the quotient module g/h."""
    red, pivots = h.rref
    pivot_set = set(pivots)
    complement = [i for i in range(g.dim) if i not in pivot_set]
    basis_rows = tuple(h.basis) + tuple(la.identity(g.dim)[i] for i in complement)
    bt = la.transpose(basis_rows)
    ops = []
    for t in a.basis:
        for b in h.basis:
            if not h.contains(g.bracket(t, b)):
                raise InputError("subalgebra is not stable under the toral action")
        cols = []
        for i in complement:
            w = g.bracket(t, g.unit(i))
            coords = la.solve(bt, w)
            cols.append(coords[h.dim:])
        q = len(complement)
        ops.append(tuple(tuple(cols[j][i] for j in range(q)) for i in range(q)))
    try:
        blocks = la.simultaneous_eigenblocks(ops, len(complement))
    except ArithmeticError as exc:
        raise InputError(str(exc))
    return _sorted_weight_system(blocks, label, len(complement))


def rho_value(ws: WeightSystem, y: Sequence[Fraction]) -> Fraction:
    """Half the multiplicity-weighted sum of |alpha(y)| over the weights."""
    total = Fraction(0)
    for alpha, mult in ws.items():
        if len(alpha) != len(y):
            raise InputError("point has wrong dimension for this weight system")
        total += mult * abs(la.vec_dot(alpha, la.vec(y)))
    return total / 2


# -- arrangement machinery ---------------------------------------------------


def _effective_quotient(covectors, k):
    """Quotient coordinates modulo the common kernel of all covectors.

    Returns (Q rows, reduced covectors): Q spans a complement of the common
    kernel, and each covector is re-expressed in Q coordinates.
    """
    nonzero = [c for c in covectors if not la.is_zero_vec(c)]
    if not nonzero:
        return (), []
    kernel = la.nullspace(tuple(nonzero))
    red, pivots = la.rref(kernel)
    pivot_set = set(pivots)
    q_rows = tuple(la.identity(k)[i] for i in range(k) if i not in pivot_set)
    reduced = [tuple(la.vec_dot(c, qr) for qr in q_rows) for c in nonzero]
    return q_rows, reduced


def _hyperplane_normals(reduced_covectors):
    normals = []
    seen = set()
    for c in reduced_covectors:
        p = la.primitive_vector(c)
        if p not in seen:
            seen.add(p)
            normals.append(p)
    return sorted(normals)


def candidate_rays(normals, q: int, budget: int = DEFAULT_CHAMBER_BUDGET):
    """All extreme rays of the chambers of a central essential arrangement."""
    if q == 0:
        return []
    if q == 1:
        return [(la.ONE,), (-la.ONE,)]
    m = len(normals)
    subsets = 1
    for i in range(q - 1):
        subsets = subsets * (m - i) // (i + 1)
    if subsets > budget:
        raise ResourceBudgetError(
            "ray enumeration needs %d hyperplane subsets, budget is %d"
            % (subsets, budget))
    lines = set()
    for subset in itertools.combinations(normals, q - 1):
        kernel = la.nullspace(subset)
        if len(kernel) != 1:
            continue
        lines.add(la.primitive_vector(kernel[0]))
    rays = []
    for line in sorted(lines):
        rays.append(line)
        rays.append(tuple(-x for x in line))
    return rays


def chamber_count(normals, q: int) -> int:
    """Number of chambers, by Moebius summation over the intersection lattice."""
    if q == 0 or not normals:
        return 1
    # flats keyed by the rref of the span of normals vanishing on them
    whole = ((), ())
    flats = {whole: ()}
    frontier = [()]
    while frontier:
        new_frontier = []
        for span_rows in frontier:
            red, piv = la.rref(span_rows) if span_rows else ((), ())
            for n in normals:
                if span_rows and la.in_rowspace(red, piv, n):
                    continue
                new_span = la.row_basis(tuple(span_rows) + (n,))
                key = (new_span, la.rref(new_span)[1])
                if key not in flats:
                    flats[key] = new_span
                    new_frontier.append(new_span)
        frontier = new_frontier
    # Moebius function from the whole space downward (ordered by span inclusion)
    items = sorted(flats.values(), key=lambda rows: (len(rows), rows))
    mu = {}
    for rows in items:
        red, piv = la.rref(rows) if rows else ((), ())
        total = 0
        for other in items:
            if len(other) < len(rows) or (len(other) == len(rows) and other != rows):
                if len(other) < len(rows) and all(
                        la.in_rowspace(red, piv, r) for r in other):
                    total += mu[other]
        mu[rows] = 1 if not rows else -total
    return sum(abs(v) for v in mu.values())


def rho_inequality(g: LieAlgebra, h: Subspace, a: ToralSubalgebra,
                   chamber_budget: int = DEFAULT_CHAMBER_BUDGET) -> RhoReport:
    """Decide rho_h <= rho_{g/h} on the whole real span of the toral basis."""
    if a.undetermined:
        return RhoReport(verdict=None, undetermined=True)
    if a.dim == 0:
        return RhoReport(verdict=True, vacuous=True, chamber_count=1)
    ws_h = weight_system(g, a, h, label="h")
    ws_q = quotient_weight_system(g, a, h, label="g/h")
    k = a.dim
    covectors = list(ws_h.weights) + list(ws_q.weights)
    q_rows, reduced = _effective_quotient(covectors, k)
    if not reduced:
        return RhoReport(verdict=True, chamber_count=1, rays_checked=0,
                         weights_h=ws_h, weights_quotient=ws_q)
    normals = _hyperplane_normals(reduced)
    qdim = len(q_rows)
    rays = candidate_rays(normals, qdim, budget=chamber_budget)
    chambers = chamber_count(normals, qdim)
    if chambers > chamber_budget:
        raise ResourceBudgetError("chamber count %d exceeds budget %d"
                                  % (chambers, chamber_budget))
    table = []
    failing = None
    for ray in rays:
        y = la.zero_vec(k)
        for c, qr in zip(ray, q_rows):
            if c:
                y = la.vec_add(y, la.vec_scale(c, qr))
        vh = rho_value(ws_h, y)
        vq = rho_value(ws_q, y)
        table.append((y, vh, vq))
        if failing is None and vh > vq:
            failing = y
    report = RhoReport(verdict=failing is None,
                       chamber_count=chambers, rays_checked=len(rays),
                       ray_table=tuple(table),
                       weights_h=ws_h, weights_quotient=ws_q)
    if failing is not None:
        element = la.zero_vec(g.dim)
        for c, t in zip(failing, a.basis):
            if c:
                element = la.vec_add(element, la.vec_scale(c, t))
        report.failing_ray = failing
        report.failing_element = element
    return report


def rho_combination_vanishes(systems: Sequence[tuple[int, WeightSystem]],
                             k: int) -> tuple[bool, Optional[tuple]]:
    """Exact test that sum_i coeff_i * rho_i vanishes identically.

    Piecewise-linear functions agree everywhere iff they agree on every
    extreme ray of the common arrangement refinement.
    """
    covectors = []
    for _, ws in systems:
        covectors.extend(ws.weights)
    q_rows, reduced = _effective_quotient(covectors, k)
    if not reduced:
        return True, None
    normals = _hyperplane_normals(reduced)
    rays = candidate_rays(normals, len(q_rows))
    for ray in rays:
        y = la.zero_vec(k)
        for c, qr in zip(ray, q_rows):
            if c:
                y = la.vec_add(y, la.vec_scale(c, qr))
        total = Fraction(0)
        for coeff, ws in systems:
            total += coeff * rho_value(ws, y)
        if total != 0:
            return False, y
    return True, None
