"""Command-line front end.

Subcommands: check (one pair file), catalog (built-in suite), limit
(degeneration witness), rho (weight systems and ray table), selftest
(invariant suites).  All configuration travels through explicit flags;
identical flags and inputs give byte-identical JSON output.

Exit codes: 0 tempered / success, 1 not tempered, 2 undetermined (or no
witness / budget exceeded), 3 inconsistent verdicts, 64 input error.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import sys
import time
from dataclasses import dataclass

from . import catalog as cat
from . import criteria as cr
from .degeneration import contract_to_solvable
from .errors import InputError, ResourceBudgetError, UnsupportedError
from .jsonio import canonical_dumps, fraction_to_str, mat_to_json, vec_to_json
from .rho import find_toral, rho_inequality
from .selftest import run_suites

EXIT_TEMPERED = 0
EXIT_NOT_TEMPERED = 1
EXIT_UNDETERMINED = 2
EXIT_INCONSISTENT = 3
EXIT_INPUT_ERROR = 64


@dataclass
class RunConfig:
    seed: int = 42
    trials: int = 32
    chamber_budget: int = 100000
    output_format: str = "text"
    jobs: int = 1

    def to_json(self) -> dict:
        return {"seed": self.seed, "trials": self.trials,
                "chamber_budget": self.chamber_budget}


def _load_pair_file(path: str) -> cat.PairSpec:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise InputError("malformed JSON in %s: %s" % (path, exc))
    return cat.PairSpec.from_dict(raw)


def _pair_report(spec: cat.PairSpec, config: RunConfig, with_timing=False) -> dict:
    pair = cat.resolve_pair(spec, rank_seed=config.seed)
    timings = {}
    start = time.perf_counter()
    outcome = cr.check_tem(pair.algebra, pair.root_datum, pair.subalgebra,
                           trials=config.trials, seed=config.seed,
                           chamber_budget=config.chamber_budget,
                           toral_hint=pair.toral_hint, label=pair.label)
    timings["total_ms"] = (time.perf_counter() - start) * 1000.0
    report = {
        "label": pair.label,
        "algebra": {"dim": pair.algebra.dim, "rank": pair.algebra.known_rank},
        "subalgebra_dim": pair.subalgebra.dim,
        "criteria": {name: v.to_json() for name, v in sorted(outcome.verdicts.items())},
        "tem": {True: "true", False: "false", None: "undetermined"}[outcome.tem],
        "consistent": outcome.consistent,
        "expected_verdict": pair.expected_verdict,
    }
    if with_timing:
        report["_timing"] = timings  # text output only, stripped from JSON
    return report


VERDICT_MARK = {"true": "T", "false": "F", "undetermined": "?"}


def _print_pair_text(report, out):
    print("pair: %s  (dim g = %d, dim h = %d)"
          % (report["label"], report["algebra"]["dim"], report["subalgebra_dim"]),
          file=out)
    for name, v in report["criteria"].items():
        flags = []
        if v["probabilistic"]:
            flags.append("probabilistic(budget %d, seed %d)"
                         % (v["trials_used"], v["seed"]))
        if v["note"]:
            flags.append(v["note"])
        print("  %-4s %-12s %s" % (name, v["verdict"],
                                   ("; ".join(flags))), file=out)
    print("  Tem  %-12s consistent=%s" % (report["tem"], report["consistent"]),
          file=out)
    if "_timing" in report:
        print("  time %.1f ms" % report["_timing"]["total_ms"], file=out)


def _strip_private(report: dict) -> dict:
    return {k: v for k, v in report.items() if not k.startswith("_")}


def cmd_check(args, config: RunConfig) -> int:
    spec = _load_pair_file(args.pair_file)
    report = _pair_report(spec, config, with_timing=(config.output_format == "text"))
    if config.output_format == "json":
        sys.stdout.write(canonical_dumps(_strip_private(report)))
    else:
        _print_pair_text(report, sys.stdout)
    if not report["consistent"]:
        return EXIT_INCONSISTENT
    return {"true": EXIT_TEMPERED, "false": EXIT_NOT_TEMPERED,
            "undetermined": EXIT_UNDETERMINED}[report["tem"]]


def _catalog_worker(payload):
    label, seed, trials, chamber_budget = payload
    config = RunConfig(seed=seed, trials=trials, chamber_budget=chamber_budget,
                       output_format="json", jobs=1)
    return _pair_report(cat.builtin_pair(label), config)


def cmd_catalog(args, config: RunConfig) -> int:
    specs = cat.builtin_pair_specs()
    if args.filter:
        specs = [s for s in specs
                 if any(f in s.label for f in args.filter)]
    specs.sort(key=lambda s: s.label)
    payloads = [(s.label, config.seed, config.trials, config.chamber_budget)
                for s in specs]
    if config.jobs > 1 and len(payloads) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=config.jobs) as pool:
            reports = list(pool.map(_catalog_worker, payloads))
    else:
        reports = [_catalog_worker(p) for p in payloads]
    reports.sort(key=lambda r: r["label"])
    all_consistent = all(r["consistent"] for r in reports)
    summary = {"config": config.to_json(),
               "pairs": [_strip_private(r) for r in reports],
               "all_consistent": all_consistent}
    if config.output_format == "json":
        sys.stdout.write(canonical_dumps(summary))
    else:
        header = "%-28s %-4s %-4s %-4s %-4s %-4s %-5s %s" % \
            ("pair", "Rho", "Orb", "Tmu", "Sla", "Ags", "Tem", "consistent")
        print(header)
        print("-" * len(header))
        for r in reports:
            marks = {}
            for name in ("Rho", "Orb", "Tmu", "Sla", "Ags"):
                v = r["criteria"].get(name)
                marks[name] = VERDICT_MARK[v["verdict"]] if v else "-"
            print("%-28s %-4s %-4s %-4s %-4s %-4s %-5s %s"
                  % (r["label"], marks["Rho"], marks["Orb"], marks["Tmu"],
                     marks["Sla"], marks["Ags"], VERDICT_MARK[r["tem"]],
                     "yes" if r["consistent"] else "NO"))
        print("all consistent: %s" % ("yes" if all_consistent else "NO"))
    return EXIT_TEMPERED if all_consistent else EXIT_INCONSISTENT


def cmd_limit(args, config: RunConfig) -> int:
    spec = _load_pair_file(args.pair_file)
    pair = cat.resolve_pair(spec, rank_seed=config.seed)
    if pair.root_datum is None:
        raise InputError("limit command needs an algebra with a root datum")
    tmu = cr.check_tmu(pair.algebra, pair.root_datum, pair.subalgebra,
                       trials=config.trials,
                       seed=config.seed + cr.SEED_OFFSETS["Tmu"])
    if not tmu.verdict:
        print("no transversal maximal unipotent found (budget %d)"
              % config.trials, file=sys.stderr)
        return EXIT_UNDETERMINED
    phi = tmu.witness_obj
    moved = phi.apply_subspace(pair.subalgebra)
    witness = contract_to_solvable(pair.algebra, pair.root_datum, moved,
                                   cat.maximal_unipotent(pair.algebra,
                                                         pair.root_datum))
    report = {
        "label": pair.label,
        "direction": vec_to_json(witness.direction),
        "conjugator": mat_to_json(phi.matrix),
        "limit_basis": mat_to_json(witness.limit.basis),
        "derived_series_dims": list(witness.derived_series_dims),
        "solvable": witness.solvable,
        "trials_used": tmu.trials_used,
        "seed": config.seed,
    }
    if config.output_format == "json":
        sys.stdout.write(canonical_dumps(report))
    else:
        print("pair: %s" % report["label"])
        print("direction X: %s" % report["direction"])
        print("limit basis:")
        for row in report["limit_basis"]:
            print("  %s" % row)
        print("derived series dims: %s" % report["derived_series_dims"])
        print("solvable: %s" % report["solvable"])
    return EXIT_TEMPERED


def cmd_rho(args, config: RunConfig) -> int:
    spec = _load_pair_file(args.pair_file)
    pair = cat.resolve_pair(spec, rank_seed=config.seed)
    a = find_toral(pair.algebra, pair.subalgebra, hint=pair.toral_hint,
                   seed=config.seed)
    report = rho_inequality(pair.algebra, pair.subalgebra, a,
                            chamber_budget=config.chamber_budget)
    if report.undetermined:
        print("toral subalgebra undetermined: provide a toral_hint in the pair spec",
              file=sys.stderr)
        return EXIT_UNDETERMINED

    def ws_json(ws):
        if ws is None:
            return None
        return {"weights": [vec_to_json(w) for w in ws.weights],
                "multiplicities": list(ws.multiplicities)}

    payload = {
        "label": pair.label,
        "verdict": {True: "true", False: "false"}[report.verdict],
        "vacuous": report.vacuous,
        "chamber_count": report.chamber_count,
        "rays_checked": report.rays_checked,
        "failing_ray": (vec_to_json(report.failing_ray)
                        if report.failing_ray is not None else None),
        "failing_element": (vec_to_json(report.failing_element)
                            if report.failing_element is not None else None),
        "weights_h": ws_json(report.weights_h),
        "weights_quotient": ws_json(report.weights_quotient),
        "rays": [{"point": vec_to_json(y),
                  "rho_h": fraction_to_str(vh),
                  "rho_quotient": fraction_to_str(vq)}
                 for y, vh, vq in report.ray_table],
    }
    if config.output_format == "json":
        sys.stdout.write(canonical_dumps(payload))
    else:
        print("pair: %s" % payload["label"])
        print("verdict: %s%s" % (payload["verdict"],
                                 " (vacuous)" if payload["vacuous"] else ""))
        if payload["weights_h"] is not None:
            print("weights on h:        %s" %
                  list(zip(payload["weights_h"]["weights"],
                           payload["weights_h"]["multiplicities"])))
            print("weights on g/h:      %s" %
                  list(zip(payload["weights_quotient"]["weights"],
                           payload["weights_quotient"]["multiplicities"])))
        print("chambers: %d, rays checked: %d"
              % (payload["chamber_count"], payload["rays_checked"]))
        if payload["rays"]:
            print("%-24s %-10s %-10s" % ("ray", "rho_h", "rho_g/h"))
            for row in payload["rays"]:
                print("%-24s %-10s %-10s"
                      % (",".join(row["point"]), row["rho_h"], row["rho_quotient"]))
        if payload["failing_ray"] is not None:
            print("failing ray: %s" % payload["failing_ray"])
    return EXIT_TEMPERED


def cmd_selftest(args, config: RunConfig) -> int:
    ok, lines = run_suites(names=args.suite or None,
                           inject_corruption=args.inject_corruption)
    for line in lines:
        print(line)
    return EXIT_TEMPERED if ok else EXIT_NOT_TEMPERED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="temperlie",
        description="Exact temperedness criteria for complex semisimple "
                    "homogeneous spaces")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--trials", type=int, default=32)
    parser.add_argument("--chambers", type=int, default=100000,
                        help="chamber/ray enumeration budget")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--jobs", type=int, default=1)
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run all criteria on a pair file")
    p_check.add_argument("pair_file")

    p_catalog = sub.add_parser("catalog", help="run the built-in pair catalog")
    p_catalog.add_argument("--filter", action="append", default=[],
                           help="keep only pairs whose label contains this")

    p_limit = sub.add_parser("limit", help="contraction witness for a pair file")
    p_limit.add_argument("pair_file")

    p_rho = sub.add_parser("rho", help="weight systems and the rho inequality")
    p_rho.add_argument("pair_file")

    p_self = sub.add_parser("selftest", help="run the invariant suites")
    p_self.add_argument("--suite", action="append",
                        help="run only this suite (repeatable)")
    p_self.add_argument("--inject-corruption", action="store_true",
                        help=argparse.SUPPRESS)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(seed=args.seed, trials=args.trials,
                       chamber_budget=args.chambers,
                       output_format=args.format, jobs=args.jobs)
    handlers = {"check": cmd_check, "catalog": cmd_catalog,
                "limit": cmd_limit, "rho": cmd_rho, "selftest": cmd_selftest}
    try:
        return handlers[args.command](args, config)
    except InputError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT_ERROR
    except UnsupportedError as exc:
        print("unsupported: %s" % exc, file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ResourceBudgetError as exc:
        print("budget exceeded: %s" % exc, file=sys.stderr)
        return EXIT_UNDETERMINED


if __name__ == "__main__":
    raise SystemExit(main())
