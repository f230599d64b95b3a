"""The five temperedness conditions and their cross-checks.

Each check returns a ``CriterionVerdict``.  A true verdict for Orb, Tmu or
Sla always carries an exactly verified witness; a false verdict obtained by
sampling is labelled probabilistic, while falses forced by exact arguments
(zero orthogonal complement, dimension counts) are not.  The aggregate
``check_tem`` report equals the Orb verdict and flags whether all determined
verdicts agree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from . import linalg as la
from .catalog import RootDatum, maximal_unipotent, parabolic
from .core import LieAlgebra, Subspace
from .degeneration import LimitWitness, contract_to_solvable
from .errors import ResourceBudgetError
from .jsonio import fraction_to_str, mat_to_json, vec_to_json
from .rho import (DEFAULT_CHAMBER_BUDGET, ToralSubalgebra, find_toral,
                  rho_inequality)

DEFAULT_TRIALS = 32
SEED_OFFSETS = {"Rho": 11, "Orb": 23, "Tmu": 37, "Sla": 53, "Ags": 71}


@dataclass
class CriterionVerdict:
    criterion: str
    verdict: Optional[bool]
    trials_used: int = 0
    seed: int = 0
    probabilistic: bool = False
    note: str = ""
    witness: Optional[dict] = None
    witness_obj: object = field(default=None, repr=False, compare=False)

    def to_json(self) -> dict:
        return {
            "criterion": self.criterion,
            "verdict": {True: "true", False: "false", None: "undetermined"}[self.verdict],
            "trials_used": self.trials_used,
            "seed": self.seed,
            "probabilistic": self.probabilistic,
            "note": self.note,
            "witness": self.witness,
        }


def _trial_seed(seed: int, trial: int) -> int:
    return seed * 100003 + trial


def check_orb(g: LieAlgebra, h: Subspace, trials: int = DEFAULT_TRIALS,
              seed: int = 0) -> CriterionVerdict:
    """Search the Killing orthogonal of h for a regular element."""
    perp = g.orthogonal_complement(h)
    if perp.dim == 0:
        zero_regular = g.is_regular(g.zero())
        return CriterionVerdict("Orb", zero_regular, trials_used=0, seed=seed,
                                note="orthogonal complement is zero")
    rng = random.Random(seed)
    for trial in range(trials):
        x = perp.random_element(rng)
        if g.is_regular(x):
            return CriterionVerdict(
                "Orb", True, trials_used=trial + 1, seed=seed,
                witness={"element": vec_to_json(x),
                         "centralizer_dim": g.centralizer(x).dim},
                witness_obj=x)
    return CriterionVerdict("Orb", False, trials_used=trials, seed=seed,
                            probabilistic=True,
                            note="no regular element in %d samples" % trials)


def check_tmu(g: LieAlgebra, rd: RootDatum, h: Subspace,
              trials: int = DEFAULT_TRIALS, seed: int = 0,
              word_length: Optional[int] = None) -> CriterionVerdict:
    """Search for an automorphism moving h off the standard maximal unipotent."""
    n_std = maximal_unipotent(g, rd)
    if h.dim + n_std.dim > g.dim:
        return CriterionVerdict("Tmu", False, trials_used=0, seed=seed,
                                note="dimension count forbids transversality")
    if word_length is None:
        word_length = g.dim
    for trial in range(trials):
        if trial == 0:
            phi = g.random_automorphism(0, seed=_trial_seed(seed, 0))
        else:
            phi = g.random_automorphism(word_length, seed=_trial_seed(seed, trial))
        moved = phi.apply_subspace(h)
        if la.intersection_dim(moved.basis, n_std.basis) == 0:
            return CriterionVerdict(
                "Tmu", True, trials_used=trial + 1, seed=seed,
                witness={"automorphism": mat_to_json(phi.matrix),
                         "word_length": len(phi.provenance),
                         "intersection_dim": 0},
                witness_obj=phi)
    return CriterionVerdict("Tmu", False, trials_used=trials, seed=seed,
                            probabilistic=True,
                            note="no transversal position in %d trials" % trials)


def check_sla(g: LieAlgebra, rd: RootDatum, h: Subspace,
              trials: int = DEFAULT_TRIALS, seed: int = 0) -> CriterionVerdict:
    """Produce a solvable member of the contraction orbit closure."""
    if g.check_subalgebra(h) and g.is_solvable(h):
        series = g.derived_series(h)
        wit = LimitWitness(direction=g.zero(), source=h, limit=h, solvable=True,
                           derived_series_dims=tuple(s.dim for s in series))
        return CriterionVerdict(
            "Sla", True, trials_used=0, seed=seed,
            note="subalgebra is already solvable",
            witness=_limit_witness_json(wit), witness_obj=wit)
    tmu = check_tmu(g, rd, h, trials=trials, seed=seed)
    if tmu.verdict:
        phi = tmu.witness_obj
        moved = phi.apply_subspace(h)
        wit = contract_to_solvable(g, rd, moved, maximal_unipotent(g, rd))
        wit.conjugator = phi
        return CriterionVerdict(
            "Sla", True, trials_used=tmu.trials_used, seed=seed,
            witness=_limit_witness_json(wit), witness_obj=wit)
    return CriterionVerdict("Sla", False, trials_used=tmu.trials_used, seed=seed,
                            probabilistic=tmu.probabilistic,
                            note="propagated: " + tmu.note)


def _limit_witness_json(wit: LimitWitness) -> dict:
    out = {
        "direction": vec_to_json(wit.direction),
        "limit_basis": mat_to_json(wit.limit.basis),
        "solvable": wit.solvable,
        "derived_series_dims": list(wit.derived_series_dims),
    }
    if wit.conjugator is not None:
        out["conjugator"] = mat_to_json(wit.conjugator.matrix)
    return out


def check_rho(g: LieAlgebra, h: Subspace, toral_hint=None,
              chamber_budget: int = DEFAULT_CHAMBER_BUDGET,
              trials: int = 8, seed: int = 0) -> CriterionVerdict:
    """Decide the rho inequality through the toral weight systems."""
    a = find_toral(g, h, hint=toral_hint, trials=trials, seed=seed)
    report = rho_inequality(g, h, a, chamber_budget=chamber_budget)
    witness = {
        "chamber_count": report.chamber_count,
        "rays_checked": report.rays_checked,
        "vacuous": report.vacuous,
        "failing_ray": (vec_to_json(report.failing_ray)
                        if report.failing_ray is not None else None),
        "failing_element": (vec_to_json(report.failing_element)
                            if report.failing_element is not None else None),
    }
    note = ""
    if report.undetermined:
        note = "no rational toral subalgebra found; provide a hint"
    elif report.vacuous:
        note = "zero toral subalgebra: inequality holds vacuously"
    return CriterionVerdict("Rho", report.verdict, trials_used=0, seed=seed,
                            note=note, witness=witness, witness_obj=report)


def reductive_testable(g: LieAlgebra, h: Subspace) -> bool:
    """Killing form of g nondegenerate on h (the testable reductivity proxy)."""
    gram = g.killing_gram()
    restricted = tuple(tuple(g.killing(b, c) for c in h.basis) for b in h.basis)
    return la.rank_of(restricted) == h.dim


def check_ags(g: LieAlgebra, h: Subspace, trials: int = DEFAULT_TRIALS,
              seed: int = 0) -> CriterionVerdict:
    """Generic abelian-centralizer condition on the orthogonal of h."""
    if not reductive_testable(g, h):
        return CriterionVerdict("Ags", None, trials_used=0, seed=seed,
                                note="h is not reductive-testable")
    perp = g.orthogonal_complement(h)

    def centralizer_in_h_abelian(x):
        z = la.intersect_rowspaces(h.basis, g.centralizer(x).basis)
        for i in range(len(z)):
            for j in range(i + 1, len(z)):
                if not la.is_zero_vec(g.bracket(z[i], z[j])):
                    return False
        return True

    if perp.dim == 0:
        ok = centralizer_in_h_abelian(g.zero())
        return CriterionVerdict("Ags", ok, trials_used=1, seed=seed,
                                note="orthogonal complement is a single point")
    rng = random.Random(seed)
    passes = 0
    fails = 0
    for _ in range(trials):
        x = perp.random_element(rng)
        if centralizer_in_h_abelian(x):
            passes += 1
        else:
            fails += 1
    witness = {"passes": passes, "fails": fails}
    if fails == 0:
        return CriterionVerdict("Ags", True, trials_used=trials, seed=seed,
                                witness=witness)
    if fails * 2 > trials:
        return CriterionVerdict("Ags", False, trials_used=trials, seed=seed,
                                probabilistic=True, witness=witness)
    return CriterionVerdict("Ags", None, trials_used=trials, seed=seed,
                            note="mixed generic behaviour under budget",
                            witness=witness)


@dataclass
class PairOutcome:
    label: str
    verdicts: dict
    tem: Optional[bool]
    consistent: bool

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "criteria": {name: v.to_json() for name, v in sorted(self.verdicts.items())},
            "tem": {True: "true", False: "false", None: "undetermined"}[self.tem],
            "consistent": self.consistent,
        }


def check_tem(g: LieAlgebra, rd: Optional[RootDatum], h: Subspace,
              trials: int = DEFAULT_TRIALS, seed: int = 0,
              chamber_budget: int = DEFAULT_CHAMBER_BUDGET,
              toral_hint=None, label: str = "pair",
              with_ags: bool = True) -> PairOutcome:
    """Run all applicable criteria and aggregate them into a Tem verdict."""
    verdicts = {}
    verdicts["Rho"] = check_rho(g, h, toral_hint=toral_hint,
                                chamber_budget=chamber_budget,
                                seed=seed + SEED_OFFSETS["Rho"])
    verdicts["Orb"] = check_orb(g, h, trials=trials,
                                seed=seed + SEED_OFFSETS["Orb"])
    if rd is not None:
        verdicts["Tmu"] = check_tmu(g, rd, h, trials=trials,
                                    seed=seed + SEED_OFFSETS["Tmu"])
        verdicts["Sla"] = check_sla(g, rd, h, trials=trials,
                                    seed=seed + SEED_OFFSETS["Sla"])
    if with_ags:
        verdicts["Ags"] = check_ags(g, h, trials=trials,
                                    seed=seed + SEED_OFFSETS["Ags"])
    determined = [v.verdict for v in verdicts.values() if v.verdict is not None]
    consistent = len(set(determined)) <= 1
    tem = verdicts["Orb"].verdict
    return PairOutcome(label=label, verdicts=verdicts, tem=tem,
                       consistent=consistent)


# -- lemma-level property reports ------------------------------------------------


def property_minimal_centralizer(g: LieAlgebra, h: Subspace,
                                 samples: int = 20, seed: int = 0) -> dict:
    """Bracket of a minimal centralizer lands in the h-part of the centralizer.

    Samples X in the orthogonal of h, estimates the minimal centralizer
    dimension, and for each sample attaining it verifies exactly that the
    pairwise brackets of a centralizer basis stay inside h intersect z(X).
    """
    if not reductive_testable(g, h):
        return {"applicable": False}
    perp = g.orthogonal_complement(h)
    rng = random.Random(seed)
    points = []
    for _ in range(samples):
        x = perp.random_element(rng) if perp.dim else g.zero()
        points.append((x, g.centralizer(x)))
    min_dim = min(z.dim for _, z in points)
    checked = 0
    failures = 0
    for x, z in points:
        if z.dim != min_dim:
            continue
        checked += 1
        target = la.intersect_rowspaces(h.basis, z.basis)
        red, piv = la.rref(target)
        for i in range(z.dim):
            for j in range(i + 1, z.dim):
                b = g.bracket(z.basis[i], z.basis[j])
                if not la.is_zero_vec(b) and not la.in_rowspace(red, piv, b):
                    failures += 1
    return {"applicable": True, "samples": samples, "min_centralizer_dim": min_dim,
            "checked_at_min": checked, "failures": failures}


def property_levi_projection(g: LieAlgebra, rd: RootDatum, simple_subset,
                             samples: int = 20, seed: int = 0,
                             attempts_per_sample: int = 50) -> dict:
    """Regular elements of a parabolic have regular Levi components."""
    q, levi, _ = parabolic(g, rd, simple_subset)
    rng = random.Random(seed)
    rank = g.known_rank if g.known_rank is not None else g.rank()
    passes = 0
    failures = 0
    for _ in range(samples):
        x = None
        for _ in range(attempts_per_sample):
            candidate = q.random_element(rng)
            if g.is_regular(candidate):
                x = candidate
                break
        if x is None:
            raise ResourceBudgetError(
                "no regular element of the parabolic found within budget")
        # split x along q = levi + nilradical
        coords = la.solve(la.transpose(tuple(levi.basis) +
                                       tuple(b for b in q.basis
                                             if not levi.contains(b))), x)
        x_l = la.zero_vec(g.dim)
        for c, b in zip(coords[:levi.dim], levi.basis):
            if c:
                x_l = la.vec_add(x_l, la.vec_scale(c, b))
        z_l = la.intersect_rowspaces(levi.basis, g.centralizer(x_l).basis)
        if len(z_l) == rank:
            passes += 1
        else:
            failures += 1
    return {"samples": samples, "passes": passes, "failures": failures}
