"""The five conditions: spec'd examples, witness verification, properties."""

import pytest

from temperlie import catalog as cat
from temperlie import linalg as la
from temperlie.core import Subspace, whole_subspace, zero_subspace
from temperlie.criteria import (check_ags, check_orb, check_rho, check_sla,
                                check_tem, check_tmu,
                                property_levi_projection,
                                property_minimal_centralizer, reductive_testable)


def resolved(label):
    return cat.resolve_pair(cat.builtin_pair(label))


# -- Orb ------------------------------------------------------------------------


def test_orb_whole_algebra_false():
    pair = resolved("sl2:whole")
    verdict = check_orb(pair.algebra, pair.subalgebra, trials=4, seed=1)
    assert verdict.verdict is False
    assert not verdict.probabilistic  # zero orthogonal complement is exact


def test_orb_borel_true_with_witness():
    pair = resolved("sl2:borel")
    verdict = check_orb(pair.algebra, pair.subalgebra, trials=8, seed=1)
    assert verdict.verdict is True
    x = verdict.witness_obj
    g = pair.algebra
    # witness is exactly verified: orthogonal to h and regular
    for b in pair.subalgebra.basis:
        assert g.killing(x, b) == 0
    assert g.centralizer(x).dim == g.known_rank


def test_orb_diagonal_true():
    pair = resolved("sl2+sl2:diagonal")
    verdict = check_orb(pair.algebra, pair.subalgebra, trials=8, seed=2)
    assert verdict.verdict is True


def test_orb_false_is_probabilistic():
    pair = resolved("sl3:parabolic-0")
    verdict = check_orb(pair.algebra, pair.subalgebra, trials=12, seed=3)
    assert verdict.verdict is False and verdict.probabilistic
    assert verdict.trials_used == 12


# -- Tmu ------------------------------------------------------------------------


def test_tmu_zero_subalgebra():
    pair = resolved("sl2:zero")
    verdict = check_tmu(pair.algebra, pair.root_datum, pair.subalgebra,
                        trials=4, seed=1)
    assert verdict.verdict is True
    assert verdict.trials_used == 1  # identity already works


def test_tmu_nilpotent_line():
    pair = resolved("sl2:nilpotent-line")
    verdict = check_tmu(pair.algebra, pair.root_datum, pair.subalgebra,
                        trials=8, seed=1)
    assert verdict.verdict is True
    phi = verdict.witness_obj
    moved = phi.apply_subspace(pair.subalgebra)
    n = cat.maximal_unipotent(pair.algebra, pair.root_datum)
    assert la.intersection_dim(moved.basis, n.basis) == 0


def test_tmu_whole_algebra_dimension_count():
    pair = resolved("sl2:whole")
    verdict = check_tmu(pair.algebra, pair.root_datum, pair.subalgebra,
                        trials=8, seed=1)
    assert verdict.verdict is False
    assert not verdict.probabilistic and verdict.trials_used == 0


def test_tmu_first_factor_exhausts_budget():
    pair = resolved("sl2+sl2:first-factor")
    verdict = check_tmu(pair.algebra, pair.root_datum, pair.subalgebra,
                        trials=10, seed=1)
    assert verdict.verdict is False and verdict.probabilistic


# -- Sla ------------------------------------------------------------------------


def test_sla_borel_immediate():
    pair = resolved("sl2:borel")
    verdict = check_sla(pair.algebra, pair.root_datum, pair.subalgebra,
                        trials=8, seed=1)
    assert verdict.verdict is True
    assert verdict.trials_used == 0
    assert "solvable" in verdict.note


def test_sla_diagonal_contraction():
    pair = resolved("sl2+sl2:diagonal")
    verdict = check_sla(pair.algebra, pair.root_datum, pair.subalgebra,
                        trials=16, seed=1)
    assert verdict.verdict is True
    wit = verdict.witness_obj
    g = pair.algebra
    assert wit.limit.dim == 3
    assert g.is_solvable(wit.limit)
    assert cat.opposite_borel(g, pair.root_datum).contains_subspace(wit.limit)


def test_sla_whole_false():
    pair = resolved("sl2:whole")
    verdict = check_sla(pair.algebra, pair.root_datum, pair.subalgebra,
                        trials=8, seed=1)
    assert verdict.verdict is False


# -- Rho ------------------------------------------------------------------------


def test_rho_examples():
    for label, expected in (("sl2:borel", True), ("sl2:whole", False),
                            ("sl3:principal-sl2", True)):
        pair = resolved(label)
        verdict = check_rho(pair.algebra, pair.subalgebra,
                            toral_hint=pair.toral_hint, seed=1)
        assert verdict.verdict is expected, label


def test_rho_undetermined_without_toral():
    g, _ = cat.make_so(5)
    # an sl(2)-triple subalgebra built from a long root, without any stamp
    _, rd = cat.make_so(5)
    root = rd.positive_roots[-1]
    e = rd.root_vectors[root]
    f = rd.root_vectors[tuple(-x for x in root)]
    h = g.bracket(e, f)
    sub = Subspace(g, [e, h, f])
    assert g.check_subalgebra(sub)
    verdict = check_rho(g, sub, trials=0, seed=1)  # search disabled
    assert verdict.verdict is None


# -- Ags ------------------------------------------------------------------------


def test_ags_zero_subalgebra():
    pair = resolved("sl2:zero")
    verdict = check_ags(pair.algebra, pair.subalgebra, trials=8, seed=1)
    assert verdict.verdict is True


def test_ags_diagonal():
    pair = resolved("sl2+sl2:diagonal")
    verdict = check_ags(pair.algebra, pair.subalgebra, trials=8, seed=1)
    assert verdict.verdict is True


def test_ags_whole_semisimple_false():
    pair = resolved("sl2:whole")
    verdict = check_ags(pair.algebra, pair.subalgebra, trials=8, seed=1)
    assert verdict.verdict is False
    assert not verdict.probabilistic  # single-point orthogonal, exact


def test_ags_not_applicable_for_borel():
    pair = resolved("sl2:borel")
    assert not reductive_testable(pair.algebra, pair.subalgebra)
    verdict = check_ags(pair.algebra, pair.subalgebra, trials=4, seed=1)
    assert verdict.verdict is None


# -- Tem aggregation ---------------------------------------------------------------


def test_tem_borel_consistent():
    pair = resolved("sl2:borel")
    outcome = check_tem(pair.algebra, pair.root_datum, pair.subalgebra,
                        trials=8, seed=42, label=pair.label)
    assert outcome.tem is True and outcome.consistent
    assert {"Rho", "Orb", "Tmu", "Sla", "Ags"} == set(outcome.verdicts)


def test_tem_whole_all_false():
    pair = resolved("sl2:whole")
    outcome = check_tem(pair.algebra, pair.root_datum, pair.subalgebra,
                        trials=8, seed=42, label=pair.label)
    assert outcome.tem is False and outcome.consistent
    determined = [v.verdict for v in outcome.verdicts.values()
                  if v.verdict is not None]
    assert determined and all(v is False for v in determined)


def test_tem_verdict_equals_orb():
    for label in ("sl3:cartan", "sl3:parabolic-0", "sl2+sl2:first-factor"):
        pair = resolved(label)
        outcome = check_tem(pair.algebra, pair.root_datum, pair.subalgebra,
                            trials=12, seed=7, toral_hint=pair.toral_hint,
                            label=label)
        assert outcome.tem == outcome.verdicts["Orb"].verdict


# -- lemma-level properties ----------------------------------------------------------


def test_minimal_centralizer_zero_subalgebra():
    g, _ = cat.make_sl(2)
    report = property_minimal_centralizer(g, zero_subspace(g), samples=10, seed=3)
    assert report["applicable"]
    assert report["min_centralizer_dim"] == 1  # generic elements are regular
    assert report["failures"] == 0


def test_minimal_centralizer_diagonal():
    pair = resolved("sl2+sl2:diagonal")
    report = property_minimal_centralizer(pair.algebra, pair.subalgebra,
                                          samples=10, seed=3)
    assert report["applicable"] and report["failures"] == 0


def test_minimal_centralizer_not_applicable():
    pair = resolved("sl2:borel")
    report = property_minimal_centralizer(pair.algebra, pair.subalgebra,
                                          samples=4, seed=3)
    assert report == {"applicable": False}


def test_levi_projection_borel_case():
    g, rd = cat.make_sl(3)
    report = property_levi_projection(g, rd, [], samples=10, seed=5)
    assert report["failures"] == 0


def test_levi_projection_sl3():
    g, rd = cat.make_sl(3)
    report = property_levi_projection(g, rd, [0], samples=20, seed=5)
    assert report == {"samples": 20, "passes": 20, "failures": 0}


# -- derived-subalgebra and Ad stability ----------------------------------------------


def test_sla_derived_stability():
    for label in ("sl2:borel", "sl2+sl2:diagonal", "sl3:whole"):
        pair = resolved(label)
        g, rd = pair.algebra, pair.root_datum
        base = check_sla(g, rd, pair.subalgebra, trials=12, seed=11)
        derived = g.bracket_span(pair.subalgebra, pair.subalgebra)
        again = check_sla(g, rd, derived, trials=12, seed=11)
        assert base.verdict == again.verdict, label


def test_verdicts_ad_invariant():
    pair = resolved("sl3:principal-sl2")
    g, rd = pair.algebra, pair.root_datum
    base = check_tem(g, rd, pair.subalgebra, trials=12, seed=13, label="base")
    phi = g.random_automorphism(g.dim, seed=99)
    moved = phi.apply_subspace(pair.subalgebra)
    again = check_tem(g, rd, moved, trials=12, seed=13, label="moved")
    for name in base.verdicts:
        assert base.verdicts[name].verdict == again.verdicts[name].verdict, name
