"""Invariant suites behind the selftest command.

Each suite is a list of (name, callable) pairs run at reduced sample counts;
a callable raises AssertionError to fail.  The corruption switch feeds a
deliberately broken structure-constant fixture into the Jacobi check so the
negative control path is exercisable from the command line.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import catalog as cat
from . import criteria as cr
from . import linalg as la
from .core import LieAlgebra, Subspace
from .degeneration import float_flow_distance, subspace_limit, weight_grading
from .errors import InputError
from .rho import (find_toral, quotient_weight_system, rho_combination_vanishes,
                  rho_inequality, rho_value, weight_system)

FAST_PAIRS = [
    "sl2:zero", "sl2:cartan", "sl2:nilpotent-line", "sl2:split-toral-line",
    "sl2:borel", "sl2:whole", "sl3:borel", "sl3:cartan", "sl3:principal-sl2",
    "sl2+sl2:diagonal", "sl2+sl2:first-factor",
]

CATALOG_ALGEBRAS = [
    ("sl2", lambda: cat.make_sl(2)),
    ("sl3", lambda: cat.make_sl(3)),
    ("sl4", lambda: cat.make_sl(4)),
    ("so4", lambda: cat.make_so(4)),
    ("so5", lambda: cat.make_so(5)),
    ("sp4", lambda: cat.make_sp(4)),
    ("sl2+sl2", lambda: cat.resolve_algebra({"type": "sum",
                                             "terms": [cat.SL2, cat.SL2]})),
]


def _resolved(label, seed=0):
    return cat.resolve_pair(cat.builtin_pair(label), rank_seed=seed)


def _corrupted_sl2() -> LieAlgebra:
    # one wrong entry: [e, f] = h + e breaks Jacobi but not antisymmetry
    c = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    c[0][1] = [-2, 0, 0]
    c[1][0] = [2, 0, 0]
    c[0][2] = [1, 1, 0]
    c[2][0] = [-1, -1, 0]
    c[1][2] = [0, 0, -2]
    c[2][1] = [0, 0, 2]
    return LieAlgebra(c, basis_labels=("e", "h", "f"), rank=1, validate=False)


# -- core suite -------------------------------------------------------------


def check_jacobi_validation(corrupt=False):
    g3, _ = cat.make_sl(3)
    g3._validate_structure()
    if corrupt:
        bad = _corrupted_sl2()
        try:
            bad._validate_structure()
        except InputError:
            pass
        else:
            raise AssertionError("corrupted constants were not caught")
        # the fixture must actually be broken for the control to mean anything
        bad_again = _corrupted_sl2()
        bad_again._validate_structure()  # raises InputError: reported as failure


def check_killing_invariance():
    g, _ = cat.make_sl(3)
    rng = random.Random(11)
    for _ in range(8):
        x, y, z = (g.random_element(rng, bound=9) for _ in range(3))
        lhs = g.killing(g.bracket(x, y), z) + g.killing(y, g.bracket(x, z))
        assert lhs == 0


def check_automorphism_bracket():
    g, _ = cat.make_sl(3)
    phi = g.random_automorphism(6, seed=5)
    assert phi.preserves_bracket()


def check_orthogonal_dimension():
    for label in ("sl3:borel", "sl3:cartan", "sl3:principal-sl2"):
        pair = _resolved(label)
        perp = pair.algebra.orthogonal_complement(pair.subalgebra)
        assert perp.dim + pair.subalgebra.dim == pair.algebra.dim


def check_centralizer_closed():
    g, _ = cat.make_sl(3)
    rng = random.Random(3)
    for _ in range(4):
        z = g.centralizer(g.random_element(rng, bound=9))
        assert g.check_subalgebra(z)


def check_regularity_ad_invariant():
    g, _ = cat.make_sl(3)
    rng = random.Random(7)
    phi = g.random_automorphism(6, seed=13)
    for _ in range(6):
        x = g.random_element(rng, bound=9)
        assert g.is_regular(x) == g.is_regular(phi.apply(x))


def check_rank_additivity():
    gsum, _ = cat.direct_sum(cat.make_sl(2), cat.make_sl(3))
    assert gsum.rank(trials=4, seed=2) == 1 + 2


def check_exp_inverse():
    g, rd = cat.make_sl(3)
    for r in rd.simple_roots:
        x = rd.root_vectors[r]
        product = la.mat_mul(g.exp_ad(x).matrix,
                             g.exp_ad(la.vec_scale(Fraction(-1), x)).matrix)
        assert product == la.identity(g.dim)


# -- constructors suite -------------------------------------------------------


def check_semisimple_catalog():
    for _, maker in CATALOG_ALGEBRAS:
        g, _ = maker()
        assert g.is_semisimple()


def check_root_counts():
    for _, maker in CATALOG_ALGEBRAS:
        g, rd = maker()
        assert len(rd.roots) == g.dim - rd.rank
        root_set = set(rd.roots)
        for r in rd.roots:
            assert tuple(-x for x in r) in root_set


def check_root_vector_weights():
    for _, maker in CATALOG_ALGEBRAS:
        g, rd = maker()
        for r in rd.roots:
            x = rd.root_vectors[r]
            for value, t in zip(r, rd.cartan_basis):
                assert g.bracket(t, x) == la.vec_scale(value, x)


def check_parabolic_structure():
    for name, subset in (("sl3", [0]), ("sl4", [0, 2]), ("so5", [0]), ("sp4", [1])):
        g, rd = dict(CATALOG_ALGEBRAS)[name]()
        q, levi, unip = cat.parabolic(g, rd, subset)
        assert q.dim == levi.dim + unip.dim
        assert g.is_unipotent_subalgebra(unip)
        assert cr.reductive_testable(g, levi)
        assert g.orthogonal_complement(q).same_space(
            Subspace(g, unip.basis, check_independent=False))


def check_borel_orthogonal():
    for _, maker in CATALOG_ALGEBRAS:
        g, rd = maker()
        assert g.orthogonal_complement(cat.borel(g, rd)).same_space(
            cat.maximal_unipotent(g, rd))


def check_dynkin_regular():
    for _, maker in CATALOG_ALGEBRAS:
        g, rd = maker()
        e = la.zero_vec(g.dim)
        for r in rd.simple_roots:
            e = la.vec_add(e, rd.root_vectors[r])
        assert g.centralizer(e).dim == rd.rank


def check_principal_sl2():
    for name in ("sl2", "sl3", "sl4", "sp4"):
        g, rd = dict(CATALOG_ALGEBRAS)[name]()
        sub = cat.principal_sl2(g, rd)
        e, h, f = sub.basis
        assert g.bracket(h, e) == la.vec_scale(Fraction(2), e)
        assert g.bracket(h, f) == la.vec_scale(Fraction(-2), f)
        assert g.bracket(e, f) == h


# -- rho suite ----------------------------------------------------------------


def check_rho_homogeneity():
    pair = _resolved("sl3:principal-sl2")
    g = pair.algebra
    a = find_toral(g, pair.subalgebra)
    ws = weight_system(g, a, pair.subalgebra)
    rng = random.Random(23)
    for _ in range(6):
        y = tuple(Fraction(rng.randint(-9, 9)) for _ in range(a.dim))
        lam = Fraction(rng.randint(0, 5))
        assert rho_value(ws, la.vec_scale(lam, y)) == lam * rho_value(ws, y)
        assert rho_value(ws, tuple(-v for v in y)) == rho_value(ws, y)


def check_rho_additivity():
    for label in ("sl2:borel", "sl3:borel", "sl3:principal-sl2", "sl2+sl2:diagonal"):
        pair = _resolved(label)
        g = pair.algebra
        a = find_toral(g, pair.subalgebra, hint=pair.toral_hint)
        ws_h = weight_system(g, a, pair.subalgebra)
        ws_q = quotient_weight_system(g, a, pair.subalgebra)
        from .core import whole_subspace
        ws_g = weight_system(g, a, whole_subspace(g), label="g")
        rng = random.Random(31)
        for _ in range(5):
            y = tuple(Fraction(rng.randint(-9, 9)) for _ in range(a.dim))
            assert rho_value(ws_g, y) == rho_value(ws_h, y) + rho_value(ws_q, y)


def check_diagonal_equality():
    pair = _resolved("sl2+sl2:diagonal")
    g = pair.algebra
    a = find_toral(g, pair.subalgebra)
    report = rho_inequality(g, pair.subalgebra, a)
    assert report.verdict is True
    for _, vh, vq in report.ray_table:
        assert vh == vq


def check_borel_equality():
    for _, maker in CATALOG_ALGEBRAS:
        g, rd = maker()
        b = cat.borel(g, rd)
        a = find_toral(g, b)
        report = rho_inequality(g, b, a)
        assert report.verdict is True
        for _, vh, vq in report.ray_table:
            assert vh - vq == 0


def check_parabolic_rho_identity():
    for name, subset in (("sl3", [0]), ("sl4", [1]), ("so5", [0]), ("sp4", [0])):
        g, rd = dict(CATALOG_ALGEBRAS)[name]()
        q, levi, unip = cat.parabolic(g, rd, subset)
        cartan = cat.cartan_subalgebra(g, rd)
        a = find_toral(g, cartan)
        from .core import whole_subspace
        ws_g = weight_system(g, a, whole_subspace(g), label="g")
        ws_l = weight_system(g, a, levi, label="l")
        ws_u = weight_system(g, a, unip, label="u")
        ok, bad = rho_combination_vanishes(
            [(1, ws_g), (-1, ws_l), (-2, ws_u)], a.dim)
        assert ok, "identity fails at %s" % (bad,)


def check_limit_preserves_rho():
    pair = _resolved("sl2+sl2:diagonal")
    g, rd = pair.algebra, pair.root_datum
    verdict = cr.check_sla(g, rd, pair.subalgebra, trials=16, seed=3)
    assert verdict.verdict is True
    limit = verdict.witness_obj.limit
    a = find_toral(g, limit, trials=8, seed=5)
    report = rho_inequality(g, limit, a)
    assert report.verdict in (True, None) and report.verdict is not False


# -- degeneration suite --------------------------------------------------------


def _random_closed_subspaces(seed, count):
    g, rd = cat.make_sl(3)
    pool = [
        cat.borel(g, rd),
        cat.maximal_unipotent(g, rd),
        cat.cartan_subalgebra(g, rd),
        cat.principal_sl2(g, rd),
        cat.parabolic(g, rd, [0])[0],
        cat.parabolic(g, rd, [0])[2],
        Subspace(g, [la.vec_add(rd.root_vectors[rd.simple_roots[0]],
                                rd.root_vectors[rd.simple_roots[1]])]),
    ]
    rng = random.Random(seed)
    out = []
    for i in range(count):
        base = pool[rng.randrange(len(pool))]
        phi = g.random_automorphism(6, seed=rng.randrange(10 ** 6))
        moved = phi.apply_subspace(base)
        out.append((g, rd, moved))
    return out


def check_limit_idempotent():
    for g, rd, w in _random_closed_subspaces(41, 4):
        grading = weight_grading(g, rd.strictly_dominant())
        lim = subspace_limit(grading, w, -1)
        again = subspace_limit(grading, lim, -1)
        assert again.same_space(lim)


def check_limit_dimension():
    for g, rd, w in _random_closed_subspaces(43, 4):
        grading = weight_grading(g, rd.strictly_dominant())
        assert subspace_limit(grading, w, -1).dim == w.dim


def check_limit_closure():
    for g, rd, w in _random_closed_subspaces(47, 4):
        grading = weight_grading(g, rd.strictly_dominant())
        lim = subspace_limit(grading, w, -1)
        assert g.check_subalgebra(lim)


def check_limit_derived_compat():
    for g, rd, w in _random_closed_subspaces(53, 4):
        grading = weight_grading(g, rd.strictly_dominant())
        lim = subspace_limit(grading, w, -1)
        derived = g.bracket_span(w, w)
        if derived.dim == 0:
            continue
        lim_derived = subspace_limit(grading, derived, -1)
        bracket_of_limit = g.bracket_span(lim, lim)
        assert lim_derived.contains_subspace(bracket_of_limit)


def check_float_crosscheck():
    for g, rd, w in _random_closed_subspaces(59, 4):
        grading = weight_grading(g, rd.strictly_dominant())
        assert float_flow_distance(grading, w, 16.0) < 1e-6


# -- criteria suite --------------------------------------------------------------


def check_five_way_agreement():
    for label in FAST_PAIRS:
        pair = _resolved(label)
        outcome = cr.check_tem(pair.algebra, pair.root_datum, pair.subalgebra,
                               trials=16, seed=7, toral_hint=pair.toral_hint,
                               label=label)
        assert outcome.consistent, "inconsistent verdicts on %s" % label
        if pair.expected_verdict is not None:
            assert outcome.tem == pair.expected_verdict, label


def check_derived_stability():
    for label in ("sl2:borel", "sl3:borel", "sl2+sl2:diagonal", "sl2:whole"):
        pair = _resolved(label)
        g, rd = pair.algebra, pair.root_datum
        base = cr.check_sla(g, rd, pair.subalgebra, trials=16, seed=9)
        derived = g.bracket_span(pair.subalgebra, pair.subalgebra)
        stable = cr.check_sla(g, rd, derived, trials=16, seed=9)
        assert base.verdict == stable.verdict, label


def check_ad_invariance():
    for label in ("sl2:borel", "sl3:principal-sl2", "sl2+sl2:first-factor"):
        pair = _resolved(label)
        g, rd = pair.algebra, pair.root_datum
        base = cr.check_tem(g, rd, pair.subalgebra, trials=16, seed=15,
                            toral_hint=pair.toral_hint, label=label)
        phi = g.random_automorphism(g.dim, seed=77)
        moved = phi.apply_subspace(pair.subalgebra)
        hint = (tuple(phi.apply(t) for t in pair.toral_hint)
                if pair.toral_hint else None)
        again = cr.check_tem(g, rd, moved, trials=16, seed=15,
                             toral_hint=hint, label=label)
        for name in base.verdicts:
            assert base.verdicts[name].verdict == again.verdicts[name].verdict, \
                (label, name)


def check_ags_orb_agreement():
    for label in ("sl2:zero", "sl2:cartan", "sl3:principal-sl2",
                  "sl2+sl2:diagonal", "sl2+sl2:first-factor", "sl2:whole"):
        pair = _resolved(label)
        ags = cr.check_ags(pair.algebra, pair.subalgebra, trials=12, seed=19)
        orb = cr.check_orb(pair.algebra, pair.subalgebra, trials=12, seed=21)
        if ags.verdict is not None:
            assert ags.verdict == orb.verdict, label


def check_semisimple_density():
    pair = _resolved("sl3:principal-sl2")
    g = pair.algebra
    perp = g.orthogonal_complement(pair.subalgebra)
    rng = random.Random(29)
    good = 0
    total = 20
    for _ in range(total):
        x = perp.random_element(rng)
        if la.poly_is_squarefree(la.minimal_polynomial(g.ad(x))):
            good += 1
    assert good >= int(0.9 * total)


def check_minimal_centralizer_lemma():
    for label in ("sl2:zero", "sl2:cartan", "sl2+sl2:diagonal",
                  "sl3:principal-sl2"):
        pair = _resolved(label)
        report = cr.property_minimal_centralizer(pair.algebra, pair.subalgebra,
                                                 samples=10, seed=31)
        assert report["applicable"] and report["failures"] == 0, label


def check_levi_projection_lemma():
    g, rd = cat.make_sl(3)
    report = cr.property_levi_projection(g, rd, [0], samples=10, seed=37)
    assert report["failures"] == 0


def check_openness_coherence():
    rng = random.Random(61)
    for label in ("sl2:nilpotent-line", "sl2:split-toral-line",
                  "sl3:regular-nilpotent-line"):
        pair = _resolved(label)
        g = pair.algebra
        base = cr.check_orb(g, pair.subalgebra, trials=16, seed=43)
        found = 0
        for _ in range(10):
            if found >= 3:
                break
            perturbed_rows = []
            for b in pair.subalgebra.basis:
                delta = tuple(Fraction(rng.randint(-1, 1), 8) for _ in range(g.dim))
                perturbed_rows.append(la.vec_add(b, delta))
            try:
                sub = Subspace(g, perturbed_rows)
            except InputError:
                continue
            if not g.check_subalgebra(sub):
                continue
            found += 1
            again = cr.check_orb(g, sub, trials=16, seed=43)
            assert again.verdict == base.verdict, label


SUITES = {
    "core": [
        ("core:jacobi-identity", check_jacobi_validation),
        ("core:killing-invariance", check_killing_invariance),
        ("core:automorphism-bracket", check_automorphism_bracket),
        ("core:orthogonal-dimension", check_orthogonal_dimension),
        ("core:centralizer-closed", check_centralizer_closed),
        ("core:regularity-ad-invariant", check_regularity_ad_invariant),
        ("core:rank-additivity", check_rank_additivity),
        ("core:exp-inverse", check_exp_inverse),
    ],
    "constructors": [
        ("constructors:semisimple-catalog", check_semisimple_catalog),
        ("constructors:root-counts", check_root_counts),
        ("constructors:root-vector-weights", check_root_vector_weights),
        ("constructors:parabolic-structure", check_parabolic_structure),
        ("constructors:borel-orthogonal", check_borel_orthogonal),
        ("constructors:dynkin-regular", check_dynkin_regular),
        ("constructors:principal-sl2", check_principal_sl2),
    ],
    "rho": [
        ("rho:homogeneity-evenness", check_rho_homogeneity),
        ("rho:additivity", check_rho_additivity),
        ("rho:diagonal-equality", check_diagonal_equality),
        ("rho:borel-equality", check_borel_equality),
        ("rho:parabolic-identity", check_parabolic_rho_identity),
        ("rho:limit-preserves-rho", check_limit_preserves_rho),
    ],
    "degeneration": [
        ("degeneration:idempotent", check_limit_idempotent),
        ("degeneration:dimension", check_limit_dimension),
        ("degeneration:closure", check_limit_closure),
        ("degeneration:derived-compat", check_limit_derived_compat),
        ("degeneration:float-crosscheck", check_float_crosscheck),
    ],
    "criteria": [
        ("criteria:five-way-agreement", check_five_way_agreement),
        ("criteria:derived-stability", check_derived_stability),
        ("criteria:ad-invariance", check_ad_invariance),
        ("criteria:ags-orb", check_ags_orb_agreement),
        ("criteria:semisimple-density", check_semisimple_density),
        ("criteria:minimal-centralizer", check_minimal_centralizer_lemma),
        ("criteria:levi-projection", check_levi_projection_lemma),
        ("criteria:openness-coherence", check_openness_coherence),
    ],
}


def run_suites(names=None, inject_corruption=False):
    """Run the requested suites; returns (all_passed, report lines)."""
    lines = []
    all_ok = True
    selected = names or sorted(SUITES)
    for suite_name in selected:
        if suite_name not in SUITES:
            raise InputError("unknown suite %r" % suite_name)
        passed = 0
        failed = []
        for check_name, fn in SUITES[suite_name]:
            try:
                if check_name == "core:jacobi-identity":
                    fn(corrupt=inject_corruption)
                else:
                    fn()
                passed += 1
            except Exception as exc:  # report and keep going
                failed.append((check_name, "%s: %s" % (type(exc).__name__, exc)))
        lines.append("suite %-13s %d/%d passed"
                     % (suite_name, passed, passed + len(failed)))
        for name, msg in failed:
            all_ok = False
            lines.append("  FAIL %s: %s" % (name, msg))
    return all_ok, lines
