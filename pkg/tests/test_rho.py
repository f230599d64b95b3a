"""Weight systems, rho values and the chamber/ray decision procedure."""

import random
from fractions import Fraction

import pytest

from temperlie import catalog as cat
from temperlie import linalg as la
from temperlie.core import Subspace, whole_subspace
from temperlie.errors import InputError, ResourceBudgetError
from temperlie.rho import (ToralSubalgebra, WeightSystem, candidate_rays,
                           chamber_count, find_toral, quotient_weight_system,
                           rho_combination_vanishes, rho_inequality, rho_value,
                           weight_system)

F = Fraction


def ws(weights, mults, dim=None):
    return WeightSystem(weights=tuple(tuple(map(F, w)) for w in weights),
                        multiplicities=tuple(mults), module_label="custom",
                        module_dim=dim or sum(mults))


# -- find_toral ------------------------------------------------------------------


def test_find_toral_borel():
    g, rd = cat.make_sl(2)
    b = cat.borel(g, rd)
    a = find_toral(g, b)
    assert a.dim == 1 and not a.undetermined
    assert Subspace(g, a.basis).same_space(Subspace(g, [g.unit(1)]))


def test_find_toral_nilpotent_is_zero():
    g, rd = cat.make_sl(2)
    line = Subspace(g, [g.unit(0)])
    a = find_toral(g, line)
    assert a.dim == 0 and not a.undetermined


def test_find_toral_principal():
    g, rd = cat.make_sl(3)
    p = cat.principal_sl2(g, rd)
    a = find_toral(g, p)
    assert a.dim == 1
    # the stamp is the solved middle element of the triple
    assert Subspace(g, a.basis).contains(p.basis[1])


def test_find_toral_hint_validation():
    g, rd = cat.make_sl(2)
    b = cat.borel(g, rd)
    with pytest.raises(InputError):
        find_toral(g, b, hint=[g.unit(2)])  # f is outside the Borel
    with pytest.raises(InputError):
        find_toral(g, b, hint=[g.unit(0)])  # e is not diagonalizable
    a = find_toral(g, b, hint=[g.unit(1)])
    assert a.dim == 1


def test_find_toral_search_without_stamp():
    g, rd = cat.make_sl(2)
    plain = Subspace(g, [g.unit(1), g.unit(0)])  # borel without metadata
    a = find_toral(g, plain, trials=8, seed=1)
    assert a.dim == 1 and not a.undetermined


# -- weight systems ----------------------------------------------------------------


def test_weight_system_borel_sl2():
    g, rd = cat.make_sl(2)
    b = cat.borel(g, rd)
    a = find_toral(g, b)
    sys_h = weight_system(g, a, b)
    assert list(sys_h.items()) == [((F(0),), 1), ((F(2),), 1)]
    sys_q = quotient_weight_system(g, a, b)
    assert list(sys_q.items()) == [((F(-2),), 1)]


def test_weight_system_principal_quotient():
    g, rd = cat.make_sl(3)
    p = cat.principal_sl2(g, rd)
    a = find_toral(g, p)
    sys_q = quotient_weight_system(g, a, p)
    assert sys_q.weights == ((F(-4),), (F(-2),), (F(0),), (F(2),), (F(4),))
    assert sys_q.multiplicities == (1, 1, 1, 1, 1)


def test_weight_system_requires_stability():
    g, rd = cat.make_sl(2)
    a = ToralSubalgebra(g, whole_subspace(g), (g.unit(1),))
    line = Subspace(g, [la.vec_add(g.unit(0), g.unit(2))])  # e + f, not h-stable
    with pytest.raises(InputError):
        weight_system(g, a, line)


def test_multiplicities_sum_to_dim():
    g, rd = cat.make_sl(4)
    b = cat.borel(g, rd)
    a = find_toral(g, b)
    sys_h = weight_system(g, a, b)
    sys_q = quotient_weight_system(g, a, b)
    assert sum(sys_h.multiplicities) == b.dim
    assert sum(sys_q.multiplicities) == g.dim - b.dim
    assert len(set(sys_h.weights)) == len(sys_h.weights)


# -- rho values -------------------------------------------------------------------


def test_rho_value_frozen():
    adjoint_sl2 = ws([[2], [0], [-2]], [1, 1, 1])
    assert rho_value(adjoint_sl2, (F(1),)) == 2
    assert rho_value(adjoint_sl2, (F(0),)) == 0
    v4 = ws([[4], [2], [0], [-2], [-4]], [1, 1, 1, 1, 1])
    assert rho_value(v4, (F(1),)) == 6


def test_rho_value_homogeneous_even():
    rng = random.Random(2)
    system = ws([[1, 2], [3, -1], [0, 1]], [2, 1, 3])
    for _ in range(10):
        y = (F(rng.randint(-9, 9)), F(rng.randint(-9, 9)))
        lam = F(rng.randint(0, 6))
        assert rho_value(system, la.vec_scale(lam, y)) == lam * rho_value(system, y)
        assert rho_value(system, tuple(-c for c in y)) == rho_value(system, y)


# -- arrangement machinery -----------------------------------------------------------


def test_candidate_rays_dim2():
    normals = [la.vec([1, 0]), la.vec([0, 1])]
    rays = candidate_rays(normals, 2)
    assert sorted(rays) == sorted([la.vec([1, 0]), la.vec([-1, 0]),
                                   la.vec([0, 1]), la.vec([0, -1])])
    assert chamber_count(normals, 2) == 4


def test_chamber_count_three_lines():
    normals = [la.vec([1, 0]), la.vec([0, 1]), la.vec([1, 1])]
    assert chamber_count(normals, 2) == 6


def test_chamber_count_weyl_a2():
    _, rd = cat.make_sl(3)
    normals = [la.primitive_vector(r) for r in rd.positive_roots]
    assert chamber_count(normals, 2) == 6  # order of the A2 reflection group


def test_ray_budget():
    normals = [la.vec([1, i, i * i]) for i in range(1, 9)]
    with pytest.raises(ResourceBudgetError):
        candidate_rays(normals, 3, budget=5)


# -- the inequality -------------------------------------------------------------------


def run_pair(label):
    pair = cat.resolve_pair(cat.builtin_pair(label))
    a = find_toral(pair.algebra, pair.subalgebra, hint=pair.toral_hint)
    return rho_inequality(pair.algebra, pair.subalgebra, a)


def test_borel_pair_equality():
    report = run_pair("sl2:borel")
    assert report.verdict is True
    assert report.rays_checked == 2 and report.chamber_count == 2
    for _, vh, vq in report.ray_table:
        assert vh == 1 and vq == 1


def test_whole_pair_fails_with_ray():
    report = run_pair("sl2:whole")
    assert report.verdict is False
    assert report.failing_ray is not None
    # the failing element evaluates to a strict violation
    g, rd = cat.make_sl(2)
    sub = whole_subspace(g)
    sub.toral_basis = rd.cartan_basis
    a = find_toral(g, sub)
    ws_h = weight_system(g, a, sub)
    assert rho_value(ws_h, report.failing_ray) > 0


def test_principal_pair():
    report = run_pair("sl3:principal-sl2")
    assert report.verdict is True
    for _, vh, vq in report.ray_table:
        assert (vh, vq) == (2, 6)


def test_nilpotent_pair_vacuous():
    report = run_pair("sl2:nilpotent-line")
    assert report.verdict is True and report.vacuous


def test_undetermined_toral():
    g, rd = cat.make_sl(2)
    b = Subspace(g, [g.unit(1), g.unit(0)])
    a = ToralSubalgebra(g, b, (), undetermined=True)
    report = rho_inequality(g, b, a)
    assert report.verdict is None and report.undetermined


def test_rho_additivity_whole_algebra():
    for label in ("sl3:borel", "sl4:cartan", "sl2+sl2:diagonal"):
        pair = cat.resolve_pair(cat.builtin_pair(label))
        g = pair.algebra
        a = find_toral(g, pair.subalgebra, hint=pair.toral_hint)
        ws_h = weight_system(g, a, pair.subalgebra)
        ws_q = quotient_weight_system(g, a, pair.subalgebra)
        ws_g = weight_system(g, a, whole_subspace(g), label="g")
        rng = random.Random(7)
        for _ in range(6):
            y = tuple(F(rng.randint(-9, 9)) for _ in range(a.dim))
            assert rho_value(ws_g, y) == rho_value(ws_h, y) + rho_value(ws_q, y)


def test_parabolic_identity_all_catalog():
    cases = [(cat.make_sl(3), [0]), (cat.make_sl(4), [0, 2]),
             (cat.make_so(5), [1]), (cat.make_sp(4), [0])]
    for (g, rd), subset in cases:
        _, levi, unip = cat.parabolic(g, rd, subset)
        cartan = cat.cartan_subalgebra(g, rd)
        a = find_toral(g, cartan)
        ws_g = weight_system(g, a, whole_subspace(g), label="g")
        ws_l = weight_system(g, a, levi, label="l")
        ws_u = weight_system(g, a, unip, label="u")
        ok, bad = rho_combination_vanishes([(1, ws_g), (-1, ws_l), (-2, ws_u)],
                                           a.dim)
        assert ok, bad
