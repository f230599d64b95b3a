"""Constructors: dimensions, root data, standard subalgebras, pair resolution."""

import pytest

from temperlie import linalg as la
from temperlie import catalog as cat
from temperlie.core import Subspace
from temperlie.criteria import reductive_testable
from temperlie.errors import InputError

ALGEBRAS = {
    "sl2": (cat.make_sl, 2, 3, 1),
    "sl3": (cat.make_sl, 3, 8, 2),
    "sl4": (cat.make_sl, 4, 15, 3),
    "so4": (cat.make_so, 4, 6, 2),
    "so5": (cat.make_so, 5, 10, 2),
    "sp4": (cat.make_sp, 4, 10, 2),
}


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_algebra_dimensions(name):
    maker, n, dim, rank = ALGEBRAS[name]
    g, rd = maker(n)
    assert g.dim == dim
    assert g.rank_metadata == rank
    assert len(rd.roots) == dim - rank
    assert g.is_semisimple()


def test_parameter_validation():
    with pytest.raises(InputError):
        cat.make_sl(1)
    with pytest.raises(InputError):
        cat.make_so(2)
    with pytest.raises(InputError):
        cat.make_sp(3)


def test_so4_killing_gram_full_rank():
    g, _ = cat.make_so(4)
    assert la.rank_of(g.killing_gram()) == 6


def test_direct_sum():
    g2, rd2 = cat.make_sl(2)
    gsum, rdsum = cat.direct_sum((g2, rd2), (g2, rd2))
    assert gsum.dim == 6
    assert gsum.rank_metadata == 2
    assert len(rdsum.roots) == 4
    # Killing form is block diagonal
    gram = gsum.killing_gram()
    for i in range(3):
        for j in range(3, 6):
            assert gram[i][j] == 0
    assert gsum.rank(trials=4, seed=0) == 2


def test_root_vectors_are_eigenvectors():
    g, rd = cat.make_sp(4)
    for root in rd.roots:
        x = rd.root_vectors[root]
        for value, t in zip(root, rd.cartan_basis):
            assert g.bracket(t, x) == la.vec_scale(value, x)


def test_positive_roots_integer_simple_coords():
    for name in sorted(ALGEBRAS):
        maker, n, _, _ = ALGEBRAS[name]
        _, rd = maker(n)
        for r in rd.positive_roots:
            coords = rd.simple_coords[r]
            assert all(isinstance(c, int) and c >= 0 for c in coords)
            assert any(c > 0 for c in coords)


def test_borel_and_unipotent():
    g, rd = cat.make_sl(2)
    b = cat.borel(g, rd)
    assert sorted(tuple(v) for v in b.basis) == sorted(
        [tuple(g.unit(0)), tuple(g.unit(1))])
    g3, rd3 = cat.make_sl(3)
    n3 = cat.maximal_unipotent(g3, rd3)
    assert n3.dim == 3
    for i in (0, 1, 2):  # E12, E13, E23 span the strictly upper triangulars
        assert n3.contains(g3.unit(i))
    nminus = cat.opposite_unipotent(g3, rd3)
    assert la.intersection_dim(cat.borel(g3, rd3).basis, nminus.basis) == 0
    assert cat.borel(g3, rd3).dim + nminus.dim == g3.dim


def test_parabolic_cases():
    g3, rd3 = cat.make_sl(3)
    q, l, u = cat.parabolic(g3, rd3, [])
    assert q.same_space(cat.borel(g3, rd3))
    assert l.same_space(cat.cartan_subalgebra(g3, rd3))
    assert u.same_space(cat.maximal_unipotent(g3, rd3))
    q, l, u = cat.parabolic(g3, rd3, [0])
    assert (q.dim, l.dim, u.dim) == (6, 4, 2)
    g4, rd4 = cat.make_sl(4)
    q, l, u = cat.parabolic(g4, rd4, [0, 2])
    assert (q.dim, l.dim, u.dim) == (11, 7, 4)
    with pytest.raises(InputError):
        cat.parabolic(g3, rd3, [5])


def test_parabolic_orthogonal_and_reductive():
    g, rd = cat.make_sl(4)
    q, l, u = cat.parabolic(g, rd, [1])
    assert g.orthogonal_complement(q).same_space(
        Subspace(g, u.basis, check_independent=False))
    assert reductive_testable(g, l)
    assert g.is_unipotent_subalgebra(u)


def test_principal_sl2():
    g, rd = cat.make_sl(2)
    p = cat.principal_sl2(g, rd)
    assert p.dim == 3 and p.same_space(Subspace(g, la.identity(3)))
    g3, rd3 = cat.make_sl(3)
    p3 = cat.principal_sl2(g3, rd3)
    e, h, f = p3.basis
    assert g3.bracket(e, f) == h
    assert g3.bracket(h, e) == la.vec_scale(la.frac(2), e)
    # ad H eigenvalues on g: the 4-dimensional irreducible summand shows +-4
    assert la.rational_eigenvalues(g3.ad(h)) == tuple(
        map(la.frac, (-4, -2, 0, 2, 4)))
    assert g3.check_subalgebra(p3)


def test_diagonal_embedding():
    g, rd = cat.make_sl(2)
    gsum, rdsum, diag = cat.diagonal_embedding(g, rd)
    assert diag.dim == 3 and gsum.dim == 6
    perp = gsum.orthogonal_complement(diag)
    for b in la.identity(3):
        anti = tuple(b) + tuple(-x for x in b)
        assert perp.contains(anti)
    # quotient is isomorphic to the diagonal as a module: equal weight multisets
    from temperlie.rho import find_toral, quotient_weight_system, weight_system
    a = find_toral(gsum, diag)
    ws_h = weight_system(gsum, a, diag)
    ws_q = quotient_weight_system(gsum, a, diag)
    assert ws_h.weights == ws_q.weights
    assert ws_h.multiplicities == ws_q.multiplicities


def test_resolve_pair_presets():
    pair = cat.resolve_pair(cat.PairSpec(
        algebra={"type": "sl", "n": 2}, subalgebra={"preset": "borel"},
        label="b"))
    assert pair.subalgebra.dim == 2
    pair = cat.resolve_pair(cat.PairSpec(
        algebra={"type": "sl", "n": 3},
        subalgebra={"basis": [[0, 1, 0, 0, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0, 0, 0]]},
        label="abelian-nilradical"))
    assert pair.subalgebra.dim == 2
    assert pair.algebra.check_subalgebra(pair.subalgebra)


def test_resolve_pair_rejects_nonclosed():
    with pytest.raises(InputError) as err:
        cat.resolve_pair(cat.PairSpec(
            algebra={"type": "sl", "n": 2},
            subalgebra={"basis": [[1, 0, 0], [0, 0, 1]]}, label="ef"))
    assert "row 0" in str(err.value) and "row 1" in str(err.value)


def test_resolve_pair_rejects_unknown_fields():
    with pytest.raises(InputError):
        cat.PairSpec.from_dict({"algebra": {"type": "sl", "n": 2},
                                "subalgebra": {"preset": "borel"},
                                "label": "x", "bogus": 1})
    with pytest.raises(InputError):
        cat.resolve_pair(cat.PairSpec(
            algebra={"type": "sl", "n": 2, "extra": True},
            subalgebra={"preset": "borel"}, label="x"))
    with pytest.raises(InputError):
        cat.resolve_pair(cat.PairSpec(
            algebra={"type": "sl", "n": 2},
            subalgebra={"preset": "borel", "whatever": 2}, label="x"))


def test_resolve_custom_structure_constants():
    g2, _ = cat.make_sl(2)
    constants = [[[str(x) for x in row] for row in plane]
                 for plane in g2.structure]
    pair = cat.resolve_pair(cat.PairSpec(
        algebra={"structure_constants": constants},
        subalgebra={"basis": [[1, 0, 0]]}, label="custom"))
    assert pair.algebra.known_rank == 1  # estimated, no metadata
    assert pair.root_datum is None


def test_builtin_catalog_size_and_coverage():
    specs = cat.builtin_pair_specs()
    assert len(specs) >= 20
    labels = " ".join(s.label for s in specs)
    for kind in ("borel", "parabolic", "levi", "maximal-unipotent", "cartan",
                 "principal-sl2", "diagonal", "nilpotent-line", "whole", "zero"):
        assert kind in labels, kind
    algebras = {s.label.split(":")[0] for s in specs}
    assert {"sl2", "sl3", "sl4", "so5", "sp4", "sl2+sl2"} <= algebras


def test_dominant_element():
    for name in sorted(ALGEBRAS):
        maker, n, _, _ = ALGEBRAS[name]
        g, rd = maker(n)
        x = rd.strictly_dominant()
        coords = la.solve(la.transpose(rd.cartan_basis), x)
        for r in rd.positive_roots:
            value = la.vec_dot(r, coords)
            assert value >= 1 and value.denominator == 1
