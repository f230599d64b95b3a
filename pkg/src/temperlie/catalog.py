"""Catalog of classical algebras and standard subalgebras.

Algebras are produced from explicit matrix realizations chosen so that a
Cartan subalgebra is diagonal and all root data are rational: sl(n) uses
elementary matrices, so(n) the split symmetric form (antidiagonal identity)
and sp(2n) a split antidiagonal symplectic form.  Structure constants are
extracted once from matrix commutators; root data are recovered from the
exact joint eigendecomposition of the adjoint Cartan action, which keeps
sign conventions out of hand-written tables.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from . import linalg as la
from .core import LieAlgebra, Subspace, whole_subspace, zero_subspace
from .errors import InputError, InternalInconsistencyError

Root = tuple[Fraction, ...]


@dataclass(frozen=True)
class RootDatum:
    """Roots of a fixed diagonal Cartan subalgebra, with root vectors.

    Root coordinates are the values on ``cartan_basis``, so a root alpha
    evaluates on X = sum x_j t_j as the dot product with (x_j).
    """

    cartan_basis: tuple[la.Vec, ...]
    roots: tuple[Root, ...]
    root_vectors: dict = field(hash=False, compare=False)
    positive_roots: tuple[Root, ...]
    simple_roots: tuple[Root, ...]
    simple_coords: dict = field(hash=False, compare=False)
    rank: int

    def evaluate(self, root: Root, cartan_coords: Sequence[Fraction]) -> Fraction:
        return la.vec_dot(root, cartan_coords)

    def strictly_dominant(self) -> la.Vec:
        """Integer Cartan element X with alpha(X) >= 1 for every positive root."""
        a = tuple(self.simple_roots)
        target = (la.ONE,) * len(a)
        coords = la.solve(a, target)
        if coords is None:
            raise InternalInconsistencyError("simple roots do not determine a dominant element")
        coords = la.clear_denominators(coords)
        x = la.zero_vec(len(self.cartan_basis[0]))
        for c, t in zip(coords, self.cartan_basis):
            if c:
                x = la.vec_add(x, la.vec_scale(c, t))
        return x


def _order_simple_roots(simple: list[Root], root_set: set[Root]) -> tuple[Root, ...]:
    """Order simple roots along the Dynkin diagram, one component at a time.

    Two simple roots are adjacent exactly when their sum is a root.  Each
    component is walked breadth-first from its lexicographically smallest
    endpoint, so the numbering of a chain diagram follows the chain.
    """
    adjacency = {r: [] for r in simple}
    for r in simple:
        for s in simple:
            if s != r and tuple(x + y for x, y in zip(r, s)) in root_set:
                adjacency[r].append(s)
    remaining = set(simple)
    ordered = []
    while remaining:
        degrees = {r: sum(1 for s in adjacency[r] if s in remaining)
                   for r in remaining}
        min_deg = min(degrees.values())
        start = min(r for r in remaining if degrees[r] == min_deg)
        queue = [start]
        remaining.discard(start)
        while queue:
            r = queue.pop(0)
            ordered.append(r)
            for s in sorted(adjacency[r]):
                if s in remaining:
                    remaining.discard(s)
                    queue.append(s)
    return tuple(ordered)


def extract_root_datum(g: LieAlgebra, cartan_basis: Sequence[la.Vec],
                       rank: int, positivity: Optional[la.Vec] = None) -> RootDatum:
    """Root system of a split Cartan subalgebra via exact adjoint weights.

    ``positivity`` is a regular Cartan element whose root values define the
    positive system; without one a deterministic generic functional is used.
    """
    cartan_basis = tuple(la.vec(t) for t in cartan_basis)
    ops = [g.ad(t) for t in cartan_basis]
    try:
        blocks = la.simultaneous_eigenblocks(ops, g.dim)
    except ArithmeticError as exc:
        raise InternalInconsistencyError("Cartan action is not split: %s" % exc)
    zero = (la.ZERO,) * len(cartan_basis)
    roots = []
    root_vectors = {}
    for weight, rows in blocks:
        if weight == zero:
            if len(rows) != rank:
                raise InternalInconsistencyError(
                    "zero-weight space has dimension %d, expected rank %d"
                    % (len(rows), rank))
            continue
        if len(rows) != 1:
            raise InternalInconsistencyError("root multiplicity exceeds one")
        roots.append(weight)
        root_vectors[weight] = la.clear_denominators(rows[0])
    roots.sort()
    if len(roots) != g.dim - rank:
        raise InternalInconsistencyError("root count does not match dim - rank")

    if positivity is not None:
        coords = la.solve(la.transpose(cartan_basis), la.vec(positivity))
        if coords is None:
            raise InternalInconsistencyError("positivity element is not in the Cartan")
        values = [la.vec_dot(r, coords) for r in roots]
        if any(v == 0 for v in values):
            raise InternalInconsistencyError("positivity element is not regular")
    else:
        # deterministic generic functional separating the roots
        m = 1
        while True:
            func = tuple(Fraction(m ** (len(cartan_basis) - 1 - i))
                         for i in range(len(cartan_basis)))
            values = [la.vec_dot(r, func) for r in roots]
            if all(v != 0 for v in values):
                break
            m += 1
    positive = tuple(sorted(r for r, v in zip(roots, values) if v > 0))
    pos_set = set(positive)
    simple = []
    for r in positive:
        decomposable = any(
            tuple(x - y for x, y in zip(r, s)) in pos_set
            for s in positive if s != r)
        if not decomposable:
            simple.append(r)
    if len(simple) != rank:
        raise InternalInconsistencyError(
            "found %d simple roots, expected %d" % (len(simple), rank))
    simple = _order_simple_roots(simple, set(roots))
    simple_coords = {}
    for r in positive:
        coords = la.solve(la.transpose(simple), r)
        if coords is None or any(c.denominator != 1 or c < 0 for c in coords):
            raise InternalInconsistencyError(
                "positive root is not a nonnegative integer combination of simple roots")
        simple_coords[r] = tuple(int(c) for c in coords)
    return RootDatum(cartan_basis=cartan_basis, roots=tuple(roots),
                     root_vectors=root_vectors, positive_roots=positive,
                     simple_roots=simple, simple_coords=simple_coords, rank=rank)


# -- matrix realizations -------------------------------------------------------


def _structure_from_matrices(basis_mats, labels, rank, nilpotent_idx,
                             cartan_idx, positivity_mat=None):
    """Structure constants of a matrix Lie algebra in the given basis."""
    d = len(basis_mats)
    n = len(basis_mats[0])
    flat = [tuple(x for row in b for x in row) for b in basis_mats]
    # augmented rref solves coordinates w.r.t. the original basis
    aug = [list(f) + list(la.identity(d)[i]) for i, f in enumerate(flat)]
    red, pivots = la.rref(aug)
    if len(red) != d or any(p >= n * n for p in pivots):
        raise InternalInconsistencyError("matrix basis is linearly dependent")

    def coords(mat_flat):
        w = list(mat_flat) + [la.ZERO] * d
        for row, p in zip(red, pivots):
            c = w[p]
            if c:
                w = [x - c * y for x, y in zip(w, row)]
        if not la.is_zero_vec(w[:n * n]):
            raise InternalInconsistencyError("commutator leaves the matrix algebra")
        return tuple(-x for x in w[n * n:])

    def commutator(a, b):
        ab = [[la.vec_dot(a[i], tuple(b[k][j] for k in range(n)))
               for j in range(n)] for i in range(n)]
        ba = [[la.vec_dot(b[i], tuple(a[k][j] for k in range(n)))
               for j in range(n)] for i in range(n)]
        return tuple(x - y for ra, rb in zip(ab, ba) for x, y in zip(ra, rb))

    structure = [[None] * d for _ in range(d)]
    zero = la.zero_vec(d)
    for i in range(d):
        structure[i][i] = zero
        for j in range(i + 1, d):
            c = coords(commutator(basis_mats[i], basis_mats[j]))
            structure[i][j] = c
            structure[j][i] = tuple(-x for x in c)
    g = LieAlgebra(structure, basis_labels=labels, rank=rank,
                   nilpotent_generators=[la.identity(d)[i] for i in nilpotent_idx])
    positivity = None
    if positivity_mat is not None:
        positivity = coords(tuple(x for row in positivity_mat for x in row))
    rd = extract_root_datum(g, [g.unit(i) for i in cartan_idx], rank, positivity)
    return _remember(g, rd)


def _unit_matrix(n, i, j, value=1):
    return tuple(tuple(Fraction(value) if (a, b) == (i, j) else la.ZERO
                       for b in range(n)) for a in range(n))


def _mat_sum(*mats):
    out = [list(r) for r in mats[0]]
    for m in mats[1:]:
        for i, row in enumerate(m):
            for j, x in enumerate(row):
                out[i][j] += x
    return tuple(tuple(r) for r in out)


@lru_cache(maxsize=None)
def make_sl(n: int):
    """sl(n): traceless matrices in the basis (uppers, H_i, lowers)."""
    if n < 2:
        raise InputError("sl(n) needs n >= 2")
    mats, labels, nilpotent_idx = [], [], []
    for i in range(n):
        for j in range(i + 1, n):
            nilpotent_idx.append(len(mats))
            mats.append(_unit_matrix(n, i, j))
            labels.append("E%d%d" % (i + 1, j + 1))
    cartan_idx = []
    for i in range(n - 1):
        cartan_idx.append(len(mats))
        mats.append(_mat_sum(_unit_matrix(n, i, i), _unit_matrix(n, i + 1, i + 1, -1)))
        labels.append("H%d" % (i + 1))
    for j in range(n):
        for i in range(j + 1, n):
            nilpotent_idx.append(len(mats))
            mats.append(_unit_matrix(n, i, j))
            labels.append("E%d%d" % (i + 1, j + 1))
    # strictly decreasing traceless diagonal: uppers become the positive system
    dominant = _mat_sum(*[_unit_matrix(n, i, i, n - 1 - 2 * i) for i in range(n)])
    return _structure_from_matrices(mats, labels, n - 1, nilpotent_idx, cartan_idx,
                                    positivity_mat=dominant)


@lru_cache(maxsize=None)
def make_so(n: int):
    """so(n) for the split symmetric form with antidiagonal Gram matrix."""
    if n < 3:
        raise InputError("so(n) needs n >= 3")
    mats, labels, cartan_idx, nilpotent_idx = [], [], [], []
    for i in range(n):
        for j in range(i + 1, n):
            # J (E_ij - E_ji) with J the antidiagonal identity
            m = _mat_sum(_unit_matrix(n, n - 1 - i, j),
                         _unit_matrix(n, n - 1 - j, i, -1))
            if i + j == n - 1:
                cartan_idx.append(len(mats))
                labels.append("C%d" % (min(i, j) + 1))
            else:
                nilpotent_idx.append(len(mats))
                labels.append("M%d.%d" % (i + 1, j + 1))
            mats.append(m)
    m_half = n // 2
    diag = [m_half - i for i in range(m_half)] + ([0] if n % 2 else []) + \
        [i - m_half for i in range(m_half)][::-1]
    dominant = _mat_sum(*[_unit_matrix(n, i, i, diag[i]) for i in range(n)])
    return _structure_from_matrices(mats, labels, n // 2, nilpotent_idx, cartan_idx,
                                    positivity_mat=dominant)


@lru_cache(maxsize=None)
def make_sp(two_n: int):
    """sp(2n) for a split antidiagonal symplectic form."""
    if two_n < 2 or two_n % 2:
        raise InputError("sp needs an even matrix size >= 2")
    n = two_n
    sigma = [1 if i < n // 2 else -1 for i in range(n)]

    def omega_times(mat):
        # Omega has sigma_i at (i, n-1-i)
        return tuple(tuple(sigma[i] * mat[n - 1 - i][j] for j in range(n))
                     for i in range(n))

    mats, labels, cartan_idx, nilpotent_idx = [], [], [], []
    for i in range(n):
        for j in range(i, n):
            sym = (_unit_matrix(n, i, j) if i == j
                   else _mat_sum(_unit_matrix(n, i, j), _unit_matrix(n, j, i)))
            m = tuple(tuple(-x for x in row) for row in omega_times(sym))
            if i + j == n - 1:
                cartan_idx.append(len(mats))
                labels.append("C%d" % (min(i, j) + 1))
            else:
                nilpotent_idx.append(len(mats))
                labels.append("S%d.%d" % (i + 1, j + 1))
            mats.append(m)
    m_half = n // 2
    diag = [m_half - i for i in range(m_half)] + [i - m_half for i in range(m_half)][::-1]
    dominant = _mat_sum(*[_unit_matrix(n, i, i, diag[i]) for i in range(n)])
    return _structure_from_matrices(mats, labels, n // 2, nilpotent_idx, cartan_idx,
                                    positivity_mat=dominant)


def direct_sum(*parts):
    """Direct sum of (algebra, root datum) pairs with a combined root datum."""
    algebras = [p[0] for p in parts]
    data = [p[1] for p in parts]
    dims = [g.dim for g in algebras]
    total = sum(dims)
    offsets = []
    off = 0
    for d in dims:
        offsets.append(off)
        off += d

    def embed(vec_, idx):
        return (la.ZERO,) * offsets[idx] + tuple(vec_) + \
            (la.ZERO,) * (total - offsets[idx] - dims[idx])

    structure = [[la.zero_vec(total) for _ in range(total)] for _ in range(total)]
    for idx, g in enumerate(algebras):
        o = offsets[idx]
        for i in range(g.dim):
            for j in range(g.dim):
                structure[o + i][o + j] = embed(g.structure[i][j], idx)
    labels = []
    for idx, g in enumerate(algebras):
        labels.extend("%s.%d" % (lab, idx + 1) for lab in g.basis_labels)
    rank = None
    if all(g.rank_metadata is not None for g in algebras):
        rank = sum(g.rank_metadata for g in algebras)
    gens = []
    for idx, g in enumerate(algebras):
        gens.extend(embed(v, idx) for v in g.nilpotent_generators)
    gsum = LieAlgebra(structure, basis_labels=labels, rank=rank,
                      nilpotent_generators=gens, validate=False,
                      direct_sum_parts=tuple((offsets[i], algebras[i])
                                             for i in range(len(algebras))))
    # summands were validated on construction; block structure preserves both laws
    rd = None
    if all(rd_ is not None for rd_ in data):
        cartan = []
        for idx, rd_ in enumerate(data):
            cartan.extend(embed(t, idx) for t in rd_.cartan_basis)
        cartan_dims = [len(rd_.cartan_basis) for rd_ in data]
        cartan_offsets = []
        coff = 0
        for cd in cartan_dims:
            cartan_offsets.append(coff)
            coff += cd

        def embed_root(root, idx):
            return (la.ZERO,) * cartan_offsets[idx] + tuple(root) + \
                (la.ZERO,) * (coff - cartan_offsets[idx] - cartan_dims[idx])

        roots, positives, simples = [], [], []
        root_vectors = {}
        for idx, rd_ in enumerate(data):
            for r in rd_.roots:
                er = embed_root(r, idx)
                roots.append(er)
                root_vectors[er] = embed(rd_.root_vectors[r], idx)
            positives.extend(embed_root(r, idx) for r in rd_.positive_roots)
            simples.extend(embed_root(r, idx) for r in rd_.simple_roots)
        positives = tuple(sorted(positives))
        simples = tuple(simples)  # keep factor order so indices stay predictable
        simple_coords = {}
        for r in positives:
            coords = la.solve(la.transpose(simples), r)
            simple_coords[r] = tuple(int(c) for c in coords)
        rd = RootDatum(cartan_basis=tuple(cartan), roots=tuple(sorted(roots)),
                       root_vectors=root_vectors,
                       positive_roots=positives,
                       simple_roots=simples,
                       simple_coords=simple_coords,
                       rank=rank)
        _remember(gsum, rd)
    return gsum, rd


# -- standard subalgebras -------------------------------------------------------


def _certify(g, subspace, expect_closed=True):
    if g.check_subalgebra(subspace) != expect_closed:
        i, j = subspace.offending_pair
        raise InternalInconsistencyError(
            "constructed subspace is not closed at basis pair (%d, %d)" % (i, j))
    return subspace


def cartan_subalgebra(g, rd) -> Subspace:
    return _certify(g, Subspace(g, rd.cartan_basis,
                                toral_basis=rd.cartan_basis, label="cartan"))


def borel(g, rd) -> Subspace:
    rows = list(rd.cartan_basis) + [rd.root_vectors[r] for r in rd.positive_roots]
    return _certify(g, Subspace(g, rows, toral_basis=rd.cartan_basis, label="borel"))


def maximal_unipotent(g, rd) -> Subspace:
    rows = [rd.root_vectors[r] for r in rd.positive_roots]
    return _certify(g, Subspace(g, rows, toral_basis=(), label="maximal-unipotent"))


def opposite_unipotent(g, rd) -> Subspace:
    rows = [rd.root_vectors[tuple(-x for x in r)] for r in rd.positive_roots]
    return _certify(g, Subspace(g, rows, toral_basis=(), label="opposite-unipotent"))


def opposite_borel(g, rd) -> Subspace:
    rows = list(rd.cartan_basis) + \
        [rd.root_vectors[tuple(-x for x in r)] for r in rd.positive_roots]
    return _certify(g, Subspace(g, rows, toral_basis=rd.cartan_basis,
                                label="opposite-borel"))


def parabolic(g, rd, simple_subset) -> tuple[Subspace, Subspace, Subspace]:
    """Standard parabolic q = l + u for a set of simple-root indices."""
    subset = set(simple_subset)
    nsimple = len(rd.simple_roots)
    if any(not isinstance(i, int) or i < 0 or i >= nsimple for i in subset):
        raise InputError("simple-root indices must lie in [0, %d)" % nsimple)
    levi_rows = list(rd.cartan_basis)
    unip_rows = []
    for r in rd.positive_roots:
        support = {k for k, c in enumerate(rd.simple_coords[r]) if c}
        vecs = (rd.root_vectors[r], rd.root_vectors[tuple(-x for x in r)])
        if support <= subset:
            levi_rows.extend(vecs)
        else:
            unip_rows.append(vecs[0])
    levi = _certify(g, Subspace(g, levi_rows, toral_basis=rd.cartan_basis,
                                label="levi"))
    unip = _certify(g, Subspace(g, unip_rows, toral_basis=(), label="nilradical"))
    q = _certify(g, Subspace(g, levi_rows + unip_rows,
                             toral_basis=rd.cartan_basis, label="parabolic"))
    if not g.orthogonal_complement(q).same_space(
            Subspace(g, unip_rows, check_independent=False) if unip_rows
            else zero_subspace(g)):
        raise InternalInconsistencyError(
            "nilradical is not the Killing orthogonal of the parabolic")
    return q, levi, unip


def principal_sl2(g, rd) -> Subspace:
    """Three-dimensional subalgebra through the sum of simple root vectors."""
    e = la.zero_vec(g.dim)
    for r in rd.simple_roots:
        e = la.vec_add(e, rd.root_vectors[r])
    coords = la.solve(tuple(rd.simple_roots), (Fraction(2),) * len(rd.simple_roots))
    if coords is None:
        raise InternalInconsistencyError("no Cartan element with value 2 on simple roots")
    h = la.zero_vec(g.dim)
    for c, t in zip(coords, rd.cartan_basis):
        if c:
            h = la.vec_add(h, la.vec_scale(c, t))
    ad_h = g.ad(h)
    system = la.stack(g.ad(e),
                      la.mat_add(ad_h, la.mat_scale(Fraction(2), la.identity(g.dim))))
    rhs = tuple(h) + la.zero_vec(g.dim)
    f = la.solve(system, rhs)
    if f is None:
        raise InternalInconsistencyError("no exact solution for the lowering element")
    sub = Subspace(g, (e, h, f), toral_basis=(h,), label="principal-sl2")
    return _certify(g, sub)


def diagonal_embedding(g: LieAlgebra, rd):
    """(g + g, diagonal copy) with the diagonal Cartan stamped as toral basis."""
    gsum, rdsum = direct_sum((g, rd), (g, rd))
    rows = [tuple(b) + tuple(b) for b in la.identity(g.dim)]
    toral = [tuple(t) + tuple(t) for t in rd.cartan_basis]
    sub = Subspace(gsum, rows, toral_basis=toral, label="diagonal")
    return gsum, rdsum, _certify(gsum, sub)


def factor_subalgebra(g: LieAlgebra, index: int) -> Subspace:
    """One summand of a direct sum, embedded."""
    if not g.direct_sum_parts:
        raise InputError("factor subalgebra needs a direct-sum algebra")
    if index < 0 or index >= len(g.direct_sum_parts):
        raise InputError("factor index out of range")
    offset, part = g.direct_sum_parts[index]
    rows = []
    for i in range(part.dim):
        v = [la.ZERO] * g.dim
        v[offset + i] = la.ONE
        rows.append(tuple(v))
    # stamp the summand Cartan if the summand is a catalog algebra with one
    toral = None
    if part.rank_metadata is not None:
        try:
            _, rd = _resolve_known_algebra(part)
        except KeyError:
            rd = None
        if rd is not None:
            toral = [tuple(la.zero_vec(offset)) + tuple(t) +
                     tuple(la.zero_vec(g.dim - offset - part.dim))
                     for t in rd.cartan_basis]
    sub = Subspace(g, rows, toral_basis=toral, label="factor-%d" % (index + 1))
    return _certify(g, sub)


_KNOWN_ALGEBRAS: dict[int, tuple[LieAlgebra, RootDatum]] = {}


def _remember(g, rd):
    _KNOWN_ALGEBRAS[id(g)] = (g, rd)
    return g, rd


def _resolve_known_algebra(g):
    return _KNOWN_ALGEBRAS[id(g)]


# -- pair specifications ---------------------------------------------------------


@dataclass
class PairSpec:
    """JSON-facing description of a (algebra, subalgebra) pair."""

    algebra: dict
    subalgebra: dict
    label: str
    toral_hint: Optional[list] = None
    expected_verdict: Optional[bool] = None

    FIELDS = ("algebra", "subalgebra", "label", "toral_hint", "expected_verdict")

    @classmethod
    def from_dict(cls, raw: dict) -> "PairSpec":
        if not isinstance(raw, dict):
            raise InputError("pair spec must be a JSON object")
        unknown = set(raw) - set(cls.FIELDS)
        if unknown:
            raise InputError("unknown pair spec fields: %s" % ", ".join(sorted(unknown)))
        for key in ("algebra", "subalgebra", "label"):
            if key not in raw:
                raise InputError("pair spec is missing %r" % key)
        if not isinstance(raw["label"], str):
            raise InputError("label must be a string")
        return cls(algebra=raw["algebra"], subalgebra=raw["subalgebra"],
                   label=raw["label"], toral_hint=raw.get("toral_hint"),
                   expected_verdict=raw.get("expected_verdict"))


@dataclass
class ResolvedPair:
    label: str
    algebra: LieAlgebra
    root_datum: Optional[RootDatum]
    subalgebra: Subspace
    toral_hint: Optional[tuple] = None
    expected_verdict: Optional[bool] = None


_ALGEBRA_CACHE: dict[str, tuple[LieAlgebra, Optional[RootDatum]]] = {}


def resolve_algebra(spec: dict):
    """Build (LieAlgebra, RootDatum or None) from an algebra spec dict."""
    if not isinstance(spec, dict):
        raise InputError("algebra spec must be an object")
    key = json.dumps(spec, sort_keys=True)
    if key in _ALGEBRA_CACHE:
        return _ALGEBRA_CACHE[key]
    if "structure_constants" in spec:
        unknown = set(spec) - {"structure_constants", "labels", "rank"}
        if unknown:
            raise InputError("unknown algebra fields: %s" % ", ".join(sorted(unknown)))
        constants = [[[Fraction(str(x)) for x in row] for row in plane]
                     for plane in spec["structure_constants"]]
        g = LieAlgebra(constants, basis_labels=spec.get("labels"),
                       rank=spec.get("rank"))
        result = (g, None)
    else:
        unknown = set(spec) - {"type", "n", "terms"}
        if unknown:
            raise InputError("unknown algebra fields: %s" % ", ".join(sorted(unknown)))
        kind = spec.get("type")
        if kind == "sl":
            result = make_sl(int(spec["n"]))
        elif kind == "so":
            result = make_so(int(spec["n"]))
        elif kind == "sp":
            result = make_sp(int(spec["n"]))
        elif kind == "sum":
            terms = spec.get("terms")
            if not isinstance(terms, list) or len(terms) < 2:
                raise InputError("sum algebra needs a list of at least two terms")
            parts = [resolve_algebra(t) for t in terms]
            if any(rd is None for _, rd in parts):
                raise InputError("sum terms must be catalog algebras with root data")
            result = direct_sum(*parts)
        else:
            raise InputError("unknown algebra type %r" % kind)
    _ALGEBRA_CACHE[key] = result
    return result


_PRESETS = ("zero", "whole", "cartan", "borel", "maximal_unipotent",
            "opposite_unipotent", "parabolic", "levi", "nilradical",
            "principal_sl2", "diagonal", "factor")


def resolve_subalgebra(g: LieAlgebra, rd: Optional[RootDatum], spec: dict,
                       algebra_spec: Optional[dict] = None):
    if not isinstance(spec, dict):
        raise InputError("subalgebra spec must be an object")
    if "basis" in spec:
        unknown = set(spec) - {"basis"}
        if unknown:
            raise InputError("unknown subalgebra fields: %s" % ", ".join(sorted(unknown)))
        basis = [la.vec(Fraction(str(x)) for x in row) for row in spec["basis"]]
        sub = Subspace(g, basis, label="custom")
        if not g.check_subalgebra(sub):
            i, j = sub.offending_pair
            raise InputError(
                "basis is not bracket-closed: [row %d, row %d] leaves the span" % (i, j))
        return sub
    preset = spec.get("preset")
    if preset not in _PRESETS:
        raise InputError("unknown subalgebra preset %r" % preset)
    extra = set(spec) - {"preset", "simple_roots", "index"}
    if extra:
        raise InputError("unknown subalgebra fields: %s" % ", ".join(sorted(extra)))
    if preset == "zero":
        return zero_subspace(g)
    if preset == "whole":
        sub = whole_subspace(g)
        sub.closed_under_bracket = True
        if rd is not None:
            sub.toral_basis = rd.cartan_basis
        return sub
    if preset == "factor":
        return factor_subalgebra(g, int(spec.get("index", 0)))
    if rd is None:
        raise InputError("preset %r needs an algebra with a root datum" % preset)
    if preset == "cartan":
        return cartan_subalgebra(g, rd)
    if preset == "borel":
        return borel(g, rd)
    if preset == "maximal_unipotent":
        return maximal_unipotent(g, rd)
    if preset == "opposite_unipotent":
        return opposite_unipotent(g, rd)
    if preset in ("parabolic", "levi", "nilradical"):
        subset = spec.get("simple_roots", [])
        q, levi, unip = parabolic(g, rd, subset)
        return {"parabolic": q, "levi": levi, "nilradical": unip}[preset]
    if preset == "principal_sl2":
        return principal_sl2(g, rd)
    if preset == "diagonal":
        if algebra_spec is None or algebra_spec.get("type") != "sum":
            raise InputError("diagonal preset needs a sum algebra")
        terms = algebra_spec["terms"]
        if len(terms) != 2 or terms[0] != terms[1]:
            raise InputError("diagonal preset needs a sum of two equal terms")
        part, part_rd = resolve_algebra(terms[0])
        rows = [tuple(b) + tuple(b) for b in la.identity(part.dim)]
        toral = [tuple(t) + tuple(t) for t in part_rd.cartan_basis]
        sub = Subspace(g, rows, toral_basis=toral, label="diagonal")
        return _certify(g, sub)
    raise AssertionError("unreachable preset %r" % preset)


def resolve_pair(spec: PairSpec, rank_trials: int = 8, rank_seed: int = 0) -> ResolvedPair:
    """Materialize a pair spec; estimates the rank for custom algebras."""
    g, rd = resolve_algebra(spec.algebra)
    if g.known_rank is None:
        if not g.is_semisimple():
            raise InputError("algebra is not semisimple (degenerate Killing form)")
        g.rank(trials=rank_trials, seed=rank_seed)
    sub = resolve_subalgebra(g, rd, spec.subalgebra, algebra_spec=spec.algebra)
    hint = None
    if spec.toral_hint is not None:
        hint = tuple(la.vec(Fraction(str(x)) for x in row) for row in spec.toral_hint)
    return ResolvedPair(label=spec.label, algebra=g, root_datum=rd,
                        subalgebra=sub, toral_hint=hint,
                        expected_verdict=spec.expected_verdict)


# -- built-in catalog -------------------------------------------------------------

SL2 = {"type": "sl", "n": 2}
SL3 = {"type": "sl", "n": 3}
SL4 = {"type": "sl", "n": 4}
SO4 = {"type": "so", "n": 4}
SO5 = {"type": "so", "n": 5}
SP4 = {"type": "sp", "n": 4}
SL2xSL2 = {"type": "sum", "terms": [SL2, SL2]}

# label, algebra, subalgebra, hand-checked verdict (None = decided by the tool)
_BUILTIN = [
    ("sl2:zero", SL2, {"preset": "zero"}, True, None),
    ("sl2:cartan", SL2, {"preset": "cartan"}, True, None),
    ("sl2:nilpotent-line", SL2, {"basis": [[1, 0, 0]]}, True, None),
    ("sl2:split-toral-line", SL2, {"basis": [[1, 0, 1]]}, True, [[1, 0, 1]]),
    ("sl2:borel", SL2, {"preset": "borel"}, True, None),
    ("sl2:whole", SL2, {"preset": "whole"}, False, None),
    ("sl3:zero", SL3, {"preset": "zero"}, True, None),
    ("sl3:cartan", SL3, {"preset": "cartan"}, True, None),
    ("sl3:regular-nilpotent-line", SL3,
     {"basis": [[1, 0, 1, 0, 0, 0, 0, 0]]}, True, None),
    ("sl3:maximal-unipotent", SL3, {"preset": "maximal_unipotent"}, True, None),
    ("sl3:borel", SL3, {"preset": "borel"}, True, None),
    ("sl3:parabolic-0", SL3, {"preset": "parabolic", "simple_roots": [0]}, False, None),
    ("sl3:levi-0", SL3, {"preset": "levi", "simple_roots": [0]}, True, None),
    ("sl3:nilradical-0", SL3, {"preset": "nilradical", "simple_roots": [0]}, True, None),
    ("sl3:principal-sl2", SL3, {"preset": "principal_sl2"}, True, None),
    ("sl3:whole", SL3, {"preset": "whole"}, False, None),
    ("sl4:cartan", SL4, {"preset": "cartan"}, True, None),
    ("sl4:borel", SL4, {"preset": "borel"}, True, None),
    ("sl4:parabolic-0-2", SL4,
     {"preset": "parabolic", "simple_roots": [0, 2]}, False, None),
    ("sl4:levi-0-2", SL4, {"preset": "levi", "simple_roots": [0, 2]}, None, None),
    ("sl4:principal-sl2", SL4, {"preset": "principal_sl2"}, True, None),
    ("so4:cartan", SO4, {"preset": "cartan"}, True, None),
    ("so4:borel", SO4, {"preset": "borel"}, True, None),
    ("so5:borel", SO5, {"preset": "borel"}, True, None),
    ("so5:maximal-unipotent", SO5, {"preset": "maximal_unipotent"}, True, None),
    ("so5:parabolic-0", SO5, {"preset": "parabolic", "simple_roots": [0]}, None, None),
    ("sp4:borel", SP4, {"preset": "borel"}, True, None),
    ("sp4:principal-sl2", SP4, {"preset": "principal_sl2"}, True, None),
    ("sl2+sl2:diagonal", SL2xSL2, {"preset": "diagonal"}, True, None),
    ("sl2+sl2:first-factor", SL2xSL2, {"preset": "factor", "index": 0}, False, None),
    ("sl2+sl2:borel", SL2xSL2, {"preset": "borel"}, True, None),
    ("sl2+sl2:whole", SL2xSL2, {"preset": "whole"}, False, None),
]


def builtin_pair_specs() -> list[PairSpec]:
    specs = []
    for label, alg, sub, expected, hint in _BUILTIN:
        specs.append(PairSpec(algebra=alg, subalgebra=sub, label=label,
                              toral_hint=hint, expected_verdict=expected))
    return specs


def builtin_pair(label: str) -> PairSpec:
    for spec in builtin_pair_specs():
        if spec.label == label:
            return spec
    raise InputError("unknown catalog pair %r" % label)
