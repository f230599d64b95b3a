"""Finite-dimensional Lie algebras over exact rationals.

A ``LieAlgebra`` is given by its structure-constant tensor c[i][j][k] with
[e_i, e_j] = sum_k c[i][j][k] e_k.  Antisymmetry and the Jacobi identity are
verified exactly at construction time.  Elements are plain tuples of
``Fraction``; subspaces carry a row basis inside a fixed parent algebra.

All objects are immutable after construction apart from write-once caches
(rank, Killing Gram matrix, closure flags), so sharing across threads or
worker processes is safe.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence

from . import linalg as la
from .errors import InputError, InternalInconsistencyError, UnsupportedError
from .linalg import Fraction as _F  # noqa: F401  (re-export convenience)

Vec = la.Vec

DEFAULT_COORD_BOUND = 50
DEFAULT_RANK_TRIALS = 8


class LieAlgebra:
    """Lie algebra over Q given by structure constants.

    Parameters
    ----------
    structure:
        Nested sequence c[i][j][k].
    basis_labels:
        Optional names for the basis, used in diagnostics.
    rank:
        Optional known rank (stamped by the catalog constructors).  Random
        estimation cross-checks it but never replaces it.
    nilpotent_generators:
        Optional ad-nilpotent elements (root vectors) used to build random
        automorphisms.
    validate:
        Verify antisymmetry and Jacobi exactly.  Only the selftest negative
        control ever disables this.
    """

    def __init__(self, structure, basis_labels=None, rank=None,
                 nilpotent_generators=None, validate=True,
                 direct_sum_parts=None):
        self.structure = tuple(tuple(la.vec(row) for row in plane)
                               for plane in structure)
        self.dim = len(self.structure)
        if basis_labels is None:
            basis_labels = tuple("b%d" % i for i in range(self.dim))
        self.basis_labels = tuple(basis_labels)
        if len(self.basis_labels) != self.dim:
            raise InputError("need %d basis labels, got %d"
                             % (self.dim, len(self.basis_labels)))
        self.rank_metadata = rank
        self.nilpotent_generators = (tuple(la.vec(v) for v in nilpotent_generators)
                                     if nilpotent_generators else ())
        # ((offset, summand LieAlgebra), ...) when built as a direct sum
        self.direct_sum_parts = direct_sum_parts
        self._rank_cache: Optional[int] = rank
        self._killing_gram: Optional[la.Mat] = None
        self._semisimple: Optional[bool] = None
        if validate:
            self._validate_structure()

    # -- construction checks ------------------------------------------------

    def _validate_structure(self):
        d = self.dim
        c = self.structure
        for i in range(d):
            if len(c[i]) != d or any(len(c[i][j]) != d for j in range(d)):
                raise InputError("structure tensor is not dim^3")
        for i in range(d):
            for j in range(i, d):
                for k in range(d):
                    if c[i][j][k] != -c[j][i][k]:
                        raise InputError(
                            "antisymmetry fails at (%s, %s)"
                            % (self.basis_labels[i], self.basis_labels[j]))
        for i in range(d):
            for j in range(i + 1, d):
                for k in range(j + 1, d):
                    s = la.vec_add(
                        self.bracket(self.unit(i), c[j][k]),
                        la.vec_add(self.bracket(self.unit(j), c[k][i]),
                                   self.bracket(self.unit(k), c[i][j])))
                    if not la.is_zero_vec(s):
                        raise InputError(
                            "Jacobi identity fails at (%s, %s, %s)"
                            % (self.basis_labels[i], self.basis_labels[j],
                               self.basis_labels[k]))

    # -- basic vectors -------------------------------------------------------

    def unit(self, i: int) -> Vec:
        return tuple(la.ONE if j == i else la.ZERO for j in range(self.dim))

    def zero(self) -> Vec:
        return la.zero_vec(self.dim)

    def element(self, coords) -> Vec:
        v = la.vec(coords)
        if len(v) != self.dim:
            raise InputError("element has length %d, algebra dimension is %d"
                             % (len(v), self.dim))
        return v

    def random_element(self, rng: random.Random,
                       bound: int = DEFAULT_COORD_BOUND) -> Vec:
        return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(self.dim))

    # -- bracket and adjoint -------------------------------------------------

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vec:
        d = self.dim
        if len(x) != d or len(y) != d:
            raise InputError("bracket arguments must have length %d" % d)
        out = [la.ZERO] * d
        c = self.structure
        for i, xi in enumerate(x):
            if not xi:
                continue
            ci = c[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                f = xi * yj
                for k, cijk in enumerate(ci[j]):
                    if cijk:
                        out[k] += f * cijk
        return tuple(out)

    def ad(self, x: Sequence[Fraction]) -> la.Mat:
        """Matrix of ad(x): column j holds the coordinates of [x, e_j]."""
        d = self.dim
        if len(x) != d:
            raise InputError("ad argument must have length %d" % d)
        cols = []
        c = self.structure
        for j in range(d):
            col = [la.ZERO] * d
            for i, xi in enumerate(x):
                if not xi:
                    continue
                for k, cijk in enumerate(c[i][j]):
                    if cijk:
                        col[k] += xi * cijk
            cols.append(col)
        return tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))

    # -- Killing form ----------------------------------------------------------

    def killing_gram(self) -> la.Mat:
        if self._killing_gram is None:
            d = self.dim
            c = self.structure
            gram = []
            for i in range(d):
                row = []
                for j in range(d):
                    # tr(ad e_i ad e_j) = sum_{a,b} c[i][b][a] c[j][a][b]
                    s = la.ZERO
                    for b in range(d):
                        cib = c[i][b]
                        for a in range(d):
                            x = cib[a]
                            if x:
                                y = c[j][a][b]
                                if y:
                                    s += x * y
                    row.append(s)
                gram.append(tuple(row))
            self._killing_gram = tuple(gram)
        return self._killing_gram

    def killing(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        if len(x) != self.dim or len(y) != self.dim:
            raise InputError("Killing form arguments must have length %d" % self.dim)
        return la.vec_dot(la.mat_vec(self.killing_gram(), y), x)

    def is_semisimple(self) -> bool:
        if self._semisimple is None:
            self._semisimple = la.rank_of(self.killing_gram()) == self.dim
        return self._semisimple

    # -- centralizers, rank, regularity ---------------------------------------

    def centralizer(self, x: Sequence[Fraction]) -> "Subspace":
        ker = la.nullspace(self.ad(x))
        return Subspace(self, ker, check_independent=False)

    def rank(self, trials: int = DEFAULT_RANK_TRIALS, seed: int = 0) -> int:
        """Rank via seeded random sampling, cross-checked against metadata."""
        if trials < 1:
            raise InputError("rank estimation needs trials >= 1")
        if not self.is_semisimple():
            raise UnsupportedError("rank sampling assumes a semisimple algebra")
        rng = random.Random(seed)
        sampled = min(self.centralizer(self.random_element(rng)).dim
                      for _ in range(trials))
        if self.rank_metadata is not None:
            if sampled != self.rank_metadata:
                raise InternalInconsistencyError(
                    "sampled rank %d disagrees with constructor rank %d"
                    % (sampled, self.rank_metadata))
            self._rank_cache = self.rank_metadata
        else:
            self._rank_cache = sampled
        return self._rank_cache

    @property
    def known_rank(self) -> Optional[int]:
        return self._rank_cache

    def is_regular(self, x: Sequence[Fraction]) -> bool:
        if self._rank_cache is None:
            raise UnsupportedError(
                "rank unknown: construct with rank metadata or call rank() first")
        return self.centralizer(x).dim == self._rank_cache

    # -- orthogonal complement ------------------------------------------------

    def orthogonal_complement(self, h: "Subspace") -> "Subspace":
        if not self.is_semisimple():
            raise UnsupportedError(
                "orthogonal complement needs a nondegenerate Killing form")
        if h.algebra is not self:
            raise InputError("subspace belongs to a different algebra")
        gram = self.killing_gram()
        constraints = tuple(la.mat_vec(gram, b) for b in h.basis)
        ker = la.nullspace(constraints) if constraints else la.identity(self.dim)
        out = Subspace(self, ker, check_independent=False)
        if out.dim + h.dim != self.dim:
            raise InternalInconsistencyError("orthogonal complement has wrong dimension")
        return out

    # -- subalgebra predicates --------------------------------------------------

    def check_subalgebra(self, w: "Subspace") -> bool:
        if w.closed_under_bracket is None:
            closed = True
            red, piv = w.rref
            basis = w.basis
            for i in range(len(basis)):
                for j in range(i + 1, len(basis)):
                    if not la.in_rowspace(red, piv, self.bracket(basis[i], basis[j])):
                        closed = False
                        w.offending_pair = (i, j)
                        break
                if not closed:
                    break
            w.closed_under_bracket = closed
        return w.closed_under_bracket

    def bracket_span(self, u: "Subspace", v: "Subspace") -> "Subspace":
        """Span of [u_i, v_j] over basis pairs."""
        rows = []
        for x in u.basis:
            for y in v.basis:
                b = self.bracket(x, y)
                if not la.is_zero_vec(b):
                    rows.append(b)
        return Subspace(self, la.row_basis(rows), check_independent=False)

    def derived_series(self, h: "Subspace") -> list["Subspace"]:
        if not self.check_subalgebra(h):
            raise InputError("derived series needs a bracket-closed subspace")
        series = [h]
        current = h
        while True:
            nxt = self.bracket_span(current, current)
            if nxt.dim == current.dim:
                break
            series.append(nxt)
            current = nxt
            if current.dim == 0:
                break
        return series

    def is_solvable(self, h: "Subspace") -> bool:
        return self.derived_series(h)[-1].dim == 0

    def lower_central_series(self, h: "Subspace") -> list["Subspace"]:
        if not self.check_subalgebra(h):
            raise InputError("lower central series needs a bracket-closed subspace")
        series = [h]
        current = h
        while True:
            nxt = self.bracket_span(h, current)
            if nxt.dim == current.dim:
                break
            series.append(nxt)
            current = nxt
            if current.dim == 0:
                break
        return series

    def is_nilpotent_matrix(self, m: la.Mat) -> bool:
        power = m
        for _ in range(self.dim):
            if la.is_zero_mat(power):
                return True
            power = la.mat_mul(power, m)
        return la.is_zero_mat(power)

    def is_unipotent_subalgebra(self, h: "Subspace") -> bool:
        """All basis elements ad-nilpotent and the algebra nilpotent.

        For subalgebras of a semisimple algebra the two checks together
        certify that every element is nilpotent.
        """
        if not self.check_subalgebra(h):
            raise InputError("unipotence check needs a bracket-closed subspace")
        for b in h.basis:
            if not self.is_nilpotent_matrix(self.ad(b)):
                return False
        return self.lower_central_series(h)[-1].dim == 0

    # -- exact automorphisms -----------------------------------------------------

    def exp_ad(self, x: Sequence[Fraction]) -> "Automorphism":
        """exp(ad x) for ad-nilpotent x; the series terminates exactly."""
        m = self.ad(x)
        result = la.identity(self.dim)
        power = m
        k = 1
        while not la.is_zero_mat(power):
            if k > self.dim:
                raise UnsupportedError("exp_ad needs an ad-nilpotent argument")
            result = la.mat_add(result, la.mat_scale(Fraction(1, factorial(k)), power))
            power = la.mat_mul(power, m)
            k += 1
        return Automorphism(self, result, ((la.vec(x), la.ONE),))

    def random_automorphism(self, word_length: int, seed: int,
                            coeff_bound: int = 3) -> "Automorphism":
        if word_length and not self.nilpotent_generators:
            raise UnsupportedError("algebra has no designated ad-nilpotent generators")
        rng = random.Random(seed)
        matrix = la.identity(self.dim)
        provenance = []
        for _ in range(word_length):
            n = self.nilpotent_generators[rng.randrange(len(self.nilpotent_generators))]
            t = Fraction(rng.randint(-coeff_bound, coeff_bound))
            if t == 0:
                continue
            factor = self.exp_ad(la.vec_scale(t, n))
            matrix = la.mat_mul(factor.matrix, matrix)
            provenance.append((n, t))
        return Automorphism(self, matrix, tuple(provenance))

    def __repr__(self):
        return "LieAlgebra(dim=%d, rank=%s)" % (self.dim, self.rank_metadata)


class Subspace:
    """Row-basis subspace of a fixed Lie algebra.

    The basis rows are stored as given (after an exact independence check);
    an rref form is cached for membership tests.  ``closed_under_bracket``
    and the optional ``toral_basis`` stamp are write-once metadata.
    """

    def __init__(self, algebra: LieAlgebra, basis, check_independent=True,
                 toral_basis=None, label=None):
        self.algebra = algebra
        self.basis = tuple(la.vec(b) for b in basis)
        for b in self.basis:
            if len(b) != algebra.dim:
                raise InputError("basis vector length %d does not match dim %d"
                                 % (len(b), algebra.dim))
        self._rref = la.rref(self.basis)
        if check_independent and len(self._rref[0]) != len(self.basis):
            raise InputError("subspace basis rows are linearly dependent")
        self.closed_under_bracket: Optional[bool] = None
        self.offending_pair: Optional[tuple[int, int]] = None
        self.toral_basis = (tuple(la.vec(t) for t in toral_basis)
                            if toral_basis is not None else None)
        self.label = label

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def rref(self):
        return self._rref

    def contains(self, v: Sequence[Fraction]) -> bool:
        red, piv = self._rref
        return la.in_rowspace(red, piv, la.vec(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(b) for b in other.basis)

    def same_space(self, other: "Subspace") -> bool:
        return self._rref[0] == other._rref[0]

    def random_element(self, rng: random.Random,
                       bound: int = DEFAULT_COORD_BOUND) -> Vec:
        out = la.zero_vec(self.algebra.dim)
        for b in self.basis:
            c = rng.randint(-bound, bound)
            if c:
                out = la.vec_add(out, la.vec_scale(Fraction(c), b))
        return out

    def __repr__(self):
        name = self.label or "subspace"
        return "Subspace(%s, dim=%d)" % (name, self.dim)


class Automorphism:
    """Invertible matrix acting on coordinates, built from unipotent exponentials."""

    def __init__(self, algebra: LieAlgebra, matrix, provenance=()):
        self.algebra = algebra
        self.matrix = la.mat(matrix)
        self.provenance = tuple(provenance)

    def apply(self, x: Sequence[Fraction]) -> Vec:
        return la.mat_vec(self.matrix, x)

    def apply_subspace(self, w: Subspace) -> Subspace:
        out = Subspace(self.algebra, tuple(self.apply(b) for b in w.basis),
                       check_independent=False,
                       toral_basis=(tuple(self.apply(t) for t in w.toral_basis)
                                    if w.toral_basis is not None else None),
                       label=w.label)
        out.closed_under_bracket = w.closed_under_bracket
        return out

    def inverse(self) -> "Automorphism":
        if self.provenance:
            # matrix = F_k ... F_1, so the inverse is F_1^{-1} ... F_k^{-1}
            g = self.algebra
            inv = la.identity(g.dim)
            for n, t in self.provenance:
                inv = la.mat_mul(inv, g.exp_ad(la.vec_scale(-t, n)).matrix)
            return Automorphism(g, inv, tuple((n, -t) for n, t in reversed(self.provenance)))
        return Automorphism(self.algebra, la.inverse(self.matrix))

    def preserves_bracket(self) -> bool:
        g = self.algebra
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                lhs = self.apply(g.structure[i][j])
                rhs = g.bracket(self.apply(g.unit(i)), self.apply(g.unit(j)))
                if lhs != rhs:
                    return False
        return True

    def __repr__(self):
        return "Automorphism(dim=%d, factors=%d)" % (self.algebra.dim, len(self.provenance))


def whole_subspace(g: LieAlgebra, label="whole") -> Subspace:
    return Subspace(g, la.identity(g.dim), check_independent=False, label=label)


def zero_subspace(g: LieAlgebra, label="zero") -> Subspace:
    s = Subspace(g, (), toral_basis=(), label=label)
    s.closed_under_bracket = True
    return s
