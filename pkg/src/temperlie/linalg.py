"""Exact linear algebra over the rationals.

Vectors are tuples of ``Fraction``; matrices are tuples of row tuples.
Every routine is deterministic: pivoting always picks the first usable
row/column, so identical inputs give identical outputs bit for bit.
Matrices act on column vectors (``mat_vec(A, x)`` computes ``A @ x``),
while subspaces are stored as row bases.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not allowed in exact computations: %r" % (x,))
    return Fraction(x)


def vec(xs: Iterable) -> Vec:
    return tuple(frac(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> Mat:
    return tuple(vec(r) for r in rows)


def zero_vec(n: int) -> Vec:
    return (ZERO,) * n


def identity(n: int) -> Mat:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def is_zero_vec(v: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in v)


def is_zero_mat(a: Sequence[Sequence[Fraction]]) -> bool:
    return all(is_zero_vec(r) for r in a)


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Fraction, v: Sequence[Fraction]) -> Vec:
    return tuple(c * a for a in v)


def vec_dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


def mat_vec(a: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> Vec:
    """A @ x with x a column vector."""
    out = []
    for row in a:
        s = ZERO
        for r, xi in zip(row, x):
            if r and xi:
                s += r * xi
        out.append(s)
    return tuple(out)


def mat_mul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Mat:
    bt = list(zip(*b))
    out = []
    for row in a:
        nz = [(j, rj) for j, rj in enumerate(row) if rj]
        new_row = []
        for col in bt:
            s = ZERO
            for j, rj in nz:
                cj = col[j]
                if cj:
                    s += rj * cj
            new_row.append(s)
        out.append(tuple(new_row))
    return tuple(out)


def mat_add(a, b) -> Mat:
    return tuple(vec_add(r, s) for r, s in zip(a, b))


def mat_scale(c: Fraction, a) -> Mat:
    return tuple(vec_scale(c, r) for r in a)


def transpose(a) -> Mat:
    return tuple(zip(*a)) if a else ()


def rref(rows: Iterable[Sequence[Fraction]]) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        pv = work[r][c]
        if pv != 1:
            inv = ONE / pv
            work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                row_r = work[r]
                work[i] = [x - f * y for x, y in zip(work[i], row_r)]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def rank_of(rows) -> int:
    return len(rref(rows)[0])


def reduce_against(rref_rows: Mat, pivots: Sequence[int],
                   v: Sequence[Fraction]) -> tuple[Vec, Vec]:
    """Reduce v by an rref basis; returns (residual, coefficients)."""
    w = list(v)
    coeffs = []
    for row, p in zip(rref_rows, pivots):
        c = w[p]
        coeffs.append(c)
        if c:
            for j, rj in enumerate(row):
                if rj:
                    w[j] -= c * rj
    return tuple(w), tuple(coeffs)


def in_rowspace(rref_rows: Mat, pivots: Sequence[int], v: Sequence[Fraction]) -> bool:
    residual, _ = reduce_against(rref_rows, pivots, v)
    return is_zero_vec(residual)


def row_basis(rows) -> Mat:
    return rref(rows)[0]


def nullspace(a: Sequence[Sequence[Fraction]]) -> Mat:
    """Basis (as row vectors) of {x : A @ x = 0}."""
    if not a:
        return ()
    ncols = len(a[0])
    red, pivots = rref(a)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free_cols:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return tuple(basis)


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Optional[Vec]:
    """One exact solution of A @ x = b, or None if inconsistent."""
    if not a:
        return () if is_zero_vec(b) else None
    ncols = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = rref(aug)
    x = [ZERO] * ncols
    for row, p in zip(red, pivots):
        if p == ncols:
            return None
        x[p] = row[ncols]
    return tuple(x)


def inverse(a: Mat) -> Mat:
    n = len(a)
    aug = [list(row) + list(identity(n)[i]) for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if len(red) != n or any(p != i for i, p in enumerate(pivots)):
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)


def det(a: Mat) -> Fraction:
    n = len(a)
    if n == 0:
        return ONE
    work = [list(r) for r in a]
    d = ONE
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if work[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return ZERO
        if pivot_row != c:
            work[c], work[pivot_row] = work[pivot_row], work[c]
            d = -d
        pv = work[c][c]
        d *= pv
        inv = ONE / pv
        for i in range(c + 1, n):
            if work[i][c] != 0:
                f = work[i][c] * inv
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
    return d


def stack(*mats) -> Mat:
    rows = []
    for m in mats:
        rows.extend(tuple(r) for r in m)
    return tuple(rows)


def intersection_dim(u: Mat, v: Mat) -> int:
    """dim(rowspace(U) ∩ rowspace(V)) via rank arithmetic."""
    ru = rank_of(u)
    rv = rank_of(v)
    return ru + rv - rank_of(stack(u, v))


def intersect_rowspaces(u: Mat, v: Mat) -> Mat:
    """Row basis of rowspace(U) ∩ rowspace(V)."""
    if not u or not v:
        return ()
    stacked = stack(u, v)
    left_kernel = nullspace(transpose(stacked))
    p = len(u)
    out = []
    for k in left_kernel:
        w = zero_vec(len(u[0]))
        for ki, urow in zip(k[:p], u):
            if ki:
                w = vec_add(w, vec_scale(ki, urow))
        out.append(w)
    return row_basis(out)


def primitive_vector(v: Sequence[Fraction]) -> Vec:
    """Scale a nonzero rational vector to coprime integers, first nonzero entry > 0."""
    from math import gcd, lcm

    denom = 1
    for x in v:
        denom = lcm(denom, frac(x).denominator)
    ints = [int(frac(x) * denom) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return vec(ints)


def minimal_polynomial(m: Mat) -> tuple[Fraction, ...]:
    """Monic minimal polynomial of a square matrix, coefficients ascending.

    Found as the first linear dependence among I, M, M^2, ... (flattened),
    tracked through an augmented echelon form.
    """
    n = len(m)
    if n == 0:
        return (ONE,)  # unit polynomial annihilates the empty matrix
    width = n * n

    def flatten(a):
        return [x for row in a for x in row]

    # echelon rows keyed by lead column, each row = [flattened power | coeffs]
    rows_by_lead: dict[int, list[Fraction]] = {}
    power = identity(n)
    k = 0
    while True:
        tail = [ZERO] * (n + 1)
        tail[k] = ONE
        row = flatten(power) + tail
        j = 0
        while j < width:
            if row[j] != 0 and j in rows_by_lead:
                brow = rows_by_lead[j]
                f = row[j] / brow[j]
                row = [x - f * y for x, y in zip(row, brow)]
            else:
                j += 1
        if is_zero_vec(row[:width]):
            coeffs = row[width:width + k + 1]
            lead = coeffs[k]
            return tuple(c / lead for c in coeffs)
        lead_col = next(j for j, x in enumerate(row[:width]) if x != 0)
        rows_by_lead[lead_col] = row
        power = mat_mul(power, m)
        k += 1
        if k > n:
            raise AssertionError("minimal polynomial exceeds dimension bound")


def clear_denominators(v: Sequence[Fraction]) -> Vec:
    """Scale by a positive rational to coprime integer entries (sign preserved)."""
    from math import gcd, lcm

    denom = 1
    for x in v:
        denom = lcm(denom, frac(x).denominator)
    ints = [int(frac(x) * denom) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return vec(ints)
    return vec(x // g for x in ints)


def restrict_operator(a: Mat, block_rows: Mat) -> Mat:
    """Matrix of A on the invariant subspace spanned by block_rows, in that basis."""
    bt = transpose(block_rows)
    cols = []
    for b in block_rows:
        coords = solve(bt, mat_vec(a, b))
        if coords is None:
            raise ArithmeticError("subspace is not invariant under the operator")
        cols.append(coords)
    r = len(block_rows)
    return tuple(tuple(cols[j][i] for j in range(r)) for i in range(r))


def simultaneous_eigenblocks(ops: Sequence[Mat], dim: int):
    """Joint eigenspace decomposition of commuting rational-diagonalizable operators.

    Returns a list of (weight tuple, row basis) pairs with pairwise distinct
    weights whose block dimensions sum to ``dim``.  Raises ArithmeticError if
    some restriction is not diagonalizable over the rationals.
    """
    blocks: list[tuple[tuple[Fraction, ...], Mat]] = [((), identity(dim))]
    for op in ops:
        new_blocks = []
        for weight, rows in blocks:
            restricted = restrict_operator(op, rows)
            eigs = rational_eigenvalues(restricted)
            if eigs is None:
                raise ArithmeticError(
                    "operator is not diagonalizable with rational eigenvalues")
            for lam in eigs:
                shifted = tuple(tuple(x - (lam if i == j else 0)
                                      for j, x in enumerate(row))
                                for i, row in enumerate(restricted))
                kernel = nullspace(shifted)
                sub_rows = tuple(mat_vec(transpose(rows), k) for k in kernel)
                new_blocks.append((weight + (lam,), sub_rows))
        blocks = new_blocks
    return blocks


def poly_derivative(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Derivative of a polynomial given by ascending coefficients."""
    return tuple(k * c for k, c in enumerate(coeffs))[1:] or (ZERO,)


def poly_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Monic gcd over Q[x], coefficients ascending."""

    def trim(p):
        p = list(p)
        while len(p) > 1 and p[-1] == 0:
            p.pop()
        return p

    def degree_zero(p):
        return len(p) == 1 and p[0] == 0

    a, b = trim(a), trim(b)
    while not degree_zero(b):
        r = trim(list(a))
        while not degree_zero(r) and len(r) >= len(b):
            f = r[-1] / b[-1]
            shift = len(r) - len(b)
            for i, c in enumerate(b):
                r[shift + i] -= f * c
            r = trim(r)
        a, b = b, r
    if degree_zero(a):
        return (ZERO,)
    lead = a[-1]
    return tuple(c / lead for c in a)


def poly_is_squarefree(coeffs: Sequence[Fraction]) -> bool:
    return len(poly_gcd(coeffs, poly_derivative(coeffs))) == 1


def rational_eigenvalues(m: Mat) -> Optional[tuple[Fraction, ...]]:
    """Eigenvalues of M if it is diagonalizable over the rationals, else None.

    Exact test: the minimal polynomial must split into distinct linear
    rational factors.  Univariate factorization over Q is delegated to sympy.
    """
    n = len(m)
    if n == 0:
        return ()
    coeffs = minimal_polynomial(m)
    denom = 1
    from math import lcm

    for c in coeffs:
        denom = lcm(denom, c.denominator)
    int_coeffs = [int(c * denom) for c in coeffs]

    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(int_coeffs)), x)
    _, factors = poly.factor_list()
    eigs = []
    for fac, mult in factors:
        if mult != 1 or fac.degree() != 1:
            return None
        a1, a0 = fac.all_coeffs()
        eigs.append(Fraction(-int(a0), int(a1)))
    return tuple(sorted(eigs))
