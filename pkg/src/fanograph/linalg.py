"""Exact integer linear algebra: determinants, kernels, lattice charts.

Everything here works over Python ints (arbitrary precision) or Fraction;
no floating point is used anywhere.  Matrices are lists of tuples/lists of
ints, row-major.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Vec = tuple[int, ...]


def dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def vec_sub(a, b) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vec_add(a, b) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vec_neg(a) -> Vec:
    return tuple(-x for x in a)


def vec_gcd(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive(v) -> Vec:
    """Divide a nonzero integer vector by the gcd of its entries."""
    g = vec_gcd(v)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in v)


def mat_vec(m, v) -> Vec:
    return tuple(dot(row, v) for row in m)


def transpose(m):
    return [list(col) for col in zip(*m)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[dot(row, col) for col in bt] for row in a]


def bareiss_det(m) -> int:
    """Determinant of a square integer matrix, fraction-free."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pr = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pr is None:
                return 0
            a[k], a[pr] = a[pr], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _bareiss_echelon(rows):
    """Fraction-free row echelon form with column pivoting.

    Returns (echelon rows, pivot column indices); rank = number of pivots.
    """
    a = [list(r) for r in rows]
    m = len(a)
    if m == 0:
        return [], []
    n = len(a[0])
    piv = []
    prev = 1
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if a[i][c] != 0), None)
        if pr is None:
            continue
        if pr != r:
            a[r], a[pr] = a[pr], a[r]
        pivot = a[r][c]
        for i in range(r + 1, m):
            aic = a[i][c]
            if aic == 0 and prev == 1:
                # still rescale row for Bareiss consistency
                for j in range(c + 1, n):
                    a[i][j] = a[i][j] * pivot
            else:
                for j in range(c + 1, n):
                    a[i][j] = (a[i][j] * pivot - aic * a[r][j]) // prev
            a[i][c] = 0
        prev = pivot
        piv.append(c)
        r += 1
        if r == m:
            break
    return a[:r], piv


def rank_int(rows) -> int:
    if not rows:
        return 0
    _, piv = _bareiss_echelon(rows)
    return len(piv)


def hyperplane_through(points):
    """Primitive normal and offset (a, b) of the unique hyperplane through
    n affinely independent points of Z^n, or None if the points are
    affinely dependent.

    The orientation of a is arbitrary; callers fix it against the point set.
    """
    n = len(points[0])
    p0 = points[0]
    rows = [vec_sub(p, p0) for p in points[1:]]
    ech, piv = _bareiss_echelon(rows)
    if len(piv) != n - 1:
        return None
    free = next(c for c in range(n) if c not in piv)
    x = [Fraction(0)] * n
    x[free] = Fraction(1)
    for i in reversed(range(len(piv))):
        c = piv[i]
        s = sum(ech[i][j] * x[j] for j in range(c + 1, n) if x[j])
        x[c] = Fraction(-s, ech[i][c])
    denom = 1
    for f in x:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    a = primitive(tuple(int(f * denom) for f in x))
    return a, dot(a, p0)


def row_echelon_transform(rows):
    """Integer row echelon via elementary (unimodular) row operations.

    Returns (E, T, pivot_cols) with E = T @ rows and T unimodular.
    """
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    t = identity(m)
    piv = []
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if a[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(a[i][c]))
            if i0 != r:
                a[r], a[i0] = a[i0], a[r]
                t[r], t[i0] = t[i0], t[r]
            done = True
            for i in range(r + 1, m):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    t[i] = [x - q * y for x, y in zip(t[i], t[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if a[r][c] != 0:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
                t[r] = [-x for x in t[r]]
            piv.append(c)
            r += 1
    return a, t, piv


def integer_kernel(rows):
    """Basis of the lattice {x in Z^n : rows @ x = 0} (a saturated lattice).

    Returns a list of integer vectors; empty list when the kernel is {0}.
    """
    n = len(rows[0])
    e, t, _ = row_echelon_transform(transpose(rows))
    ker = []
    for i, erow in enumerate(e):
        if all(x == 0 for x in erow):
            ker.append(tuple(t[i]))
    # rows of e beyond its length are implicitly zero in echelon output;
    # row_echelon_transform returns full-height E, so nothing is missed.
    return ker


def saturated_row_space(rows):
    """Basis of span_Q(rows) ∩ Z^n, the saturation of the row lattice."""
    ker = integer_kernel(rows)
    if not ker:
        n = len(rows[0])
        return [tuple(r) for r in identity(n)]
    return integer_kernel([list(k) for k in ker])


def solve_rational(a_rows, b):
    """Solve A x = b exactly over Q; returns tuple of Fractions or None."""
    m = len(a_rows)
    n = len(a_rows[0])
    aug = [[Fraction(x) for x in row] + [Fraction(bv)]
           for row, bv in zip(a_rows, b)]
    piv = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv):
        x[c] = aug[i][n]
    return tuple(x)


def solve_integer(a_rows, b):
    """Solve A x = b requiring an integer solution; None if none exists."""
    x = solve_rational(a_rows, b)
    if x is None or any(f.denominator != 1 for f in x):
        return None
    return tuple(int(f) for f in x)


def inverse_unimodular(u):
    """Exact inverse of a unimodular integer matrix (integer entries)."""
    n = len(u)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(u)]
    for c in range(n):
        pr = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[pr] = aug[pr], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    out = []
    for i in range(n):
        row = aug[i][n:]
        if any(f.denominator != 1 for f in row):
            raise ValueError("matrix is not unimodular")
        out.append(tuple(int(f) for f in row))
    return out


def particular_solution(a, b):
    """Some x in Z^n with <a, x> = b, for primitive a."""
    e, t, _ = row_echelon_transform(transpose([list(a)]))
    g = e[0][0]
    if b % g != 0:
        raise ValueError("no integer solution")
    return tuple(x * (b // g) for x in t[0])


def hyperplane_chart(a, b):
    """Lattice isomorphism {x in Z^n : <a,x> = b} -> Z^(n-1).

    a must be primitive.  Returns (to_chart, from_chart) callables.
    """
    n = len(a)
    x0 = particular_solution(a, 1)
    ker = integer_kernel([list(a)])
    u = [[x0[i]] + [k[i] for k in ker] for i in range(n)]  # columns x0,ker
    uinv = inverse_unimodular(u)

    def to_chart(x):
        y = mat_vec(uinv, x)
        if y[0] != b:
            raise ValueError("point not on hyperplane")
        return y[1:]

    def from_chart(c):
        y = (b,) + tuple(c)
        return mat_vec(u, y)

    return to_chart, from_chart
