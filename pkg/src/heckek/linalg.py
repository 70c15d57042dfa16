"""Exact integer linear algebra: Smith form with transforms, kernels, char polys."""
from fractions import Fraction

from . import kernels


class IntMatrix:
    """Dense integer matrix stored as a list of rows."""

    def __init__(self, rows, ncols=None):
        self.rows = [[int(v) for v in r] for r in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        for r in self.rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows and self.ncols == other.ncols

    def __repr__(self):
        return "IntMatrix(%r)" % (self.rows,)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self):
        return IntMatrix([list(c) for c in zip(*self.rows)] if self.rows else [], self.nrows)

    def __matmul__(self, other):
        return IntMatrix(matmul(self.rows, other.rows), other.ncols)

    def elementary_divisors(self):
        return kernels.snf_diagonal(self.rows)


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a:
        return []
    cols = list(zip(*b)) if b else []
    if not cols:
        return [[] for _ in a]
    return [[sum(x * y for x, y in zip(r, c)) for c in cols] for r in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(r, v)) for r in a]


def transpose(a):
    return [list(c) for c in zip(*a)]


def smith_normal_form(rows):
    """Return (D, U, V) with U*A*V = D diagonal, d_i | d_{i+1}, U and V unimodular."""
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]

    t = 0
    while t < min(m, n):
        entries = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not entries:
            break
        _, bi, bj = min(entries)
        swap_rows(t, bi)
        swap_cols(t, bj)
        p = a[t][t]
        clean = True
        for i in range(t + 1, m):
            if a[i][t]:
                add_row(i, t, -(a[i][t] // p))
                if a[i][t]:
                    clean = False
        for j in range(t + 1, n):
            if a[t][j]:
                add_col(j, t, -(a[t][j] // p))
                if a[t][j]:
                    clean = False
        if not clean:
            continue
        bad = next((i for i in range(t + 1, m)
                    if any(a[i][j] % p for j in range(t + 1, n))), None)
        if bad is not None:
            add_row(t, bad, 1)
            continue
        if p < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return a, U, V


def diagonal(D):
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def cokernel_invariants(rows, nrows=None):
    """Cokernel of the column span of A in Z^nrows: (free rank, torsion invariants > 1)."""
    if nrows is None:
        nrows = len(rows)
    if not rows or not rows[0]:
        return nrows, []
    divs = kernels.snf_diagonal(rows)
    return nrows - len(divs), [d for d in divs if d > 1]


def rank(rows):
    if not rows or not rows[0]:
        return 0
    return len(kernels.snf_diagonal(rows))


def integer_kernel(rows, n=None):
    """Z-basis (as columns, returned as a list of vectors) of {x : A x = 0}."""
    if n is None:
        n = len(rows[0]) if rows else 0
    if not rows:
        return [[int(i == j) for i in range(n)] for j in range(n)]
    D, U, V = smith_normal_form(rows)
    r = sum(1 for i in range(min(len(D), n)) if D[i][i])
    return [[V[i][j] for i in range(n)] for j in range(r, n)]


def char_poly(a):
    """Coefficients c_0..c_r of det(t I - A) = sum c_k t^(r-k), exact (Faddeev-LeVerrier)."""
    r = len(a)
    coeffs = [1]
    if r == 0:
        return coeffs
    M = [[0] * r for _ in range(r)]
    c = 1
    for k in range(1, r + 1):
        # M_k = A M_{k-1} + c_{k-1} I
        M = matmul(a, M)
        for i in range(r):
            M[i][i] += c
        AM = matmul(a, M)
        tr = sum(AM[i][i] for i in range(r))
        c = Fraction(-tr, k)
        if c.denominator != 1:
            raise ArithmeticError("non-integral characteristic polynomial")
        c = int(c)
        coeffs.append(c)
    return coeffs


def exterior_traces(a):
    """[tr Lambda^j A for j = 0..r] from the characteristic polynomial."""
    coeffs = char_poly(a)
    return [(-1) ** j * c for j, c in enumerate(coeffs)]


def det(a):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    m = [list(map(int, r)) for r in a]
    r = len(m)
    if r == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(r - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, r) if m[i][k]), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, r):
            for j in range(k + 1, r):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[r - 1][r - 1]


def inverse(a):
    """Exact inverse of an integer matrix as Fractions; raises on singular input."""
    r = len(a)
    m = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(r)]
         for i, row in enumerate(a)]
    for c in range(r):
        piv = next((i for i in range(c, r) if m[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [v / p for v in m[c]]
        for i in range(r):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[r:] for row in m]


def inverse_unimodular(a):
    """Integer inverse of a matrix with determinant +-1."""
    inv = inverse(a)
    if any(v.denominator != 1 for row in inv for v in row):
        raise ValueError("matrix is not unimodular")
    return [[int(v) for v in row] for row in inv]
