"""Dense linear algebra over exact fields (Fraction or Quad entries).

Matrices are lists of rows.  Nothing here looks at floats.
"""
from fractions import Fraction


def _f(x):
    return Fraction(x) if isinstance(x, int) else x


def zeros(r, c):
    return [[0] * c for _ in range(r)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def matmul(a, b):
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), 0) for col in bt] for row in a]


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v)), 0) for row in a]


def madd(a, b):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mscale(c, a):
    return [[c * x for x in r] for r in a]


def trace(a):
    return sum((a[i][i] for i in range(len(a))), 0)


def is_zero_matrix(a):
    return all(x == 0 for r in a for x in r)


def rref(a):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    m = [[_f(x) for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a):
    if not a:
        return 0
    return len(rref(a)[1])


def row_basis(a):
    """Nonzero rows of the rref: a canonical basis of the row space."""
    if not a:
        return []
    m, piv = rref(a)
    return m[: len(piv)]


def nullspace(a, ncols=None):
    """Basis of {x : a x = 0}."""
    if not a:
        n = ncols
        return [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    m, piv = rref(a)
    n = len(a[0])
    free = [c for c in range(n) if c not in piv]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * n
        v[fcol] = Fraction(1)
        for i, pc in enumerate(piv):
            v[pc] = -m[i][fcol]
        basis.append(v)
    return basis


def det(a):
    n = len(a)
    m = [[_f(x) for x in row] for row in a]
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d = d * m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def int_det(a):
    """Determinant of an integer matrix by Bareiss elimination (stays in int)."""
    n = len(a)
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if p is None:
                return 0
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


def inverse(a):
    n = len(a)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(a)]
    m, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in m]


def solve(a, b):
    """One solution x of a x = b, or None if inconsistent."""
    n = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    m, piv = rref(aug)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for i, pc in enumerate(piv):
        x[pc] = m[i][n]
    return x


def in_row_space(basis_rows, v):
    return rank(basis_rows + [v]) == rank(basis_rows)


def same_row_space(a, b):
    return row_basis(a) == row_basis(b)
