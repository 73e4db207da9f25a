"""Skew-symmetric 4x4 matrices and integral skew normal forms."""
from fractions import Fraction

from .linalg import identity, madd, matmul, mscale, trace, is_zero_matrix


def is_skew(a):
    n = len(a)
    return all(a[i][j] == -a[j][i] for i in range(n) for j in range(n))


def pfaffian(a):
    """a12 a34 - a13 a24 + a14 a23 (0-based indices below)."""
    if len(a) != 4 or not is_skew(a):
        raise ValueError("pfaffian needs a skew 4x4 matrix")
    return a[0][1] * a[2][3] - a[0][2] * a[1][3] + a[0][3] * a[1][2]


def adjugate_skew(a):
    """The skew matrix whose product with a is Pf(a) times the identity."""
    return [
        [0, -a[2][3], a[1][3], -a[1][2]],
        [a[2][3], 0, -a[0][3], a[0][2]],
        [-a[1][3], a[0][3], 0, -a[0][1]],
        [a[1][2], -a[0][2], a[0][1], 0],
    ]


def invert_skew(a):
    p = pfaffian(a)
    if p == 0:
        raise ZeroDivisionError("skew matrix with zero pfaffian")
    return mscale(Fraction(1) / p, adjugate_skew(a))


def cayley_residual(x, y):
    """(XY)^2 - Tr(XY)/2 * XY + Pf(X) Pf(Y) * I for skew 4x4 X, Y."""
    xy = matmul(x, y)
    r = madd(matmul(xy, xy), mscale(-trace(xy) * Fraction(1, 2), xy))
    return madd(r, mscale(pfaffian(x) * pfaffian(y), identity(4)))


def skew_cayley_check(x, y):
    return is_zero_matrix(cayley_residual(x, y))


class SkewMap4:
    """A skew bilinear form on a rank-4 space, stored as its matrix a[i][j]."""

    __slots__ = ("a",)

    def __init__(self, a):
        if len(a) != 4 or not is_skew(a):
            raise ValueError("not a skew 4x4 matrix")
        self.a = [list(r) for r in a]

    @classmethod
    def from_entries(cls, a12=0, a13=0, a14=0, a23=0, a24=0, a34=0):
        up = {(0, 1): a12, (0, 2): a13, (0, 3): a14, (1, 2): a23, (1, 3): a24, (2, 3): a34}
        m = [[0] * 4 for _ in range(4)]
        for (i, j), v in up.items():
            m[i][j] = v
            m[j][i] = -v
        return cls(m)

    def entries(self):
        a = self.a
        return (a[0][1], a[0][2], a[0][3], a[1][2], a[1][3], a[2][3])

    def pfaffian(self):
        return pfaffian(self.a)

    def inverse(self):
        return SkewMap4(invert_skew(self.a))

    def __eq__(self, other):
        return isinstance(other, SkewMap4) and self.a == other.a

    def __repr__(self):
        return f"SkewMap4{self.entries()}"


def skew_smith(m):
    """Elementary divisors d1 | d2 | ... of an integral skew matrix.

    Simultaneous row/column operations keep the matrix skew; the matrix is
    brought to a block sum of [[0, d], [-d, 0]] plus zeros.  Returns one d per
    block (zeros last), so a 2k x 2k matrix gives k numbers.
    """
    a = [[int(x) for x in r] for r in m]
    n = len(a)
    if not is_skew(a):
        raise ValueError("matrix is not skew-symmetric")

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        for r in a:
            r[i], r[j] = r[j], r[i]

    def add(src, dst, t):
        # row dst += t * row src, then the same on columns
        for c in range(n):
            a[dst][c] += t * a[src][c]
        for r in range(n):
            a[r][dst] += t * a[r][src]

    out = []
    s = 0
    while s + 1 < n:
        while True:
            cands = [(abs(a[i][j]), i, j) for i in range(s, n) for j in range(i + 1, n) if a[i][j]]
            if not cands:
                break
            _, i, j = min(cands)
            swap(s, i)
            swap(s + 1, j)
            if a[s][s + 1] < 0:
                swap(s, s + 1)
            p = a[s][s + 1]
            for k in range(s + 2, n):
                add(s + 1, k, -(a[s][k] // p))
                add(s, k, a[s + 1][k] // p)
            if any(a[s][k] or a[s + 1][k] for k in range(s + 2, n)):
                continue
            bad = next((r for r in range(s + 2, n) for c in range(s + 2, n) if a[r][c] % p), None)
            if bad is None:
                break
            add(bad, s, 1)
        if a[s][s + 1] == 0:
            break
        out.append(a[s][s + 1])
        s += 2
    return tuple(out + [0] * (n // 2 - len(out)))
