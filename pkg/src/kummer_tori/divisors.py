"""Gram matrices and elementary divisors of the polarization on V + V*.

The lattice basis is a1..a4, b1..b4 with
a1 = (0, v1*), a2 = (v2, 0), a3 = (v4, 0), a4 = (0, v3*),
b1 = (0, -v2*), b2 = (v1, 0), b3 = (v3, 0), b4 = (0, -v4*).
"""
from fractions import Fraction
from math import gcd

from .exact.linalg import int_det, matmul, transpose
from .exact.skew import skew_smith
from .hodge import Theta, h_normal_form, polarization_pairing

# the triple for fourfolds, with the sign of theta3 computed from the ring
THETA_K2 = (-1, -3, 3)

# divisibility -> (c, s)
TEMPLATES = {1: (1, 0), 2: (2, 1), 3: (3, 1), 6: (6, 1)}


def _vec(side, k, sign=1):
    out = [0] * 8
    out[k + (4 if side == "dual" else 0)] = sign
    return out


STANDARD_BASIS = [
    _vec("dual", 0), _vec("v", 1), _vec("v", 3), _vec("dual", 2),
    _vec("dual", 1, -1), _vec("v", 0), _vec("v", 2), _vec("dual", 3, -1),
]


class PolClass:
    """c (e v1*^v2* + v3*^v4*) + s zeta* with gcd(c, s) = 1."""

    def __init__(self, c, e, s):
        if c <= 0 or e <= 0:
            raise ValueError("c and e must be positive")
        if gcd(c, s) != 1:
            raise ValueError("gcd(c, s) must be 1")
        self.c, self.e, self.s = c, e, s

    @classmethod
    def template(cls, div, e):
        c, s = TEMPLATES[div]
        return cls(c, e, s)

    def h(self):
        return h_normal_form(self.c, self.e, self.s)

    def square(self, m=Fraction(1, 6)):
        """Dual square 2 c^2 e - s^2 / m."""
        return 2 * self.c ** 2 * self.e - self.s ** 2 / m

    def __repr__(self):
        return f"PolClass(c={self.c}, e={self.e}, s={self.s})"


def gram_on_standard_basis(p, theta=THETA_K2):
    th = Theta(*theta)
    h = p.h()
    gram = [[polarization_pairing(th, h, a, b) for b in STANDARD_BASIS] for a in STANDARD_BASIS]
    return [[int(x) if Fraction(x).denominator == 1 else x for x in row] for row in gram]


def intmat(p):
    c, e, s = p.c, p.e, p.s
    return [[3 * c, 3 * s, 0, 0],
            [3 * s, c * e, 0, 0],
            [0, 0, c, 3 * s],
            [0, 0, 3 * s, 3 * c * e]]


def block(a):
    """((0, a), (-a, 0)) for a 4x4 matrix a."""
    top = [[0] * 4 + list(r) for r in a]
    bot = [[-x for x in r] + [0] * 4 for r in transpose(a)]
    return top + bot


def elementary_divisor_table(div, e):
    return skew_smith(gram_on_standard_basis(PolClass.template(div, e)))


def expected_divisors(div, e):
    g = gcd(3, e)
    if div == 1:
        return (1, g, 3 * e // g, 3 * e)
    if div == 2:
        k = 3 * (4 * e - 3)
        return (1, g, k // g, k)
    if div == 3:
        return (3, 3, 3 * (3 * e - 1), 3 * (3 * e - 1))
    if div == 6:
        return (3, 3, 3 * (12 * e - 1), 3 * (12 * e - 1))
    raise ValueError("divisibility must be 1, 2, 3 or 6")


def _bezout(a, b):
    """(x, y) with a x + b y = gcd(a, b)."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return x0, y0


def adapted_basis(div, e, corrected=False):
    """Rows: the coordinates on a1..a4, b1..b4 of the listed diagonalizing basis.

    For divisibility 6 the listed vectors 2 a3 - a4 and b3 - 6e b4 do not
    diagonalize the form; ``corrected=True`` swaps the two coefficients
    (6e a3 - a4 and b3 - 2 b4), which does.
    """
    g = gcd(3, e)

    def a(k):
        return [1 if i == k - 1 else 0 for i in range(8)]

    def b(k):
        return [1 if i == k + 3 else 0 for i in range(8)]

    def lc(*terms):
        out = [Fraction(0)] * 8
        for coef, vec in terms:
            out = [x + coef * y for x, y in zip(out, vec)]
        return out

    if div == 1:
        x, y = _bezout(3, e)
        return [lc((1, a(3))), lc((x, a(1)), (y, a(2))),
                lc((Fraction(e, g), a(1)), (Fraction(-3, g), a(2))), lc((1, a(4))),
                lc((1, b(3))), lc((1, b(1)), (1, b(2))),
                lc((Fraction(e * y, g), b(1)), (Fraction(-3 * x, g), b(2))), lc((1, b(4)))]
    if div == 2:
        x, y = _bezout(3, 2 * e)
        return [lc((1, a(3))), lc((x, a(1)), (y, a(2))),
                lc((Fraction(2 * e, g), a(1)), (Fraction(-3, g), a(2))),
                lc((6 * e - 3, a(3)), (-1, a(4))),
                lc((1, b(4)), (-1, b(3))), lc((1, b(2))),
                lc((1, b(1)), (Fraction(-(6 * x + 3 * y), g), b(2))),
                lc((3, b(3)), (-2, b(4)))]
    if div == 3:
        return [lc((1, a(3))), lc((1, a(1))), lc((1, a(4)), (-1, a(3))),
                lc((e, a(1)), (-1, a(2))),
                lc((1, b(3))), lc((1, b(2))), lc((1, b(4)), (-1, b(3))),
                lc((1, b(1)), (-3, b(2)))]
    if div == 6:
        k3, k4 = (6 * e, 2) if corrected else (2, 6 * e)
        return [lc((1, a(1))), lc((1, a(3))), lc((k3, a(3)), (-1, a(4))),
                lc((2 * e, a(1)), (-1, a(2))),
                lc((1, b(2))), lc((1, b(4))), lc((1, b(3)), (-k4, b(4))),
                lc((1, b(1)), (-6, b(2)))]
    raise ValueError("divisibility must be 1, 2, 3 or 6")


def check_adapted_basis(div, e, corrected=False):
    """(integral, unimodular, diagonalizing) for the listed basis."""
    rows = adapted_basis(div, e, corrected)
    integral = all(Fraction(x).denominator == 1 for r in rows for x in r)
    unimodular = integral and abs(int_det([[int(x) for x in r] for r in rows])) == 1
    gram = gram_on_standard_basis(PolClass.template(div, e))
    new = matmul(matmul(rows, gram), transpose(rows))
    diag = expected_divisors(div, e)
    target = block([[diag[i] if i == j else 0 for j in range(4)] for i in range(4)])
    return integral, unimodular, new == target


def divisor_sweep(e_range=range(1, 11)):
    """One row per (divisibility, e): (div, e, computed, expected)."""
    rows = []
    for div in (1, 2, 3, 6):
        for e in e_range:
            rows.append((div, e, elementary_divisor_table(div, e), expected_divisors(div, e)))
    return rows
