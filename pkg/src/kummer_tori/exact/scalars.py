"""Exact scalars: rationals and elements of a quadratic field Q(sqrt d)."""
from fractions import Fraction
from math import isqrt

Rational = (int, Fraction)


def _is_rational_square(q):
    q = Fraction(q)
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


class Quad:
    """a + b*sqrt(d) with a, b, d rational and d not a square."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=-1):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = Fraction(d)
        if _is_rational_square(self.d):
            raise ValueError(f"{self.d} is a rational square")

    def _coerce(self, other):
        if isinstance(other, Quad):
            if other.d != self.d:
                raise ValueError("quadratic elements from different fields")
            return other
        if isinstance(other, Rational):
            return Quad(other, 0, self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Quad(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return Quad(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Quad(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return Quad(self.a * other, self.b * other, self.d)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Quad(self.a * o.a + self.d * self.b * o.b,
                    self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def norm(self):
        return self.a * self.a - self.d * self.b * self.b

    def conj(self):
        return Quad(self.a, -self.b, self.d)

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return Quad(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Quad(self.a / other, self.b / other, self.d)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = Quad(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Quad):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, Rational):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self):
        return self.b == 0

    def rational(self):
        if self.b != 0:
            raise ValueError(f"{self} is not rational")
        return self.a

    def __repr__(self):
        return f"Quad({self.a}, {self.b}, {self.d})"

    def __str__(self):
        return format_scalar(self)


def conj(x):
    return x.conj() if isinstance(x, Quad) else x


def as_rational(x):
    """Return x as a Fraction; raises if x has an irrational part."""
    if isinstance(x, Quad):
        return x.rational()
    return Fraction(x)


def format_scalar(x):
    """Render as 'p/q' for rationals and 'a+b*sqrt(d)' for quadratic elements."""
    if isinstance(x, Quad):
        if x.b == 0:
            return format_scalar(x.a)
        sign = "-" if x.b < 0 else "+"
        return f"{format_scalar(x.a)}{sign}{format_scalar(abs(x.b))}*sqrt({format_scalar(x.d)})"
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_scalar(s):
    """Inverse of format_scalar."""
    s = s.strip()
    if "*sqrt(" in s:
        head, d = s[:-1].split("*sqrt(")
        # split a and b at the last sign that is not the leading one
        k = max(head.rfind("+", 1), head.rfind("-", 1))
        a, b = head[:k], head[k:]
        return Quad(Fraction(a), Fraction(b), Fraction(d))
    return Fraction(s)
