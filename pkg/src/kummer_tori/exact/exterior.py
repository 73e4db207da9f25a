"""Exterior algebra of a rank-4 lattice with exact coefficients.

Basis monomials are bitmasks over the four generators, so ``0b0011`` is
e1^e2 and ``0b1111`` is the top monomial.  ``kind`` records which space the
generators live in ('V', 'V*' or 'H' for the odd classes of a surface) and
guards against mixing them.
"""
from itertools import combinations

from .bits import merge_sign, mono_mul, popcount

RANK = 4
TOP = (1 << RANK) - 1

# e12, e13, e14, e23, e24, e34
WEDGE2_MASKS = tuple(sum(1 << i for i in c) for c in combinations(range(RANK), 2))


def masks_of_degree(k, rank=RANK):
    return [sum(1 << i for i in c) for c in combinations(range(rank), k)]


class ExtElement:
    __slots__ = ("kind", "coeffs")

    def __init__(self, coeffs=None, kind="V"):
        self.kind = kind
        self.coeffs = {m: c for m, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def gen(cls, i, kind="V"):
        """Basis vector e_{i+1}."""
        return cls({1 << i: 1}, kind)

    @classmethod
    def mono(cls, indices, kind="V", coeff=1):
        """coeff * e_{i1} ^ e_{i2} ^ ... in the order given (0-based)."""
        out = cls({0: coeff}, kind)
        for i in indices:
            out = out.wedge(cls.gen(i, kind))
        return out

    @classmethod
    def scalar(cls, c, kind="V"):
        return cls({0: c}, kind)

    @classmethod
    def from_vector(cls, vec, kind="V"):
        return cls({1 << i: c for i, c in enumerate(vec)}, kind)

    @classmethod
    def from_wedge2(cls, vec, kind="V"):
        """From coordinates on (e12, e13, e14, e23, e24, e34)."""
        return cls(dict(zip(WEDGE2_MASKS, vec)), kind)

    def wedge2_coords(self):
        return [self.coeffs.get(m, 0) for m in WEDGE2_MASKS]

    def vector(self):
        return [self.coeffs.get(1 << i, 0) for i in range(RANK)]

    def _check(self, other):
        if other.kind != self.kind:
            raise ValueError(f"cannot combine {self.kind} with {other.kind}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return ExtElement(out, self.kind)

    def __neg__(self):
        return ExtElement({m: -c for m, c in self.coeffs.items()}, self.kind)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return ExtElement({m: c * v for m, v in self.coeffs.items()}, self.kind)

    def __rmul__(self, c):
        return self.scale(c)

    def wedge(self, other):
        self._check(other)
        out = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                s, m = mono_mul(m1, m2)
                if s:
                    out[m] = out.get(m, 0) + s * c1 * c2
        return ExtElement(out, self.kind)

    __xor__ = wedge

    def __eq__(self, other):
        if not isinstance(other, ExtElement):
            return NotImplemented
        return self.kind == other.kind and (self - other).coeffs == {}

    def __hash__(self):
        return hash((self.kind, frozenset(self.coeffs.items())))

    def is_zero(self):
        return not self.coeffs

    def degrees(self):
        return sorted({popcount(m) for m in self.coeffs})

    def degree(self):
        """Degree of a homogeneous element (0 for the zero element)."""
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError("element is not homogeneous")
        return ds[0] if ds else 0

    def parity(self):
        return self.degree() & 1

    def component(self, k):
        return ExtElement({m: c for m, c in self.coeffs.items() if popcount(m) == k}, self.kind)

    def top(self):
        return self.coeffs.get(TOP, 0)

    def map_scalars(self, f):
        return ExtElement({m: f(c) for m, c in self.coeffs.items()}, self.kind)

    def __repr__(self):
        if not self.coeffs:
            return f"ExtElement(0, {self.kind})"
        parts = []
        for m in sorted(self.coeffs, key=lambda x: (popcount(x), x)):
            idx = "".join(str(i + 1) for i in range(RANK) if m >> i & 1) or "1"
            parts.append(f"{self.coeffs[m]}*e{idx}")
        return f"ExtElement({' + '.join(parts)}, {self.kind})"


def vol(x):
    """Coefficient of the top monomial; x must be of pure degree 4."""
    if any(popcount(m) != RANK for m in x.coeffs):
        raise ValueError("vol needs an element of top degree")
    return x.top()


def pairing(x, z):
    """<x, z> for x in L^k V* and z in L^k V, with dual monomial bases."""
    if x.kind == z.kind:
        raise ValueError("pairing needs a dual element and a primal element")
    return sum((c * z.coeffs.get(m, 0) for m, c in x.coeffs.items()), 0)


def _hodge_sign(m):
    return merge_sign(TOP ^ m, m)


def iota(x):
    """L^2 V* -> L^2 V with vol(iota(x) ^ z) = <x, z> for every z."""
    if x.kind != "V*" or any(popcount(m) != 2 for m in x.coeffs):
        raise ValueError("iota takes a 2-form on V*")
    return ExtElement({TOP ^ m: _hodge_sign(m) * c for m, c in x.coeffs.items()}, "V")


def iota_inv(y):
    if y.kind != "V" or any(popcount(m) != 2 for m in y.coeffs):
        raise ValueError("iota_inv takes a 2-vector in V")
    return ExtElement({TOP ^ m: _hodge_sign(TOP ^ m) * c for m, c in y.coeffs.items()}, "V*")


def contract(ell, x):
    """Interior product of a covector (list of 4 scalars) into x, as a derivation."""
    out = {}
    for m, c in x.coeffs.items():
        k = 0
        for i in range(RANK):
            if m >> i & 1:
                if ell[i] != 0:
                    r = m ^ (1 << i)
                    v = (-1) ** k * ell[i] * c
                    out[r] = out.get(r, 0) + v
                k += 1
    return ExtElement(out, x.kind)


def dual_kind(kind):
    return {"V": "V*", "V*": "V"}[kind]
