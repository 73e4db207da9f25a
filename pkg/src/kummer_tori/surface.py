"""Cohomology of an abelian surface and of its powers.

H(A) is the exterior algebra on eta_1..eta_4 with eta = eta_1 eta_2 eta_3 eta_4
and integral 1 on eta.  H(A^r) = H(A)^{(x) r} is modelled as the exterior
algebra on 4r generators: bit 4p+s is eta_{s+1} pulled back from factor p.
A pure tensor a_0 (x) ... (x) a_{r-1} is the product of the pullbacks in that
order, which builds the Koszul signs in.
"""
from functools import lru_cache
from itertools import combinations

from .exact.bits import merge_sign, popcount, relabel
from .exact.exterior import ExtElement

ETA_TOP = 0b1111


def eta(*indices):
    """eta_{i1} eta_{i2} ... with 1-based indices, in the order given."""
    return ExtElement.mono([i - 1 for i in indices], kind="H")


def coh(coeffs):
    return ExtElement(coeffs, kind="H")


ONE = ExtElement({0: 1}, kind="H")
POINT = eta(1, 2, 3, 4)


def integrate_A(a):
    return a.top()


def basis_A():
    """The 16 monomials of H(A), by degree then mask."""
    return [ExtElement({m: 1}, "H") for m in sorted(range(16), key=lambda m: (popcount(m), m))]


class Tensor:
    """An element of H(A)^{(x) r}, as {mask over 4r bits: coefficient}."""

    __slots__ = ("r", "coeffs")

    def __init__(self, r, coeffs=None):
        self.r = r
        self.coeffs = {m: c for m, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def pure(cls, factors):
        """a_0 (x) a_1 (x) ... for ExtElements of kind 'H'."""
        out = cls(0, {0: 1})
        for a in factors:
            out = out.append(a)
        return out

    @classmethod
    def unit(cls, r):
        return cls(r, {0: 1})

    @classmethod
    def placed(cls, r, pos, a):
        """p_pos^*(a) in H(A^r)."""
        return cls(r, {m << (4 * pos): c for m, c in a.coeffs.items()})

    def append(self, a):
        shift = 4 * self.r
        return Tensor(self.r + 1, {m1 | (m2 << shift): c1 * c2
                                   for m1, c1 in self.coeffs.items()
                                   for m2, c2 in a.coeffs.items()})

    def _same(self, other):
        if other.r != self.r:
            raise ValueError(f"tensor lengths differ: {self.r} vs {other.r}")

    def __add__(self, other):
        self._same(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return Tensor(self.r, out)

    def __neg__(self):
        return Tensor(self.r, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return Tensor(self.r, {m: c * v for m, v in self.coeffs.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if not isinstance(other, Tensor):
            return self.scale(other)
        self._same(other)
        return Tensor(self.r, mul_dicts(self.coeffs, other.coeffs))

    def __eq__(self, other):
        return isinstance(other, Tensor) and self.r == other.r and (self - other).coeffs == {}

    def __hash__(self):
        return hash((self.r, frozenset(self.coeffs.items())))

    def is_zero(self):
        return not self.coeffs

    def degrees(self):
        return sorted({popcount(m) for m in self.coeffs})

    def degree(self):
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError("tensor is not homogeneous")
        return ds[0] if ds else 0

    def factor(self, mask, p):
        return (mask >> (4 * p)) & ETA_TOP

    def __repr__(self):
        return f"Tensor(r={self.r}, terms={len(self.coeffs)})"


def mul_dicts(x, y):
    out = {}
    get = out.get
    for m1, c1 in x.items():
        for m2, c2 in y.items():
            if m1 & m2:
                continue
            v = c1 * c2 if merge_sign(m1, m2) > 0 else -c1 * c2
            m = m1 | m2
            out[m] = get(m, 0) + v
    return {m: c for m, c in out.items() if c != 0}


def full_mask(r):
    return (1 << (4 * r)) - 1


def integrate(x):
    """Integral over A^r: the coefficient of eta^{(x) r}."""
    return x.coeffs.get(full_mask(x.r), 0)


def t_form(x):
    """T(a_1 (x) ... (x) a_r) = prod(-integral a_i)."""
    return (-1) ** x.r * integrate(x)


def _check_surjection(s, r):
    if len(s) != r:
        raise ValueError(f"map has {len(s)} entries, tensor has {r} factors")
    k = max(s) + 1 if s else 0
    if sorted(set(s)) != list(range(k)):
        raise ValueError(f"{s} is not a surjection onto 0..{k - 1}")
    return k


def pullback_dict(s, coeffs):
    s = tuple(s)
    out = {}
    for m, c in coeffs.items():
        sign, mm = relabel(m, s)
        if sign:
            out[mm] = out.get(mm, 0) + sign * c
    return {m: c for m, c in out.items() if c != 0}


def pullback(s, x):
    """f^* along the surjection s: I -> J, i.e. cup product inside each fibre."""
    k = _check_surjection(s, x.r)
    return Tensor(k, pullback_dict(s, x.coeffs))


def _monomials(r, degree):
    for c in combinations(range(4 * r), degree):
        yield sum(1 << i for i in c)


def pushforward_gram(s, y):
    """f_* characterised by T_I(f_*(y) x) = T_J(y f^*(x)), solved monomial by monomial.

    The T-pairing of monomials is a signed permutation matrix, so each
    coefficient is one pairing divided by a sign.  Slow; used as a reference.
    """
    r_target = len(s)
    k = _check_surjection(s, r_target)
    if y.r != k:
        raise ValueError("tensor does not live on the codomain of the map")
    full = full_mask(r_target)
    out = {}
    degs = {popcount(m) for m in y.coeffs}
    for d in degs:
        part = Tensor(k, {m: c for m, c in y.coeffs.items() if popcount(m) == d})
        for mono in _monomials(r_target, d + 4 * (r_target - k)):
            comp = full ^ mono
            pulled = pullback(s, Tensor(r_target, {comp: 1}))
            val = t_form(part * pulled)
            if val:
                norm = (-1) ** r_target * merge_sign(mono, comp)
                out[mono] = out.get(mono, 0) + val * norm
    return Tensor(r_target, out)


@lru_cache(maxsize=None)
def _delta_mono(r, m):
    """Delta_{r,*} of one monomial of H(A), as a tuple of (mask, coeff)."""
    res = pushforward_gram((0,) * r, Tensor(1, {m: 1}))
    return tuple(sorted(res.coeffs.items()))


def delta_star(r, a):
    """Delta_{r,*}: H(A) -> H(A)^{(x) r}, with T(Delta(a) b) = -integral(a b_1 ... b_r)."""
    out = {}
    for m, c in a.coeffs.items():
        for mm, v in _delta_mono(r, m):
            out[mm] = out.get(mm, 0) + c * v
    return Tensor(r, out)


@lru_cache(maxsize=None)
def _push_plan(s):
    """Fibre sizes in codomain order and the map from block-major slots to positions."""
    k = max(s) + 1
    fibres = [[i for i, j in enumerate(s) if j == q] for q in range(k)]
    order = tuple(i for fib in fibres for i in fib)
    return tuple(len(f) for f in fibres), order


@lru_cache(maxsize=200000)
def _push_mono(s, m):
    sizes, order = _push_plan(s)
    # expand block by block in codomain order; the slot layout is block-major
    acc = {0: 1}
    shift = 0
    for q, size in enumerate(sizes):
        a = (m >> (4 * q)) & ETA_TOP
        if size == 1:
            acc = {mm | (a << shift): c for mm, c in acc.items()}
        else:
            d = _delta_mono(size, a)
            acc = {mm | (dm << shift): c * dc for mm, c in acc.items() for dm, dc in d}
        shift += 4 * size
    out = {}
    for mm, c in acc.items():
        sign, target = relabel(mm, order)
        out[target] = out.get(target, 0) + sign * c
    return tuple((mm, c) for mm, c in out.items() if c)


def pushforward_dict(s, coeffs):
    s = tuple(s)
    out = {}
    get = out.get
    for m, c in coeffs.items():
        for mm, v in _push_mono(s, m):
            out[mm] = get(mm, 0) + c * v
    return {m: c for m, c in out.items() if c != 0}


def pushforward(s, y):
    """f_* along the surjection s: I -> J (adjoint of pullback under T)."""
    k = _check_surjection(s, len(s))
    if y.r != k:
        raise ValueError("tensor does not live on the codomain of the map")
    return Tensor(len(s), pushforward_dict(s, y.coeffs))
