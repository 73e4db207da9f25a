"""The Lehn-Sorger ring H(A){S_m} and its invariant part.

An element is a sum of terms (pi, a) with pi a permutation of 0..m-1 and a a
tensor indexed by the orbits of pi, ordered by their smallest element.
Permutations are tuples of images; (pi rho)(x) = pi(rho(x)).
"""
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial

from .exact.bits import popcount, relabel
from .surface import (ETA_TOP, Tensor, delta_star, mul_dicts, pullback_dict,
                      pushforward_dict)


# -- permutations ---------------------------------------------------------

def identity_perm(m):
    return tuple(range(m))


def compose(p, q):
    return tuple(p[x] for x in q)


def inverse_perm(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def cycle(m, *elts):
    """The cycle e0 -> e1 -> ... -> e0 on 0..m-1 (0-based)."""
    p = list(range(m))
    for a, b in zip(elts, elts[1:] + elts[:1]):
        p[a] = b
    return tuple(p)


@lru_cache(maxsize=None)
def orbits(p):
    """Orbits of <p>, each sorted, ordered by smallest element."""
    seen = set()
    out = []
    for x in range(len(p)):
        if x in seen:
            continue
        orb = [x]
        seen.add(x)
        y = p[x]
        while y != x:
            orb.append(y)
            seen.add(y)
            y = p[y]
        out.append(tuple(sorted(orb)))
    return tuple(out)


def joint_orbits(p, q):
    parent = list(range(len(p)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in (p, q):
        for x, y in enumerate(g):
            parent[find(x)] = find(y)
    groups = {}
    for x in range(len(p)):
        groups.setdefault(find(x), []).append(x)
    return tuple(sorted(tuple(g) for g in groups.values()))


def cycle_notation(p):
    """1-based cycle notation, fixed points omitted; '()' for the identity."""
    parts = []
    for orb in orbits(p):
        if len(orb) == 1:
            continue
        x = orb[0]
        cyc = [x]
        y = p[x]
        while y != x:
            cyc.append(y)
            y = p[y]
        parts.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
    return "".join(parts) or "()"


def parse_cycles(m, text):
    p = list(range(m))
    for chunk in text.replace(")", "").split("("):
        elts = [int(t) - 1 for t in chunk.split()]
        if len(elts) > 1:
            for a, b in zip(elts, elts[1:] + elts[:1]):
                p[a] = b
    return tuple(p)


def _position_map(small, big):
    """For each block of `small`, the index of the block of `big` containing it."""
    where = {}
    for j, blk in enumerate(big):
        for x in blk:
            where[x] = j
    return tuple(where[blk[0]] for blk in small)


def graph_defect(p, q):
    """g(p, q)(B) for each orbit B of <p, q>, as a tuple."""
    out = []
    pq = compose(p, q)
    for blk in joint_orbits(p, q):
        s = set(blk)
        n_p = sum(1 for o in orbits(p) if o[0] in s)
        n_q = sum(1 for o in orbits(q) if o[0] in s)
        n_pq = sum(1 for o in orbits(pq) if o[0] in s)
        twice = len(blk) + 2 - n_p - n_q - n_pq
        if twice % 2:
            raise ArithmeticError("odd graph defect")
        out.append(twice // 2)
    return tuple(out)


@lru_cache(maxsize=None)
def _product_plan(p, q):
    if any(graph_defect(p, q)):
        return None
    joint = joint_orbits(p, q)
    pq = compose(p, q)
    return (_position_map(orbits(p), joint), _position_map(orbits(q), joint),
            _position_map(orbits(pq), joint), pq)


# -- elements --------------------------------------------------------------

class LSElement:
    """A finite sum of terms a * pi; terms maps pi to {mask: coefficient}."""

    __slots__ = ("m", "terms")

    def __init__(self, m, terms=None):
        self.m = m
        self.terms = {}
        for p, t in (terms or {}).items():
            t = {k: v for k, v in t.items() if v != 0}
            if t:
                if len(p) != m:
                    raise ValueError("permutation of the wrong size")
                self.terms[p] = t

    @classmethod
    def term(cls, p, tensor):
        """One term; tensor is a Tensor indexed by the orbits of p."""
        if tensor.r != len(orbits(p)):
            raise ValueError("tensor length must equal the number of orbits")
        return cls(len(p), {p: dict(tensor.coeffs)})

    @classmethod
    def unit(cls, m):
        return cls(m, {identity_perm(m): {0: 1}})

    def _same(self, other):
        if other.m != self.m:
            raise ValueError("elements of different symmetric groups")

    def __add__(self, other):
        self._same(other)
        out = {p: dict(t) for p, t in self.terms.items()}
        for p, t in other.terms.items():
            d = out.setdefault(p, {})
            for k, v in t.items():
                d[k] = d.get(k, 0) + v
        return LSElement(self.m, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return LSElement(self.m, {p: {k: c * v for k, v in t.items()} for p, t in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, LSElement):
            return ls_multiply(self, other)
        return self.scale(other)

    def __eq__(self, other):
        return isinstance(other, LSElement) and self.m == other.m and (self - other).terms == {}

    def __hash__(self):
        return hash((self.m, frozenset((p, frozenset(t.items())) for p, t in self.terms.items())))

    def is_zero(self):
        return not self.terms

    def id_component(self):
        return Tensor(self.m, self.terms.get(identity_perm(self.m), {}))

    def n_terms(self):
        return sum(len(t) for t in self.terms.values())

    def degrees(self):
        """Cohomological degrees present: deg(a) + 2 (m - #orbits)."""
        return sorted({popcount(k) + 2 * (self.m - len(orbits(p)))
                       for p, t in self.terms.items() for k in t})

    def degree(self):
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError("element is not homogeneous")
        return ds[0] if ds else 0

    def shifted_degree(self):
        return self.degree() - 2 * self.m

    def parity(self):
        return self.degree() & 1

    def __repr__(self):
        return f"LSElement(m={self.m}, perms={len(self.terms)}, terms={self.n_terms()})"

    # serialisation: permutation in cycle notation, tensor as
    # [orbit index, monomial as list of 1-based eta indices, coefficient]
    def to_json(self):
        from .exact.scalars import format_scalar
        out = []
        for p in sorted(self.terms):
            rows = []
            n_orb = len(orbits(p))
            for mask, c in sorted(self.terms[p].items()):
                factors = [[pos, [s + 1 for s in range(4) if (mask >> (4 * pos + s)) & 1]]
                           for pos in range(n_orb) if (mask >> (4 * pos)) & ETA_TOP]
                rows.append({"factors": factors, "coeff": format_scalar(c)})
            out.append({"perm": cycle_notation(p), "tensor": rows})
        return {"m": self.m, "terms": out}

    @classmethod
    def from_json(cls, data):
        from .exact.scalars import parse_scalar
        m = data["m"]
        terms = {}
        for item in data["terms"]:
            p = parse_cycles(m, item["perm"])
            t = terms.setdefault(p, {})
            for row in item["tensor"]:
                mask = 0
                for pos, etas in row["factors"]:
                    for s in etas:
                        mask |= 1 << (4 * pos + s - 1)
                c = parse_scalar(row["coeff"])
                if c.denominator == 1:
                    c = c.numerator
                t[mask] = t.get(mask, 0) + c
        return cls(m, terms)


def _mul_terms(p, a, q, b):
    plan = _product_plan(p, q)
    if plan is None:
        return None, None
    map_p, map_q, map_pq, pq = plan
    prod = mul_dicts(pullback_dict(map_p, a), pullback_dict(map_q, b))
    if not prod:
        return pq, {}
    return pq, pushforward_dict(map_pq, prod)


def ls_multiply(x, y, only=None):
    """Product in H(A){S_m}.  With only=perm, keep just the terms landing on perm."""
    x._same(y)
    out = {}
    for p, a in x.terms.items():
        for q, b in y.terms.items():
            if only is not None and compose(p, q) != only:
                continue
            pq, t = _mul_terms(p, a, q, b)
            if not t:
                continue
            d = out.setdefault(pq, {})
            get = d.get
            for k, v in t.items():
                d[k] = get(k, 0) + v
    return LSElement(x.m, out)


def ls_product(*factors):
    out = factors[0]
    for f in factors[1:]:
        out = ls_multiply(out, f)
    return out


def act(sigma, x):
    """sigma . (a pi) = (sigma_* a) sigma pi sigma^{-1}."""
    inv = inverse_perm(sigma)
    out = {}
    for p, t in x.terms.items():
        newp = compose(compose(sigma, p), inv)
        new_orbits = orbits(newp)
        index = {o: i for i, o in enumerate(new_orbits)}
        posmap = tuple(index[tuple(sorted(sigma[v] for v in o))] for o in orbits(p))
        d = out.setdefault(newp, {})
        for k, v in t.items():
            sign, kk = relabel(k, posmap)
            d[kk] = d.get(kk, 0) + sign * v
    return LSElement(x.m, out)


def symmetrize(x):
    out = LSElement(x.m)
    for s in permutations(range(x.m)):
        out = out + act(s, x)
    return out


def is_invariant(x):
    return all(act(s, x) == x for s in permutations(range(x.m)))


# -- distinguished classes ---------------------------------------------------

def _placed(pos, a):
    return {k << (4 * pos): v for k, v in a.coeffs.items()}


def mu_class(m, a):
    """sum_i p_i^*(a) Id."""
    t = {}
    for i in range(m):
        for k, v in _placed(i, a).items():
            t[k] = t.get(k, 0) + v
    return LSElement(m, {identity_perm(m): t})


def c_class(m, b):
    """c_m(b) = sum_{i<j} p_i^*(b) (i j); the orbit {i, j} sits at position i."""
    terms = {}
    for i in range(m):
        for j in range(i + 1, m):
            terms[cycle(m, i, j)] = _placed(i, b)
    return LSElement(m, terms)


def placed_term(p, pos, a):
    """p_pos^*(a) attached to p (0-based orbit position)."""
    return LSElement(len(p), {p: _placed(pos, a)})


def diag_term(m, i, j, a):
    """Delta^{ij}_*(a) Id for 0-based i < j: Delta_{2,*}(a) spread onto factors i and j."""
    if not i < j:
        raise ValueError("need i < j")
    t = {}
    for k, v in delta_star(2, a).coeffs.items():
        mm = ((k & ETA_TOP) << (4 * i)) | ((k >> 4) << (4 * j))
        t[mm] = t.get(mm, 0) + v
    return LSElement(m, {identity_perm(m): t})


def _term_1based(m, p, pos1, a):
    return placed_term(p, pos1 - 1, a)


def c_square_expand(m, b, b2):
    """c_m(b) c_m(b2) from the closed formula (identity part, 3-cycles, double transpositions).

    Indices below are 1-based so the positions match the formula term by term.
    """
    bb = b.wedge(b2)
    out = LSElement(m)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            out = out + diag_term(m, i - 1, j - 1, bb)
    # every 3-cycle appears three times, once per rotation of (h k l)
    for h in range(1, m + 1):
        for k in range(1, m + 1):
            for ll in range(1, m + 1):
                if len({h, k, ll}) < 3:
                    continue
                p = cycle(m, h - 1, k - 1, ll - 1)
                out = out + _term_1based(m, p, min(h, k, ll), bb)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            for h in range(1, m + 1):
                for k in range(h + 1, m + 1):
                    if {i, j} & {h, k}:
                        continue
                    if i < h < j or h < i < k:
                        pi, ph = i, h
                    elif i < j < h:
                        pi, ph = i, h - 1
                    else:  # h < k < i
                        pi, ph = i - 1, h
                    p = compose(cycle(m, i - 1, j - 1), cycle(m, h - 1, k - 1))
                    n_orb = len(orbits(p))
                    t = Tensor.placed(n_orb, pi - 1, b) * Tensor.placed(n_orb, ph - 1, b2)
                    out = out + LSElement(m, {p: t.coeffs})
    return out


def cut_class(m):
    """prod_s mu(eta_s): the class of the fibre of the summation map."""
    from .surface import eta
    out = mu_class(m, eta(1))
    for s in (2, 3, 4):
        out = ls_multiply(out, mu_class(m, eta(s)))
    return out


def integrate_kummer(n, x):
    """Integral over K_n(A) of the class of x in H(A)^[n+1].

    x must be homogeneous of cohomological degree 4n.  The value is the
    coefficient of eta^{(x)(n+1)} Id in x * cut, divided by (n+1)!.
    """
    m = n + 1
    if x.m != m:
        raise ValueError(f"element lives in S_{x.m}, expected S_{m}")
    if x.is_zero():
        return Fraction(0)
    if x.degrees() != [4 * n]:
        raise ValueError(f"degree {x.degrees()} does not match 4n = {4 * n}")
    top = ls_multiply(x, cut_class(m), only=identity_perm(m))
    return Fraction(top.terms.get(identity_perm(m), {}).get((1 << (4 * m)) - 1, 0), factorial(m))
