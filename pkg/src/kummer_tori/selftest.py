"""Property checks of the Lehn-Sorger ring and of its building blocks on random input."""
import random as _random
from itertools import permutations

from .exact.exterior import ExtElement
from .exact.linalg import det
from .exact.skew import pfaffian
from .lehn_sorger import (LSElement, act, c_class, c_square_expand, ls_multiply, mu_class,
                          orbits, symmetrize)
from .surface import Tensor, mul_dicts, pullback, pushforward, pushforward_gram, t_form
from .weil import random_skew_int


def random_monomial_tensor(rng, r, parity=None, terms=2, max_degree=None):
    """A sparse tensor on r factors; all monomials of the requested parity.

    Low degrees are favoured so that products rarely overflow the top class.
    """
    top = 4 * r if max_degree is None else min(max_degree, 4 * r)
    out = {}
    while len(out) < terms:
        d = rng.randint(0, top)
        if parity is not None and d % 2 != parity:
            continue
        bits = rng.sample(range(4 * r), d)
        out[sum(1 << b for b in bits)] = rng.choice([-2, -1, 1, 2, 3])
    return Tensor(r, out)


def random_element(rng, m, parity=None, terms=2):
    x = LSElement(m)
    perms = list(permutations(range(m)))
    for _ in range(terms):
        p = rng.choice(perms)
        t = random_monomial_tensor(rng, len(orbits(p)), parity, 1, max_degree=2)
        x = x + LSElement.term(p, t)
    return x


def random_invariant(rng, m, parity=None, terms=1):
    return symmetrize(random_element(rng, m, parity, terms))


def associativity(rng, m):
    """(ok, nontrivial) for (xy)z = x(yz) on random invariants."""
    x, y, z = (random_invariant(rng, m) for _ in range(3))
    left = ls_multiply(ls_multiply(x, y), z)
    return left == ls_multiply(x, ls_multiply(y, z)), bool(left.terms)


def graded_commutativity(rng, m):
    """(ok, nontrivial) for xy = (-1)^{|x||y|} yx on homogeneous invariants."""
    px, py = rng.randrange(2), rng.randrange(2)
    x = random_invariant(rng, m, px)
    y = random_invariant(rng, m, py)
    sign = -1 if px and py else 1
    prod = ls_multiply(x, y)
    return prod == ls_multiply(y, x).scale(sign), bool(prod.terms)


def invariance_of_products(rng, m):
    x, y = random_invariant(rng, m), random_invariant(rng, m)
    prod = ls_multiply(x, y)
    return all(act(s, prod) == prod for s in permutations(range(m))), bool(prod.terms)


def c_square_agrees(m, b, b2):
    return c_square_expand(m, b, b2) == ls_multiply(c_class(m, b), c_class(m, b2))


def identity_products(rng, m):
    """Products of identity-supported classes are the componentwise cup products."""
    a = ExtElement({rng.randrange(16): 1}, "H")
    b = ExtElement({rng.randrange(16): 1}, "H")
    x, y = mu_class(m, a), mu_class(m, b)
    ident = tuple(range(m))
    want = LSElement(m, {ident: mul_dicts(x.terms.get(ident, {}), y.terms.get(ident, {}))})
    return ls_multiply(x, y) == want


def random_surjection(rng, r):
    k = rng.randint(1, r)
    s = list(range(k)) + [rng.randrange(k) for _ in range(r - k)]
    rng.shuffle(s)
    # relabel so the image is 0..k-1
    return tuple(s)


def pushforward_adjoint(rng, r):
    """T(f_*(y) x) = T(y f^*(x)) and the fast pushforward equals the reference one."""
    s = random_surjection(rng, r)
    k = max(s) + 1
    y = random_monomial_tensor(rng, k, terms=3)
    x = random_monomial_tensor(rng, r, terms=3)
    lhs = t_form(pushforward(s, y) * x)
    rhs = t_form(y * pullback(s, x))
    return lhs == rhs and pushforward(s, y) == pushforward_gram(s, y)


def pfaffian_squared(rng):
    x = random_skew_int(rng)
    return pfaffian(x) ** 2 == det(x)


def run_all(seed=0, count=10, ms=(2, 3, 4)):
    """Names and pass counts of every property, as (name, passed, total).

    The '-nonzero' rows record that at least one product was nonzero, so the
    identities were not checked only on zero.
    """
    rng = _random.Random(seed)
    out = []
    for m in ms:
        for name, check in (("associativity", associativity),
                            ("graded-commutativity", graded_commutativity),
                            ("invariant-products", invariance_of_products)):
            res = [check(rng, m) for _ in range(count)]
            out.append((f"{name}-m{m}", sum(ok for ok, _ in res), count))
            out.append((f"{name}-m{m}-nonzero", int(any(nz for _, nz in res)), 1))
        out.append((f"identity-products-m{m}",
                    sum(identity_products(rng, m) for _ in range(count)), count))
        basis = [ExtElement({k: 1}, "H") for k in range(16)]
        out.append((f"c-square-expansion-m{m}",
                    sum(c_square_agrees(m, b, b2) for b in basis for b2 in basis), 256))
    for r in (2, 3, 4):
        out.append((f"pushforward-adjoint-r{r}",
                    sum(pushforward_adjoint(rng, r) for _ in range(count)), count))
    out.append(("pfaffian-squared", sum(pfaffian_squared(rng) for _ in range(100)), 100))
    return out
