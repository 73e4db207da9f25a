"""Even spinors of V + V*: the quadric Q+, the subspaces Z_x and the embedding of H^2 dual.

An even spinor alpha + eta + beta is stored as a triple (alpha, eta, beta)
with eta given by its 6 coordinates on e12..e34 and beta the coefficient of
the volume-one generator tau of L^4 V.
"""
from fractions import Fraction

from .exact.exterior import ExtElement, contract
from .exact.linalg import det, inverse, matmul, nullspace, rank, same_row_space
from .exact.skew import is_skew, pfaffian
from .hodge import dot, hodge_from_period, iota2, skew_to_omega, vol2


class Spinor:
    __slots__ = ("alpha", "eta", "beta")

    def __init__(self, alpha, eta, beta):
        self.alpha = alpha
        self.eta = list(eta)
        self.beta = beta

    def __eq__(self, other):
        return (self.alpha == other.alpha and self.eta == other.eta
                and self.beta == other.beta)

    def __repr__(self):
        return f"Spinor({self.alpha}, {self.eta}, {self.beta})"

    def as_list(self):
        return [self.alpha] + self.eta + [self.beta]


def q_plus_bilinear(x, y):
    """Polarization of q+: vol(eta ^ eta') - alpha beta' - alpha' beta."""
    return vol2(x.eta, y.eta) - x.alpha * y.beta - y.alpha * x.beta


def q_plus(x):
    """vol(eta ^ eta - 2 alpha beta)."""
    return q_plus_bilinear(x, x)


def z_equations(x):
    """8x8 matrix whose kernel is Z_x inside V + V* (columns: v then l).

    Rows 0..3 are the V-part of alpha v + l(eta); rows 4..7 the L^3 V part
    of eta ^ v + l(beta tau), on the basis e234, e134, e124, e123 (masks
    with one generator missing).
    """
    eta = ExtElement.from_wedge2(x.eta)
    tau = ExtElement({15: x.beta})
    cols = []
    for k in range(8):
        if k < 4:
            v = ExtElement.gen(k)
            low = v.scale(x.alpha)
            high = eta.wedge(v)
        else:
            ell = [1 if i == k - 4 else 0 for i in range(4)]
            low = contract(ell, eta)
            high = contract(ell, tau)
        col = [low.coeffs.get(1 << i, 0) for i in range(4)]
        col += [high.coeffs.get(15 ^ (1 << i), 0) for i in range(4)]
        cols.append(col)
    return [[cols[k][r] for k in range(8)] for r in range(8)]


def z_subspace(x):
    """Basis rows of Z_x for an isotropic nonzero even spinor x."""
    if all(c == 0 for c in x.as_list()):
        raise ValueError("zero spinor")
    if q_plus(x) != 0:
        raise ValueError("spinor is not isotropic")
    rows = nullspace(z_equations(x), 8)
    if len(rows) != 4:
        raise ArithmeticError(f"Z has dimension {len(rows)}")
    return rows


def hyperbolic(a, b):
    """q((v,l),(w,m)) = l(w) + m(v); its square is 2 l(v)."""
    return dot(a[4:], b[:4]) + dot(b[4:], a[:4])


def is_q_isotropic(rows):
    return all(hyperbolic(a, b) == 0 for a in rows for b in rows)


def graph_map(rows):
    """f with rows spanning the graph of f, or None if the V-projection is singular."""
    left = [r[:4] for r in rows]
    if det(left) == 0:
        return None
    return matmul(inverse(left), [r[4:] for r in rows])


def z_graph_checks(x):
    """For eta ^ eta != 0: (f skew, vol(beta) iota(omega_f) == -eta, Pf(f))."""
    f = graph_map(z_subspace(x))
    if f is None:
        return False, False, None
    skew = is_skew(f)
    lhs = [x.beta * c for c in iota2(skew_to_omega(f))]
    eta_matches = lhs == [-c for c in x.eta]
    return skew, eta_matches, pfaffian(f) if skew else None


def t_plus_membership(n, x):
    """(n + 1) alpha = vol(beta)."""
    return (n + 1) * x.alpha == x.beta


def embed_i(n, y, eps):
    """eta + x xi^vee -> s x / (2(n+1)) + eta + (s x / 2) tau with s = (-1)^eps."""
    if eps not in (0, 1):
        raise ValueError("eps must be 0 or 1")
    s = -1 if eps else 1
    x = y[6]
    return Spinor(s * x * Fraction(1, 2 * (n + 1)), y[:6], s * x * Fraction(1, 2))


def _unit7(k):
    return [1 if i == k else 0 for i in range(7)]


def pullback_gram(n, eps):
    """Gram matrix of q+ pulled back along embed_i, on the 7 coordinate vectors."""
    imgs = [embed_i(n, _unit7(k), eps) for k in range(7)]
    return [[q_plus_bilinear(a, b) for b in imgs] for a in imgs]


def dual_bbf_gram(n):
    """vol on L^2 and -1/(2(n+1)) on xi^vee."""
    gram = [[vol2(_unit7(a)[:6], _unit7(b)[:6]) for b in range(7)] for a in range(7)]
    gram[6][6] = -Fraction(1, 2 * (n + 1))
    return gram


def embedding_matches_hodge(theta, n, sigma, eps):
    """Whether Z(embed_i(sigma)) equals the Hodge subspace built from sigma."""
    hs = hodge_from_period(theta, sigma)
    z = z_subspace(embed_i(n, sigma, eps))
    return same_row_space(hs, z)


def matching_epsilon(theta, n, sigma):
    """The eps values in {0, 1} for which Z(embed_i(sigma)) is the Hodge subspace."""
    return [eps for eps in (0, 1) if embedding_matches_hodge(theta, n, sigma, eps)]


def z_rank(x):
    return 8 - rank(z_equations(x))
