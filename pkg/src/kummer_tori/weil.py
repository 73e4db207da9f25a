"""The endomorphism Psi of V + V* and the Weil-type structure it induces.

Linear maps V -> V* are handled through their matrices F[i][j] = f(v_i)(v_j);
on coordinate columns f acts by F^T.
"""
import random as _random
from fractions import Fraction

from .exact.linalg import (det, identity, inverse, is_zero_matrix, madd, matmul, matvec,
                           mscale, rank, solve, trace, transpose)
from .exact.scalars import Quad, conj
from .exact.skew import skew_cayley_check
from .hodge import (Theta, dot, dual_form, h_normal_form, hodge_from_period, omega_to_skew,
                    polarization_pairing, random_graph_point, random_split_point)


class WeilContext:
    """theta, h = c (e v1*^v2* + v3*^v4*) + s zeta*, and the derived g, N, b."""

    def __init__(self, theta, c, e, s):
        if c <= 0 or e <= 0:
            raise ValueError("c and e must be positive")
        self.theta = theta
        self.c, self.e, self.s = c, e, s
        self.h = h_normal_form(c, e, s)
        # omega_g = h0
        self.g = omega_to_skew(self.h[:6])
        self.gmap = transpose(self.g)
        self.ginv = inverse(self.gmap)
        t1, t2, t3 = theta.as_tuple()
        k = Fraction(1, c * c * e)
        self.N = k * t1 / t2
        self.b = k * s * t3 / t2
        self.D = self.N - self.b ** 2
        if self.D <= 0:
            raise ValueError("N - b^2 must be positive (h of positive square)")

    def d_closed(self):
        """c^-4 e^-2 (theta3/theta2)^2 m (h, h)^dual."""
        th = self.theta
        return (Fraction(1, self.c ** 4 * self.e ** 2) * (th.t3 / th.t2) ** 2
                * th.m * dual_form(th, self.h, self.h))

    def field(self):
        """Q(sqrt(-D)) as a constructor of its elements."""
        return lambda a, b=0: Quad(a, b, -self.D)

    def lambdas(self):
        k = self.field()
        return k(self.b, 1), k(self.b, -1)

    def __repr__(self):
        return f"WeilContext({self.theta.as_tuple()}, c={self.c}, e={self.e}, s={self.s})"


def psi_map(ctx, x):
    """(v, l) -> (g^-1(l) - b v, b l - N g(v))."""
    v, ell = x[:4], x[4:]
    gi = matvec(ctx.ginv, ell)
    gv = matvec(ctx.gmap, v)
    return ([p - ctx.b * q for p, q in zip(gi, v)]
            + [ctx.b * p - ctx.N * q for p, q in zip(ell, gv)])


def psi_matrix(ctx):
    """Matrix of Psi on columns (rows are images of the unit vectors, transposed)."""
    cols = [psi_map(ctx, [1 if i == k else 0 for i in range(8)]) for k in range(8)]
    return transpose(cols)


def psi_squared_ok(ctx):
    m = psi_matrix(ctx)
    return is_zero_matrix(madd(matmul(m, m), mscale(ctx.D, identity(8))))


def psi_rational(ctx):
    return all(isinstance(x, (int, Fraction)) for r in psi_matrix(ctx) for x in r)


def restricted_matrix(ctx, rows):
    """Matrix A with Psi(rows[j]) = sum_k A[j][k] rows[k], or None if not invariant."""
    images = [psi_map(ctx, r) for r in rows]
    bt = transpose(rows)
    out = []
    for im in images:
        coeffs = solve(bt, im)
        if coeffs is None:
            return None
        out.append(coeffs)
    return out


def preserves(ctx, rows):
    return rank(rows + [psi_map(ctx, r) for r in rows]) == rank(rows)


def graph_invariance_residual(ctx, f):
    """g^-1 f g^-1 f - 2b g^-1 f + N as a matrix (zero when Psi preserves the graph of f)."""
    x = matmul(ctx.ginv, transpose(f))
    r = madd(matmul(x, x), mscale(-2 * ctx.b, x))
    return madd(r, mscale(ctx.N, identity(4)))


def trace_identity(ctx, f):
    """(Tr(X^-1 Y), 4 b) for X, Y the matrices of g and f."""
    x = ctx.gmap
    y = transpose(f)
    return trace(matmul(inverse(x), y)), 4 * ctx.b


def eigen_split(ctx, rows):
    """(dim of +i sqrt(D) part, dim of -i sqrt(D) part) of Psi on a Psi-invariant subspace.

    Psi^2 = -D is scalar, so Psi is diagonalizable there and the two
    dimensions are fixed by the trace: Tr = (k+ - k-) i sqrt(D).
    """
    a = restricted_matrix(ctx, rows)
    if a is None:
        return None
    tr = trace(a)
    k = len(rows)
    if tr == 0:
        return k // 2, k - k // 2
    # an unbalanced split would need i sqrt(D) and Q(i) in one field
    return None


def polarization_scales(ctx, basis=None):
    """<Psi a, Psi b> = (N - b^2) <a, b> on a lattice basis."""
    th, h = ctx.theta, ctx.h
    basis = basis or [[1 if i == k else 0 for i in range(8)] for k in range(8)]
    return all(polarization_pairing(th, h, psi_map(ctx, a), psi_map(ctx, b))
               == ctx.D * polarization_pairing(th, h, a, b)
               for a in basis for b in basis)


def eigenspaces(ctx):
    """Rows (v_i, lambda g(v_i)) spanning E_+ and E_- over Q(sqrt(-D))."""
    lam1, lam2 = ctx.lambdas()
    out = []
    for lam in (lam1, lam2):
        rows = []
        for i in range(4):
            v = [1 if k == i else 0 for k in range(4)]
            gv = matvec(ctx.gmap, v)
            rows.append(v + [lam * x for x in gv])
        out.append(rows)
    return out


def eigenspace_checks(ctx):
    """(eigen, isotropic, cross) for the two graphs E_+ and E_-."""
    th, h = ctx.theta, ctx.h
    k = ctx.field()
    lam1, lam2 = ctx.lambdas()
    ep, em = eigenspaces(ctx)
    mu = k(0, 1)  # i sqrt(N - b^2) = sqrt(-D)
    eigen = (all(psi_map(ctx, r) == [mu * x for x in r] for r in ep)
             and all(psi_map(ctx, r) == [-mu * x for x in r] for r in em))
    iso = all(polarization_pairing(th, h, a, b) == 0 for sp in (ep, em) for a in sp for b in sp)
    factor = th.t1 * Fraction(1, ctx.c ** 2 * ctx.e) * dual_form(th, h, h)
    omega = [[-ctx.g[i][j] for j in range(4)] for i in range(4)]
    cross = all(polarization_pairing(th, h, ep[i], em[j]) == factor * omega[i][j]
                for i in range(4) for j in range(4))
    roots = lam1 * lam2 == ctx.N and lam1 + lam2 == 2 * ctx.b
    return eigen, iso, cross and roots


def verify_weil(ctx, sigma):
    """Checks for one period point: preserved, split 2+2, polarization scaled by N - b^2."""
    th = ctx.theta
    if dot(ctx.h, sigma) != 0:
        raise ValueError("sigma is not orthogonal to h")
    rows = hodge_from_period(th, sigma)
    report = {
        "psi_rational": psi_rational(ctx),
        "psi_squared": psi_squared_ok(ctx),
        "preserved": preserves(ctx, rows),
        "split_2_2": eigen_split(ctx, rows) == (2, 2),
        "polarization_scaled": polarization_scales(ctx),
        "d_closed": ctx.D == ctx.d_closed(),
    }
    if sigma[6] != 0:
        left = [r[:4] for r in rows]
        f = matmul(inverse(left), [r[4:] for r in rows])
        report["graph_residual"] = is_zero_matrix(graph_invariance_residual(ctx, f))
        tr, four_b = trace_identity(ctx, f)
        report["trace"] = tr == four_b
    return report


def hermitian_gram(ctx):
    """H(a, b) = E(a, Psi b) + sqrt(-D) E(a, b) on (v_1, 0) .. (v_4, 0)."""
    th, h = ctx.theta, ctx.h
    k = ctx.field()
    basis = [[1 if i == j else 0 for i in range(8)] for j in range(4)]
    return [[k(polarization_pairing(th, h, a, psi_map(ctx, b)),
               polarization_pairing(th, h, a, b)) for b in basis] for a in basis]


def expected_hermitian_gram(ctx):
    k = ctx.field()
    t1, c, e = ctx.theta.t1, ctx.c, ctx.e
    z = k(0)
    a, b = k(0, t1 * c * e), k(0, t1 * c)
    return [[z, a, z, z], [-a, z, z, z], [z, z, z, b], [z, z, -b, z]]


def is_hermitian(mat):
    n = len(mat)
    return all(mat[j][i] == conj(mat[i][j]) for i in range(n) for j in range(n))


def hermitian_det(ctx):
    """(det, witness) with witness * conj(witness) == det."""
    d = det(hermitian_gram(ctx))
    w = ctx.theta.t1 ** 2 * ctx.c ** 2 * ctx.e * ctx.D
    return d, w


def det_closed(ctx):
    return ctx.theta.t1 ** 4 * ctx.c ** 4 * ctx.e ** 2 * ctx.D ** 2


# -- the order-three example with c = e = 1, s = 0 -----------------------------------

def order_three_example(theta=Theta(-1, -3, 3)):
    ctx = WeilContext(theta, 1, 1, 0)
    psi = psi_matrix(ctx)
    psi0 = mscale(3, psi)
    eye = identity(8)
    omega = mscale(Fraction(-1, 2), madd(eye, psi0))
    omega3 = matmul(matmul(omega, omega), omega)
    # enlarged lattice: (v/2, g(v)/2) and (0, v_j*)
    gens = []
    for i in range(4):
        v = [Fraction(1 if k == i else 0) for k in range(4)]
        gv = matvec(ctx.gmap, v)
        gens.append([x / 2 for x in v] + [x / 2 for x in gv])
    for j in range(4):
        gens.append([0] * 4 + [1 if k == j else 0 for k in range(4)])
    index = abs(1 / det(gens))
    gt = transpose(gens)

    def in_lattice(x):
        coords = solve(gt, x)
        return all(Fraction(c).denominator == 1 for c in coords)

    std = [[1 if i == k else 0 for i in range(8)] for k in range(8)]
    return {
        "N": ctx.N,
        "b": ctx.b,
        "psi0_squared_is_minus_3": matmul(psi0, psi0) == mscale(-3, eye),
        "omega_cubed_is_identity": omega3 == eye,
        "omega_not_identity": omega != eye,
        "omega_preserves_standard": all(Fraction(c).denominator == 1
                                        for x in std for c in matvec(omega, x)),
        "omega_preserves_enlarged": all(in_lattice(matvec(omega, x)) for x in gens),
        "standard_in_enlarged": all(in_lattice(x) for x in std),
        "enlarged_index": index,
    }


example_5_4 = order_three_example


def random_skew_int(rng, lo=-9, hi=9):
    e = [rng.randint(lo, hi) for _ in range(6)]
    m = [[0] * 4 for _ in range(4)]
    k = 0
    for i in range(4):
        for j in range(i + 1, 4):
            m[i][j], m[j][i] = e[k], -e[k]
            k += 1
    return m


def cayley_suite(count=1000, seed=0):
    """Number of random integer skew pairs for which the quadratic identity holds."""
    rng = _random.Random(seed)
    return sum(skew_cayley_check(random_skew_int(rng), random_skew_int(rng))
               for _ in range(count))


def random_context(rng, theta, div=None):
    """A context with h of positive square, drawn from the divisibility templates."""
    from .divisors import TEMPLATES
    while True:
        d = div or rng.choice(sorted(TEMPLATES))
        c, s = TEMPLATES[d]
        e = rng.randint(1, 6)
        if rng.random() < 0.5:
            s = -s
        try:
            return WeilContext(theta, c, e, s)
        except ValueError:
            continue


def random_weil_point(ctx, rng, split=False):
    if split:
        return random_split_point(ctx.theta, rng, ctx.h)
    return random_graph_point(ctx.theta, rng, ctx.h)
