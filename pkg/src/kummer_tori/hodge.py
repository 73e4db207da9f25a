"""Weight-one Hodge structures on V + V* attached to a triple theta.

Vectors of V + V* are 8-lists (coordinates on v1..v4 then v1*..v4*).  The
target L^2 V + C zeta is a 7-list: coordinates on e12, e13, e14, e23, e24,
e34 and then zeta.  Functionals on the target (for instance a polarization
class h) use the dual coordinates.
"""
import random as _random
from fractions import Fraction
from math import gcd

from .exact.exterior import WEDGE2_MASKS, TOP
from .exact.bits import merge_sign
from .exact.linalg import det, inverse, matmul, nullspace, rank
from .exact.scalars import Quad, as_rational, conj
from .exact.skew import is_skew, pfaffian

PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
# iota on coordinates: e_ij^* -> sign * e_kl
_IOTA = []
for _k, _m in enumerate(WEDGE2_MASKS):
    _c = TOP ^ _m
    _IOTA.append((WEDGE2_MASKS.index(_c), merge_sign(_c, _m)))


class Theta:
    """The constants (theta1, theta2, theta3) and the form parameter m.

    The form on L^2 V + C zeta is (a + x zeta, b + y zeta) = vol(a ^ b) - m x y.
    If m is not given it is fixed by theta1 theta2 = 2 m theta3^2.
    """

    def __init__(self, t1, t2, t3, m=None):
        self.t1, self.t2, self.t3 = Fraction(t1), Fraction(t2), Fraction(t3)
        if 0 in (self.t1, self.t2, self.t3):
            raise ValueError("theta components must be nonzero")
        rel = self.t1 * self.t2 / (2 * self.t3 ** 2)
        if m is None:
            m = rel
        if Fraction(m) != rel:
            raise ValueError("theta1 theta2 = 2 m theta3^2 fails")
        self.m = Fraction(m)

    @classmethod
    def kummer(cls, n, t1, t2, t3):
        return cls(t1, t2, t3, Fraction(1, 2 * (n + 1)))

    def as_tuple(self):
        return (self.t1, self.t2, self.t3)

    def __repr__(self):
        return f"Theta{self.as_tuple()}, m={self.m}"


def wedge_vv(v, w):
    return [v[i] * w[j] - v[j] * w[i] for i, j in PAIRS]


def iota2(x):
    """iota on 6 coordinates of L^2 V*."""
    out = [0] * 6
    for k, (t, s) in enumerate(_IOTA):
        out[t] = out[t] + s * x[k]
    return out


def iota2_inv(y):
    out = [0] * 6
    for k, (t, s) in enumerate(_IOTA):
        out[k] = out[k] + s * y[t]
    return out


def dot(a, b):
    return sum((x * y for x, y in zip(a, b)), 0)


def phi_theta(theta, a, b):
    """Phi((v,g),(w,h)) = (t1 v^w + t2 iota(g^h), t3 (g(w) - h(v)))."""
    v, g = a[:4], a[4:]
    w, h = b[:4], b[4:]
    vw = wedge_vv(v, w)
    gh = iota2(wedge_vv(g, h))
    return [theta.t1 * x + theta.t2 * y for x, y in zip(vw, gh)] + \
        [theta.t3 * (dot(g, w) - dot(h, v))]


def vol2(x, y):
    """vol(x ^ y) for 2-vectors given by 6 coordinates."""
    return (x[0] * y[5] - x[1] * y[4] + x[2] * y[3]
            + x[3] * y[2] - x[4] * y[1] + x[5] * y[0])


def form(theta, x, y):
    return vol2(x[:6], y[:6]) - theta.m * x[6] * y[6]


def dual_form(theta, h, k):
    """The dual form on functionals: vol^dual on L^2 V* and -1/m on zeta*."""
    return vol2(h[:6], k[:6]) - h[6] * k[6] / theta.m


def pair_functional(h, y):
    return dot(h, y)


def wedge2_gram(theta, rows):
    """Phi on all pairs i < j of the given rows (a spanning set of a subspace)."""
    return [phi_theta(theta, rows[i], rows[j])
            for i in range(len(rows)) for j in range(i + 1, len(rows))]


def phi_rank(theta, rows):
    return rank(wedge2_gram(theta, rows))


def skew_to_omega(f):
    """omega_f(v, w) = (f(w)(v) - f(v)(w))/2 as 6 coordinates (a12, ..., a34).

    f is the 4x4 matrix with f[i][j] = f(v_i)(v_j).
    """
    return [(f[j][i] - f[i][j]) * Fraction(1, 2) for i, j in PAIRS]


def omega_to_skew(om):
    """The skew f with omega_f = om: f = -(matrix of om)."""
    f = [[0] * 4 for _ in range(4)]
    for (i, j), a in zip(PAIRS, om):
        f[i][j] = -a
        f[j][i] = a
    return f


def graph_rows(f):
    return [[1 if k == i else 0 for k in range(4)] + list(f[i]) for i in range(4)]


def _intersect_v(rows, side):
    """Basis of Gamma meet V (side 0) or Gamma meet V* (side 1)."""
    # x^T rows has zero block on the other side
    other = slice(4, 8) if side == 0 else slice(0, 4)
    mat = [[rows[r][c] for r in range(len(rows))] for c in range(8)[other]]
    coeffs = nullspace(mat, len(rows))
    out = []
    for c in coeffs:
        vec = [sum((c[r] * rows[r][k] for r in range(len(rows))), 0) for k in range(8)]
        out.append(vec[0:4] if side == 0 else vec[4:8])
    return out


def classify_subspace(theta, rows):
    """('graph', f), ('split', U) or ('none', None) for a 4-dimensional subspace.

    graph: Gamma is the graph of a skew f with theta1 = theta2 Pf(f);
    split: Gamma = U + U^perp with U of dimension 2.  Exactly these two give a
    one-dimensional Phi(L^2 Gamma).
    """
    if rank(rows) != 4:
        raise ValueError("need a 4-dimensional subspace")
    left = [r[:4] for r in rows]
    if det(left) != 0:
        f = matmul(inverse(left), [r[4:] for r in rows])
        if is_skew(f) and theta.t2 * pfaffian(f) == theta.t1:
            return "graph", f
        return "none", None
    u = _intersect_v(rows, 0)
    w = _intersect_v(rows, 1)
    if len(u) == 2 and len(w) == 2 and all(dot(a, b) == 0 for a in u for b in w):
        return "split", u
    return "none", None


def brute_force_one_dim(theta, rows):
    return phi_rank(theta, rows) == 1


def graph_line(theta, f):
    """theta2 iota(omega_f) - 2 theta3 zeta."""
    return [theta.t2 * x for x in iota2(skew_to_omega(f))] + [-2 * theta.t3]


def conj_vec(v):
    return [conj(x) for x in v]


def _real(x):
    return as_rational(x)


def period_checks(theta, sigma):
    """(sigma, sigma) = 0 and (sigma, conj sigma) > 0."""
    iso = form(theta, sigma, sigma) == 0
    pos = _real(form(theta, sigma, conj_vec(sigma))) > 0
    return iso, pos


def decomposable_plane(y):
    """U with L^2 U = [y] for a nonzero decomposable 2-vector y (6 coords)."""
    # v ^ y = 0 gives four linear equations on v
    eqs = []
    triples = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))
    idx = {p: k for k, p in enumerate(PAIRS)}
    for t in triples:
        row = [0] * 4
        for pos, i in enumerate(t):
            rest = tuple(x for x in t if x != i)
            row[i] = (-1) ** pos * y[idx[rest]]
        eqs.append(row)
    u = nullspace(eqs, 4)
    if len(u) != 2:
        raise ValueError("2-vector is not decomposable")
    return u


def hodge_from_period(theta, sigma):
    """Basis rows of H^{1,0} for a period point sigma of the domain."""
    iso, pos = period_checks(theta, sigma)
    if not (iso and pos):
        raise ValueError("sigma is not in the period domain")
    if sigma[6] != 0:
        lam = -2 * theta.t3 / sigma[6]
        alpha = [lam * x / theta.t2 for x in sigma[:6]]
        f = omega_to_skew(iota2_inv(alpha))
        return graph_rows(f)
    u = decomposable_plane(sigma[:6])
    uperp = nullspace(u, 4)
    return [list(x) + [0] * 4 for x in u] + [[0] * 4 + list(x) for x in uperp]


def transversal(rows):
    """H^{1,0} meets its conjugate only in zero."""
    return rank(rows + [conj_vec(r) for r in rows]) == 8


def isotropic(rows):
    """Isotropic for the symmetric pairing ((v,l),(w,m)) = l(w) + m(v)."""
    return all(dot(a[4:], b[:4]) + dot(b[4:], a[:4]) == 0 for a in rows for b in rows)


def polarization_pairing(theta, h, a, b):
    return pair_functional(h, phi_theta(theta, a, b))


def hermitian_matrix(theta, h, rows):
    """M[j][k] = i <h, Phi(a_j ^ conj a_k)>."""
    i = Quad(0, 1, -1)
    return [[i * polarization_pairing(theta, h, a, conj_vec(b)) for b in rows] for a in rows]


def definite_sign(mat):
    """+1 / -1 if the Hermitian matrix is positive / negative definite, else 0."""
    n = len(mat)
    minors = [det([r[:k] for r in mat[:k]]) for k in range(1, n + 1)]
    minors = [_real(x) for x in minors]
    if all(x > 0 for x in minors):
        return 1
    if all((x < 0) if k % 2 == 0 else (x > 0) for k, x in enumerate(minors)):
        return -1
    return 0


def positivity_sign(theta, h, rows):
    mat = hermitian_matrix(theta, h, rows)
    if any(mat[j][k] != conj(mat[k][j]) for j in range(4) for k in range(4)):
        raise ArithmeticError("matrix is not Hermitian")
    return definite_sign(mat)


def h_normal_form(c, e, s):
    """c (e v1*^v2* + v3*^v4*) + s zeta*, as 7 dual coordinates."""
    return [c * e, 0, 0, 0, 0, c, s]


# -- random period points over Q(i) -----------------------------------------

def _rq(rng, lo=-4, hi=4):
    den = rng.randint(1, 3)
    return Quad(Fraction(rng.randint(lo, hi), den), Fraction(rng.randint(lo, hi), den), -1)


def _unit(k, n=6):
    return [1 if i == k else 0 for i in range(n)]


def _pf6(w):
    return w[0] * w[5] - w[1] * w[4] + w[2] * w[3]


_PF_PARTNER = {0: 5, 5: 0, 1: 4, 4: 1, 2: 3, 3: 2}


def random_graph_point(theta, rng, h=None, tries=200):
    """A period point off zeta^perp (with <h, sigma> = 0 when h is given), or None.

    Works in the coordinates of omega_f: Pf(omega) = theta1/theta2 and the
    h-condition are solved for two entries taken from different pfaffian pairs.
    """
    target = theta.t1 / theta.t2
    ell = None
    if h is not None:
        ell = [theta.t2 * dot(h[:6], iota2(_unit(k))) for k in range(6)]
        rhs = 2 * theta.t3 * h[6]
    for _ in range(tries):
        w = [_rq(rng) for _ in range(6)]
        if ell is None:
            kb = rng.randrange(6)
            partner = w[_PF_PARTNER[kb]]
            if partner == 0:
                continue
            w[kb] = 0
            w[kb] = (target - _pf6(w)) / (partner * (-1 if kb in (1, 4) else 1))
        else:
            cand = [k for k in range(6) if ell[k] != 0]
            if not cand:
                return None
            ka = rng.choice(cand)
            others = [k for k in range(6) if k not in (ka, _PF_PARTNER[ka])]
            kb = rng.choice(others)
            w[ka] = w[kb] = 0
            p0 = _pf6(w)
            ca = _pf6([1 if k == ka else x for k, x in enumerate(w)]) - p0
            cb = _pf6([1 if k == kb else x for k, x in enumerate(w)]) - p0
            l0 = dot(ell, w)
            a11, a12, a21, a22 = ell[ka], ell[kb], ca, cb
            d = a11 * a22 - a12 * a21
            if d == 0:
                continue
            b1, b2 = rhs - l0, target - p0
            w[ka] = (b1 * a22 - a12 * b2) / d
            w[kb] = (a11 * b2 - a21 * b1) / d
        f = omega_to_skew(w)
        sigma = graph_line(theta, f)
        iso, pos = period_checks(theta, sigma)
        if iso and pos and (h is None or dot(h, sigma) == 0):
            return sigma
    return None


def random_split_point(theta, rng, h=None, tries=200):
    """A decomposable sigma = u1 ^ u2 in zeta^perp (with <h, sigma> = 0 if h is given)."""
    for _ in range(tries):
        u1 = [_rq(rng) for _ in range(4)]
        if h is None:
            space = [_unit(k, 4) for k in range(4)]
        else:
            row = [dot(h[:6], wedge_vv(u1, _unit(j, 4))) for j in range(4)]
            space = nullspace([row], 4)
        coeffs = [_rq(rng) for _ in space]
        u2 = [sum((c * v[k] for c, v in zip(coeffs, space)), 0) for k in range(4)]
        sigma = wedge_vv(u1, u2) + [0]
        if all(x == 0 for x in sigma):
            continue
        iso, pos = period_checks(theta, sigma)
        if iso and pos and (h is None or dot(h, sigma) == 0):
            return sigma
    return None


def rng_from_seed(seed):
    return _random.Random(seed)


# -- subspaces for the classification suite -----------------------------------

def random_plane(rng, lo=-3, hi=3):
    """A random rational 4-dimensional subspace (basis rows)."""
    while True:
        rows = [[Fraction(rng.randint(lo, hi)) for _ in range(8)] for _ in range(4)]
        if rank(rows) == 4:
            return rows


def _random_skew(rng, lo=-4, hi=4):
    return omega_to_skew([Fraction(rng.randint(lo, hi), rng.randint(1, 3)) for _ in range(6)])


def _mix(rng, rows):
    """Random invertible recombination of the rows (same subspace)."""
    while True:
        m = [[Fraction(rng.randint(-2, 2)) for _ in range(4)] for _ in range(4)]
        if det(m) != 0:
            return matmul(m, rows)


def crafted_planes(theta, rng):
    """Named 4-planes covering every branch of classify_subspace."""
    out = {}
    r = theta.t1 / theta.t2
    out["graph-normal"] = graph_rows(omega_to_skew([1, 0, 0, 0, 0, r]))
    while True:
        w = [Fraction(rng.randint(-4, 4)) for _ in range(6)]
        if w[5] != 0:
            w[0] = (r + w[1] * w[4] - w[2] * w[3]) / w[5]
            break
    out["graph-random"] = _mix(rng, graph_rows(omega_to_skew(w)))
    out["graph-wrong-pf"] = graph_rows(omega_to_skew([1, 0, 0, 0, 0, r + 1]))
    out["graph-rank2-skew"] = graph_rows(omega_to_skew([1, 0, 0, 0, 0, 0]))
    out["graph-zero"] = graph_rows([[0] * 4 for _ in range(4)])
    sym = [[Fraction(rng.randint(-3, 3)) for _ in range(4)] for _ in range(4)]
    for i in range(4):
        for j in range(i):
            sym[i][j] = sym[j][i]
    sym[0][0] = sym[0][0] or Fraction(1)
    out["graph-symmetric"] = graph_rows(sym)
    skew = omega_to_skew([1, 0, 0, 0, 0, r])
    mixed = [[sym[i][j] + skew[i][j] for j in range(4)] for i in range(4)]
    out["graph-skew-plus-symmetric"] = graph_rows(mixed)
    out["split-12"] = [[1, 0, 0, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0, 0, 0],
                       [0, 0, 0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 0, 0, 1]]
    while True:
        u = [[Fraction(rng.randint(-3, 3)) for _ in range(4)] for _ in range(2)]
        if rank(u) == 2:
            break
    perp = nullspace(u, 4)
    out["split-random"] = _mix(rng, [list(x) + [0] * 4 for x in u] + [[0] * 4 + list(x) for x in perp])
    # U = <v1, v2> with the annihilator of <v1, v3> instead of U^perp
    out["split-wrong-annihilator"] = [[1, 0, 0, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0, 0, 0],
                                      [0, 0, 0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 0, 0, 1]]
    out["v-only"] = [[1 if i == k else 0 for i in range(8)] for k in range(4)]
    out["dual-only"] = [[1 if i == k + 4 else 0 for i in range(8)] for k in range(4)]
    return out


# -- checks on a constructed Hodge subspace ---------------------------------------

def image_is_line(theta, rows, sigma):
    """Phi(L^2 rows) is exactly the line spanned by sigma."""
    vals = wedge2_gram(theta, rows)
    return rank(vals) == 1 and rank(vals + [list(sigma)]) == 1


def pairing_isotropic(theta, h, rows):
    return all(polarization_pairing(theta, h, a, b) == 0 for a in rows for b in rows)


def reclassifies(theta, rows, sigma):
    """classify_subspace recovers the same branch and the same subspace."""
    kind, data = classify_subspace(theta, rows)
    if kind == "graph":
        return sigma[6] != 0 and _same_line(graph_line(theta, data), sigma)
    if kind == "split":
        return sigma[6] == 0 and _same_line(wedge_vv(*data) + [0], sigma)
    return False


def _same_line(x, y):
    return rank([list(x), list(y)]) == 1


def hodge_point_report(theta, h, sigma):
    """Every check on one period point of the domain D_h."""
    rows = hodge_from_period(theta, sigma)
    sign = positivity_sign(theta, h, rows)
    csig = conj_vec(sigma)
    crows = hodge_from_period(theta, csig)
    return {
        "in_domain": all(period_checks(theta, sigma)) and dot(h, sigma) == 0,
        "image_is_line": image_is_line(theta, rows, sigma),
        "transversal": transversal(rows),
        "isotropic": isotropic(rows),
        "pairing_isotropic": pairing_isotropic(theta, h, rows),
        "reclassifies": reclassifies(theta, rows, sigma),
        "sign": sign,
        "conjugate_sign": positivity_sign(theta, h, crows),
    }


def positive_h(rng, m):
    """A random integral functional c (e v1*^v2* + v3*^v4*) + s zeta* of positive dual square."""
    while True:
        c = rng.randint(1, 4)
        e = rng.randint(1, 5)
        s = rng.randint(-3, 3)
        if s and gcd(c, s) != 1:
            continue
        if 2 * c * c * e - Fraction(s * s) / m > 0:
            return h_normal_form(c, e, s)
