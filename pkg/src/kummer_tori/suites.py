"""Verification suites: each builds a SuiteReport of exact expected/actual pairs."""
import random as _random
import time
from fnmatch import fnmatchcase
from fractions import Fraction

from . import divisors, kummer, selftest, spinor, weil
from .hodge import (Theta, brute_force_one_dim, classify_subspace, crafted_planes,
                    hodge_point_report, positive_h, random_graph_point, random_plane,
                    random_split_point)
from .exact.exterior import ExtElement
from .report import SuiteReport
from .surface import eta

DEFAULT_SEED = 20240611

DEFAULTS = {
    "n": None,          # suite-specific default list
    "e_range": range(1, 11),
    "seed": DEFAULT_SEED,
    "count": None,      # suite-specific default sample size
    "cases": None,      # glob on case ids
    "kmax": 6,          # double factorial suite only
    "nmax": None,       # double factorial suite only
}

ALIASES = {"e": "e_range"}


def _theta_k2():
    return Theta.kummer(2, *divisors.THETA_K2)


def _ns(options, default):
    return list(options["n"]) if options.get("n") else list(default)


def _count(options, default):
    return options["count"] if options.get("count") is not None else default


def _pad(k, width=4):
    return str(k).zfill(width)


# -- double factorial identity ---------------------------------------------------------------------

def suite_double_factorial(rep, options):
    kmax = options["kmax"]
    nmax = options["nmax"] or max(_ns(options, [8]))
    for k in range(kmax + 1):
        for n in range(nmax + 1):
            for ell in range(min(kmax, n) + 1):
                rep.add(f"k{_pad(k, 2)}-l{_pad(ell, 2)}-n{_pad(n, 2)}",
                        "double factorial binomial sum",
                        kummer.double_factorial_ratio(k, ell, n), kummer.double_factorial_sum(k, ell, n))


# -- fujiki ---------------------------------------------------------------------

def _random_h2(rng):
    a = sum((ExtElement({m: rng.randint(-2, 2)}, "H") for m in (3, 5, 9, 6, 10, 12)),
            ExtElement({}, "H"))
    return kummer.H2Class(a, rng.randint(-2, 2))


def _ring_power(ring, cls, k):
    words = kummer.words_pow(kummer.lift_h2(cls), k)
    return ring.combo(words)


def suite_fujiki(rep, options):
    rng = _random.Random(options["seed"])
    count = _count(options, 5)
    for n in _ns(options, [2, 3]):
        ring = kummer.KummerRing(n)
        for t in range(count):
            cls = _random_h2(rng)
            q = kummer.bbf(n, cls, cls)
            closed = kummer.fujiki_closed(n, q)
            rep.add(f"n{n}-power-{_pad(t)}-matching", "Fujiki relation, matching sum",
                    closed, kummer.fujiki_value(n, [cls] * (2 * n)))
            rep.add(f"n{n}-power-{_pad(t)}-ring", "Fujiki relation, Lehn-Sorger ring",
                    closed, _ring_power(ring, cls, 2 * n))
        # polarized form on basis words, ring against matching sum
        basis = kummer.h2_basis()
        for t in range(count):
            word = [rng.choice(basis) for _ in range(2 * n)]
            words = [(1, [])]
            for cls in word:
                words = kummer.words_mul(words, kummer.lift_h2(cls))
            rep.add(f"n{n}-polarized-{_pad(t)}", "polarized Fujiki relation",
                    kummer.fujiki_value(n, word), ring.combo(words))


# -- powers of q-vee ------------------------------------------------------------------

def suite_qvee_powers(rep, options):
    for n in _ns(options, [2, 3]):
        ring = kummer.KummerRing(n)
        for ell in range(n + 1):
            got, want = kummer.qvee_power_check(n, ell, ring)
            rep.add(f"n{n}-qvee{ell}", "powers of q-vee against xi", want, got)
            rep.add(f"n{n}-qvee{ell}-fujiki", "powers of q-vee, Fujiki route", want,
                    kummer.fujiki_integral(n, kummer.words_times(
                        kummer.words_pow(kummer.qvee_words(n), ell),
                        extra_back=[kummer.H2Class.xi()] * (2 * n - 2 * ell))))
        for i in range(n + 1):
            rep.add(f"n{n}-sigma{i}", "sigma_n powers against xi",
                    kummer.sigma_xi_closed(n, i), kummer.sigma_xi_value(n, i, ring))


# -- theta ----------------------------------------------------------------------

def suite_theta(rep, options):
    ns = _ns(options, [2, 3])
    for n in ns:
        ring = kummer.KummerRing(n)
        t1, t2, t3 = kummer.compute_theta(n, ring)
        c1, c2, c3 = kummer.theta_closed(n)
        rep.add(f"n{n}-computed-theta1", "theta1 closed form", c1, t1)
        rep.add(f"n{n}-computed-theta2", "theta2 = (n+1) theta1", c2, t2)
        rep.add(f"n{n}-computed-abs-theta3", "|theta3| = (n+1)|theta1|", c3, abs(t3))
        # odd-class integrals, ring route against closed forms
        g = eta(1, 2) + eta(3, 4)
        for kind, u, u2 in (("a", eta(1, 2, 3), eta(1, 2, 4)), ("b", eta(1), eta(2))):
            for xp in (0, 2) if n >= 3 else (0,):
                rep.add(f"n{n}-odd-{kind}-xi{xp}", "odd-class integral",
                        kummer.odd_integral_closed(n, kind, u, u2, g, xp),
                        kummer.odd_integral_ring(n, kind, u, u2, g, xp, ring))
    if 2 in ns:
        # mu3(a) nu3(b) xi on the fourfold, as a multiple of <a, b>
        ring = kummer.KummerRing(2)
        a, b = eta(1, 2, 3), eta(4)
        val = 2 * ring.integral([kummer.Mu(a), kummer.C(b), kummer.XI])
        rep.add("n2-mixed-xi-ratio", "mixed odd integral against xi", -6,
                val / kummer.odd_pairing(a, b))
    for n in range(2, 6):
        c1, c2, c3 = kummer.theta_closed(n)
        rep.add(f"n{n}-closed-theta2-ratio", "theta2 / theta1", n + 1, c2 / c1)
        rep.add(f"n{n}-theta1-via-fujiki", "theta1 from the C/D reduction", c1,
                kummer.theta1_via_fujiki(n))
    for n in (3, 4, 5):
        for which in (1, 2):
            rep.add(f"n{n}-cd{which}", "C/D coefficients", kummer.cd_closed(n, which),
                    kummer.solve_cd(n, which))
    if 2 in ns:
        rep.add("n2-triple", "fourfold triple including the sign of theta3",
                (Fraction(-1), Fraction(-3), Fraction(-3)), kummer.compute_theta(2))


# -- phi ansatz -----------------------------------------------------------------

def suite_phi_ansatz(rep, options):
    for n in _ns(options, [2, 3]):
        ring = kummer.KummerRing(n)
        theta = kummer.compute_theta(n, ring)
        matrix = kummer.phi_matrix(n, ring)
        bad = kummer.verify_phi_ansatz(n, theta, matrix)
        rep.add(f"n{n}-pairs", "pairing table matches the ansatz on all 28 pairs", [],
                [list(b[0]) + [b[1]] for b in bad])
        rep.add(f"n{n}-pair-count", "basis wedge pairs", 28, len(matrix))
        for name, gamma in kummer.rank_table_cases().items():
            rep.add(f"n{n}-rank-{name}", "dim phi(gamma ^ H^3)",
                    kummer.expected_rank(gamma), kummer.phi_wedge_rank(matrix, gamma))


# -- classify -------------------------------------------------------------------

def _oracle_agrees(theta, rows):
    kind, _ = classify_subspace(theta, rows)
    return (kind != "none") == brute_force_one_dim(theta, rows)


def suite_classify(rep, options):
    theta = _theta_k2()
    rng = _random.Random(options["seed"])
    expected_kind = {"graph-normal": "graph", "graph-random": "graph",
                     "split-12": "split", "split-random": "split"}
    for name, rows in crafted_planes(theta, rng).items():
        kind, _ = classify_subspace(theta, rows)
        rep.add(f"crafted-{name}-kind", "classification branch",
                expected_kind.get(name, "none"), kind)
        rep.add(f"crafted-{name}-oracle", "classification against rank of Phi", True,
                _oracle_agrees(theta, rows))
    count = _count(options, 5000)
    block = 500
    for start in range(0, count, block):
        size = min(block, count - start)
        agree = sum(_oracle_agrees(theta, random_plane(rng)) for _ in range(size))
        rep.add(f"random-{_pad(start // block)}", "classification against rank of Phi",
                size, agree)


# -- hodge ----------------------------------------------------------------------

def suite_hodge(rep, options):
    theta = _theta_k2()
    rng = _random.Random(options["seed"])
    count = _count(options, 100)
    t = 0
    while t < count:
        h = positive_h(rng, theta.m)
        split = t % 5 == 4
        sigma = (random_split_point if split else random_graph_point)(theta, rng, h)
        if sigma is None:
            continue
        r = hodge_point_report(theta, h, sigma)
        kind = "split" if split else "graph"
        for key in ("in_domain", "image_is_line", "transversal", "isotropic",
                    "pairing_isotropic", "reclassifies"):
            rep.add(f"{_pad(t)}-{kind}-{key}", f"period point, {key.replace('_', ' ')}",
                    True, r[key])
        rep.add(f"{_pad(t)}-{kind}-definite", "Hermitian form is definite", True,
                r["sign"] in (1, -1))
        rep.add(f"{_pad(t)}-{kind}-conjugate-sign", "conjugate point has the opposite sign",
                -r["sign"], r["conjugate_sign"])
        t += 1


# -- spinor ---------------------------------------------------------------------

def _t_plus_point(n, rng):
    """A nonzero isotropic spinor on T+ with eta ^ eta != 0, all coordinates rational."""
    while True:
        x = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
        y = [Fraction(rng.randint(-3, 3)) for _ in range(6)] + [x]
        if y[0] == 0:
            continue
        # vol(eta ^ eta) = x^2 / (2(n+1)) fixes eta_34
        y[5] = 0
        y[5] = (x * x / (2 * (n + 1)) / 2 - (y[2] * y[3] - y[1] * y[4])) / y[0]
        return spinor.embed_i(n, y, 1)


def suite_spinor(rep, options):
    rng = _random.Random(options["seed"])
    for n in _ns(options, [2, 3, 4, 5]):
        want = spinor.dual_bbf_gram(n)
        for eps in (0, 1):
            rep.add(f"n{n}-pullback-eps{eps}", "pullback of q+ is the dual form", want,
                    spinor.pullback_gram(n, eps))
        for t in range(_count(options, 5)):
            x = _t_plus_point(n, rng)
            rows = spinor.z_subspace(x)
            skew, eta_matches, pf = spinor.z_graph_checks(x)
            cid = f"n{n}-tplus-{_pad(t)}"
            rep.add(f"{cid}-isotropic-spinor", "q+ vanishes", 0, spinor.q_plus(x))
            rep.add(f"{cid}-on-tplus", "(n+1) alpha = vol(beta)", True,
                    spinor.t_plus_membership(n, x))
            rep.add(f"{cid}-dimension", "Z is maximal", 4, len(rows))
            rep.add(f"{cid}-q-isotropic", "Z is isotropic", True, spinor.is_q_isotropic(rows))
            rep.add(f"{cid}-skew", "Z is the graph of a skew map", True, skew)
            rep.add(f"{cid}-eta", "vol(beta) iota(omega_f) = -eta", True, eta_matches)
            rep.add(f"{cid}-pfaffian", "Pf(f) on T+", Fraction(1, n + 1), pf)
    # graph periods go to the Hodge subspace only for one sign
    theta = _theta_k2()
    for t in range(_count(options, 5)):
        sigma = random_graph_point(theta, rng)
        rep.add(f"n2-embedding-{_pad(t)}", "embedding sign matching H^{1,0}", [1],
                spinor.matching_epsilon(theta, 2, sigma))


# -- divisors -------------------------------------------------------------------

def suite_divisors(rep, options):
    e_range = options["e_range"]
    for div, e, got, want in divisors.divisor_sweep(e_range):
        rep.add(f"div{div}-e{_pad(e, 2)}", "elementary divisors", want, got)
    for div in (1, 2, 3, 6):
        for e in e_range:
            rep.add(f"basis-div{div}-e{_pad(e, 2)}", "listed adapted basis",
                    (True, True, True), divisors.check_adapted_basis(div, e))
    for e in e_range:
        rep.add(f"basis-div6-corrected-e{_pad(e, 2)}", "adapted basis, swapped coefficients",
                (True, True, True), divisors.check_adapted_basis(6, e, corrected=True))
    for div in (1, 2, 3, 6):
        p = divisors.PolClass.template(div, 1)
        rep.add(f"gram-div{div}", "Gram matrix against the intersection block",
                divisors.block(divisors.intmat(p)), divisors.gram_on_standard_basis(p))


# -- weil -----------------------------------------------------------------------

def suite_weil(rep, options):
    theta = _theta_k2()
    rng = _random.Random(options["seed"])
    count = _count(options, 50)
    t = 0
    while t < count:
        ctx = weil.random_context(rng, theta)
        split = t % 5 == 4
        sigma = weil.random_weil_point(ctx, rng, split)
        if sigma is None:
            continue
        cid = f"{_pad(t)}-{'split' if split else 'graph'}"
        for key, val in weil.verify_weil(ctx, sigma).items():
            rep.add(f"{cid}-{key.replace('_', '-')}", key.replace("_", " "), True, val)
        eig, iso, cross = weil.eigenspace_checks(ctx)
        rep.add(f"{cid}-eigenspaces", "eigenspaces, isotropy and cross pairing",
                (True, True, True), (eig, iso, cross))
        gram = weil.hermitian_gram(ctx)
        rep.add(f"{cid}-hermitian-gram", "Hermitian Gram matrix",
                weil.expected_hermitian_gram(ctx), gram)
        rep.add(f"{cid}-hermitian", "Gram matrix is Hermitian", True, weil.is_hermitian(gram))
        d, w = weil.hermitian_det(ctx)
        rep.add(f"{cid}-det", "determinant closed form", weil.det_closed(ctx), d)
        rep.add(f"{cid}-det-witness", "determinant is a norm", d, w * w)
        t += 1
    rep.add("cayley", "quadratic identity on integer skew pairs", 1000,
            weil.cayley_suite(1000, options["seed"]))


def suite_example(rep, options):
    r = weil.order_three_example()
    expected = {"N": Fraction(1, 3), "b": 0, "psi0_squared_is_minus_3": True,
                "omega_cubed_is_identity": True, "omega_not_identity": True,
                "omega_preserves_standard": False, "omega_preserves_enlarged": True,
                "standard_in_enlarged": True, "enlarged_index": 16}
    for key, want in expected.items():
        rep.add(key.replace("_", "-"), "order-three example, c = e = 1, s = 0", want, r[key])
    ctx = weil.WeilContext(_theta_k2(), 1, 1, 0)
    rep.add("psi-squared", "Psi^2 = -(N - b^2)", Fraction(1, 3), ctx.D)


# -- ring self-test -------------------------------------------------------------

def suite_ring(rep, options):
    for name, passed, total in selftest.run_all(options["seed"], _count(options, 10)):
        rep.add(name, "Lehn-Sorger ring property", total, passed)


SUITES = {
    "ideban": suite_double_factorial,
    "fujiki": suite_fujiki,
    "bellaform": suite_qvee_powers,
    "theta": suite_theta,
    "phi-ansatz": suite_phi_ansatz,
    "classify": suite_classify,
    "hodge": suite_hodge,
    "spinor": suite_spinor,
    "divisors": suite_divisors,
    "weil": suite_weil,
    "example-5-4": suite_example,
    "ring-selftest": suite_ring,
}


def _options(options):
    out = dict(DEFAULTS)
    for k, v in (options or {}).items():
        k = ALIASES.get(k, k)
        if k not in out:
            raise ValueError(f"unknown option {k!r}")
        out[k] = v
    if isinstance(out["n"], int):
        out["n"] = [out["n"]]
    if out["seed"] is None:
        out["seed"] = DEFAULT_SEED
    if out["count"] is not None and out["count"] < 0:
        raise ValueError("count must be nonnegative")
    if any(n < 1 for n in (out["n"] or ())):
        raise ValueError("n must be positive")
    return out


def run_suite(name, options=None):
    """Run one suite (or 'all') and return its report, cases sorted by id."""
    opts = _options(options)
    names = list(SUITES) if name == "all" else [name]
    for nm in names:
        if nm not in SUITES:
            raise ValueError(f"unknown suite {nm!r}; choose from {', '.join(SUITES)} or all")
    rep = SuiteReport(name, opts["seed"])
    start = time.perf_counter()
    pattern = opts["cases"]
    for nm in names:
        if name == "all" and pattern and "/" in pattern \
                and not fnmatchcase(nm, pattern.split("/", 1)[0]):
            continue
        sub = SuiteReport(nm, opts["seed"])
        SUITES[nm](sub, opts)
        if name == "all":
            for c in sub.cases:
                c.id = f"{nm}/{c.id}"
        rep.extend(sub)
    if pattern:
        rep.cases = [c for c in rep.cases if fnmatchcase(c.id, pattern)]
    rep.elapsed_ms = round((time.perf_counter() - start) * 1000)
    return rep.sorted()
