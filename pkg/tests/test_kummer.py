from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kummer_tori import kummer as k
from kummer_tori.surface import eta


@pytest.fixture(scope="module")
def ring2():
    return k.KummerRing(2)


@pytest.fixture(scope="module")
def ring3():
    return k.KummerRing(3)


def test_double_factorial():
    assert [k.double_factorial(i) for i in (-1, 0, 1, 5, 6)] == [1, 1, 1, 15, 48]
    with pytest.raises(ValueError):
        k.double_factorial(-2)


@given(st.integers(0, 6), st.integers(0, 8), st.integers(0, 8))
def test_double_factorial_identity(kk, ell, n):
    if ell <= n:
        assert k.verify_double_factorial_identity(kk, ell, n)


def test_double_factorial_identity_examples():
    assert k.double_factorial_sum(0, 1, 1) == 3 == k.double_factorial_ratio(0, 1, 1)
    assert k.double_factorial_sum(4, 0, 5) == 1
    with pytest.raises(ValueError):
        k.verify_double_factorial_identity(0, 3, 2)


def test_bbf_values():
    xi = k.H2Class.xi()
    e1, f1 = k.H2Class(eta(1, 2)), k.H2Class(eta(3, 4))
    assert k.bbf(2, xi, xi) == -6
    assert k.bbf(2, e1, f1) == 1
    assert k.bbf(2, e1, xi) == 0


def test_fujiki_examples():
    gamma = k.H2Class(eta(1, 2) + eta(3, 4))
    assert k.fujiki_value(2, [gamma] * 4) == 36
    assert k.fujiki_value(2, [k.H2Class.xi()] * 4) == 324
    with pytest.raises(ValueError):
        k.fujiki_value(2, [gamma] * 3)


def test_fujiki_two_routes_agree(ring3):
    gamma = k.H2Class(eta(1, 2) + 2 * eta(1, 3) - eta(2, 4) + eta(3, 4), 1)
    words = k.words_pow(k.lift_h2(gamma), 6)
    q = k.bbf(3, gamma, gamma)
    assert ring3.combo(words) == k.fujiki_closed(3, q) == k.fujiki_value(3, [gamma] * 6)


def test_qvee_powers(ring2, ring3):
    assert k.qvee_power_check(2, 0, ring2) == (324, 324)
    assert k.qvee_power_check(2, 2, ring2) == (189, 189)
    for ell in range(4):
        got, want = k.qvee_power_check(3, ell, ring3)
        assert got == want


def test_sigma_xi(ring2):
    assert k.sigma_xi_value(2, 1, ring2) == -54 == k.sigma_xi_closed(2, 1)


def test_integral_mu3_against_closed_and_ring(ring2):
    a, a2, g = eta(1, 2, 4), eta(1, 2, 3), eta(1, 2) + eta(3, 4)
    direct = k.integral_mu3(2, a, a2, g)
    assert direct == k.mu3_pair_closed(2, a, a2, g)
    assert direct == k.odd_integral_ring(2, "a", a, a2, g, 0, ring2)
    assert k.integral_mu3(2, a, a, g) == 0


def test_odd_integrals_n3(ring3):
    g = eta(1, 2) + eta(3, 4)
    for kind, u, u2 in (("a", eta(1, 2, 3), eta(1, 2, 4)), ("b", eta(1), eta(2))):
        for xp in (0, 2):
            assert (k.odd_integral_ring(3, kind, u, u2, g, xp, ring3)
                    == k.odd_integral_closed(3, kind, u, u2, g, xp))


def test_solve_cd():
    assert k.solve_cd(3, 1) == (Fraction(-1, 44), 0)
    assert k.solve_cd(3, 2) == (Fraction(-4, 11), 0)
    assert k.solve_cd(4, 2) == (Fraction(-4, 13), 0)
    for n in (3, 4, 5):
        assert k.solve_cd(n, 1) == k.cd_closed(n, 1)
    with pytest.raises(ValueError):
        k.solve_cd(2)


def test_theta_closed_forms():
    assert k.theta_closed(2) == (-1, -3, 3)
    assert k.theta_closed(3) == (-72, -288, 288)
    assert k.theta_closed(4) == (-9900, -49500, 49500)


def test_theta_from_ring(ring2, ring3):
    assert k.compute_theta(2, ring2) == (-1, -3, 3)
    assert k.compute_theta(3, ring3) == (-72, -288, 288)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_theta1_via_fujiki(n):
    assert k.theta1_via_fujiki(n) == k.theta_closed(n)[0]


@pytest.mark.parametrize("n", [2, 3])
def test_phi_ansatz(n):
    ring = k.KummerRing(n)
    matrix = k.phi_matrix(n, ring)
    assert len(matrix) == 28
    assert k.verify_phi_ansatz(n, k.compute_theta(n, ring), matrix) == []
    # the wrong sign of theta3 is detected
    t1, t2, t3 = k.compute_theta(n, ring)
    assert k.verify_phi_ansatz(n, (t1, t2, -t3), matrix)


@pytest.mark.parametrize("n", [2, 3])
def test_rank_table(n):
    matrix = k.phi_matrix(n)
    ranks = {name: k.phi_wedge_rank(matrix, g) for name, g in k.rank_table_cases().items()}
    assert ranks["zero"] == 0
    assert {ranks[x] for x in ("isotropic-h3", "isotropic-h1", "isotropic-mixed")} == {4}
    assert ranks["anisotropic"] == ranks["anisotropic-generic"] == 7


def test_odd_pairing_proportionality(ring3):
    g = eta(1, 2) + eta(3, 4)
    c = k.odd_proportionality_constant(3, g, ring3)
    assert c == Fraction(2, 3)
    assert k.odd_proportionality_constant(3, g.scale(2), ring3) == Fraction(8, 3)


def test_interface_names():
    assert k.verify_ideban is k.verify_double_factorial_identity
    assert k.bellaform_check is k.qvee_power_check
    assert k.verify_remark_proportionality is k.odd_proportionality_constant
