import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kummer_tori.exact import Quad
from kummer_tori.exact.linalg import rank
from kummer_tori.hodge import (Theta, brute_force_one_dim, classify_subspace, crafted_planes,
                               decomposable_plane, graph_line, graph_rows, hodge_from_period,
                               hodge_point_report, omega_to_skew, period_checks, phi_theta,
                               positive_h, random_graph_point, random_plane, random_split_point,
                               skew_to_omega, wedge_vv)

I = Quad(0, 1, -1)


def unit(k, n=8):
    return [1 if i == k else 0 for i in range(n)]


def test_theta_relation():
    with pytest.raises(ValueError):
        Theta(-1, -3, 3, m=1)
    assert Theta(-1, -3, 3).m == Fraction(1, 6)


def test_phi_examples(theta_k2):
    assert phi_theta(theta_k2, unit(0), unit(1)) == [-1, 0, 0, 0, 0, 0, 0]
    assert phi_theta(theta_k2, unit(0), unit(4)) == [0] * 6 + [-3]
    assert phi_theta(theta_k2, unit(2), unit(2)) == [0] * 7


@given(st.lists(st.integers(-5, 5), min_size=8, max_size=8),
       st.lists(st.integers(-5, 5), min_size=8, max_size=8))
def test_phi_is_antisymmetric(a, b):
    th = Theta(-1, -3, 3)
    assert phi_theta(th, a, b) == [-x for x in phi_theta(th, b, a)]


def test_omega_skew_roundtrip():
    om = [1, 2, -1, 0, 3, Fraction(1, 3)]
    assert skew_to_omega(omega_to_skew(om)) == om


def test_classify_graph(theta_k2):
    f = omega_to_skew([1, 0, 0, 0, 0, Fraction(1, 3)])
    kind, g = classify_subspace(theta_k2, graph_rows(f))
    assert kind == "graph" and g == f
    assert graph_line(theta_k2, f)[6] == -6


def test_classify_split(theta_k2):
    rows = [unit(0), unit(1), unit(6), unit(7)]
    kind, u = classify_subspace(theta_k2, rows)
    assert kind == "split" and rank(u + [unit(0)[:4], unit(1)[:4]]) == 2


def test_classify_symmetric_graph_is_not_one_dimensional(theta_k2):
    sym = [[1, 2, 0, 0], [2, 0, 1, 0], [0, 1, 3, 0], [0, 0, 0, 1]]
    assert classify_subspace(theta_k2, graph_rows(sym)) == ("none", None)
    assert not brute_force_one_dim(theta_k2, graph_rows(sym))


def test_crafted_planes_agree_with_brute_force(theta_k2):
    for name, rows in crafted_planes(theta_k2, random.Random(0)).items():
        kind, _ = classify_subspace(theta_k2, rows)
        assert (kind != "none") == brute_force_one_dim(theta_k2, rows), name


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_planes_agree_with_brute_force(seed):
    th = Theta(-1, -3, 3)
    rows = random_plane(random.Random(seed))
    kind, _ = classify_subspace(th, rows)
    assert (kind != "none") == brute_force_one_dim(th, rows)


def test_classify_rejects_low_rank(theta_k2):
    with pytest.raises(ValueError):
        classify_subspace(theta_k2, [unit(0), unit(0), unit(1), unit(2)])


def test_split_period_example(theta_k2):
    # v1 ^ (v2 + i v3) is isotropic but has (sigma, conj sigma) = 0
    degenerate = wedge_vv([1, 0, 0, 0], [0, 1, I, 0]) + [0]
    assert period_checks(theta_k2, degenerate) == (True, False)
    u1, u2 = [1, 0, I, 0], [0, 1, 0, -I]
    sigma = wedge_vv(u1, u2) + [0]
    assert period_checks(theta_k2, sigma) == (True, True)
    rows = hodge_from_period(theta_k2, sigma)
    assert len(rows) == 4
    kind, u = classify_subspace(theta_k2, rows)
    assert kind == "split"
    assert rank(decomposable_plane(sigma[:6]) + [u1, u2]) == 2


def test_graph_period_example(theta_k2):
    rng = random.Random(11)
    sigma = random_graph_point(theta_k2, rng)
    assert sigma is not None and sigma[6] == -6
    assert all(period_checks(theta_k2, sigma))
    kind, f = classify_subspace(theta_k2, hodge_from_period(theta_k2, sigma))
    assert kind == "graph"


@pytest.mark.parametrize("split", [False, True])
def test_hodge_point_reports(theta_k2, split):
    rng = random.Random(5)
    done = 0
    while done < 8:
        h = positive_h(rng, theta_k2.m)
        sigma = (random_split_point if split else random_graph_point)(theta_k2, rng, h)
        if sigma is None:
            continue
        r = hodge_point_report(theta_k2, h, sigma)
        for key in ("in_domain", "image_is_line", "transversal", "isotropic",
                    "pairing_isotropic", "reclassifies"):
            assert r[key], key
        assert r["sign"] in (1, -1)
        assert r["conjugate_sign"] == -r["sign"]
        done += 1
