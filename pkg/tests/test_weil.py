import random
from fractions import Fraction

import pytest

from kummer_tori import weil
from kummer_tori.divisors import THETA_K2
from kummer_tori.exact.linalg import identity, matmul, mscale
from kummer_tori.hodge import Theta


@pytest.fixture
def theta():
    return Theta.kummer(2, *THETA_K2)


def test_context_constants(theta):
    ctx = weil.WeilContext(theta, 1, 1, 0)
    assert (ctx.N, ctx.b, ctx.D) == (Fraction(1, 3), 0, Fraction(1, 3))
    assert ctx.D == ctx.d_closed()
    with pytest.raises(ValueError):
        weil.WeilContext(theta, 0, 1, 0)


def test_psi_squares_to_minus_d(theta):
    ctx = weil.WeilContext(theta, 2, 3, 1)
    m = weil.psi_matrix(ctx)
    assert matmul(m, m) == mscale(-ctx.D, identity(8))
    assert weil.psi_rational(ctx)


def test_eigenspaces(theta):
    ctx = weil.WeilContext(theta, 3, 2, -1)
    assert weil.eigenspace_checks(ctx) == (True, True, True)


@pytest.mark.parametrize("split", [False, True])
def test_verify_weil_random(theta, split):
    rng = random.Random(17)
    done = 0
    while done < 6:
        ctx = weil.random_context(rng, theta)
        sigma = weil.random_weil_point(ctx, rng, split)
        if sigma is None:
            continue
        report = weil.verify_weil(ctx, sigma)
        assert all(report.values()), report
        assert ("graph_residual" in report) == (not split)
        done += 1


def test_verify_weil_rejects_non_orthogonal(theta):
    ctx = weil.WeilContext(theta, 1, 1, 0)
    with pytest.raises(ValueError):
        weil.verify_weil(ctx, [1, 0, 0, 0, 0, 0, 0])


@pytest.mark.parametrize("c,e,s", [(1, 1, 0), (2, 1, 1), (3, 4, -1), (6, 2, 1)])
def test_hermitian_gram(theta, c, e, s):
    ctx = weil.WeilContext(theta, c, e, s)
    gram = weil.hermitian_gram(ctx)
    assert gram == weil.expected_hermitian_gram(ctx)
    assert weil.is_hermitian(gram)
    d, w = weil.hermitian_det(ctx)
    assert d == weil.det_closed(ctx) == w * w


def test_example_order_three():
    r = weil.order_three_example()
    assert r["N"] == Fraction(1, 3) and r["b"] == 0
    assert r["psi0_squared_is_minus_3"]
    assert r["omega_cubed_is_identity"] and r["omega_not_identity"]
    assert not r["omega_preserves_standard"]
    assert r["omega_preserves_enlarged"] and r["standard_in_enlarged"]
    assert r["enlarged_index"] == 16


def test_cayley_suite():
    assert weil.cayley_suite(200, seed=3) == 200


def test_interface_name():
    assert weil.example_5_4 is weil.order_three_example
