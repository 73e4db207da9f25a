import random

from hypothesis import given, settings, strategies as st

from kummer_tori.exact.exterior import ExtElement
from kummer_tori.selftest import pushforward_adjoint, random_monomial_tensor
from kummer_tori.surface import (Tensor, delta_star, eta, integrate_A, pullback, pushforward,
                                 pushforward_gram, t_form)


def test_integrate_A():
    assert integrate_A(eta(1, 2, 3, 4)) == 1
    assert integrate_A(eta(1, 2)) == 0
    assert integrate_A(eta(2, 1, 3, 4)) == -1


def test_t_form_signs():
    top = eta(1, 2, 3, 4)
    assert t_form(Tensor.pure([top, top])) == 1
    assert t_form(Tensor.pure([top])) == -1
    assert t_form(Tensor.pure([top, eta(1, 2)])) == 0


def test_pullback_examples():
    x = Tensor.pure([eta(1), eta(2)])
    assert pullback((0, 1), x) == x
    assert pullback((0, 0), x) == Tensor.pure([eta(1, 2)])
    assert pullback((0, 0), Tensor.pure([eta(2), eta(1)])) == Tensor.pure([eta(1, 2)]).scale(-1)


def test_diagonal_adjoint_to_multiplication():
    basis = [ExtElement({m: 1}, "H") for m in range(16)]
    d = delta_star(2, eta(1, 2, 3, 4))
    for b1 in basis:
        for b2 in basis:
            lhs = t_form(d * Tensor.pure([b1, b2]))
            assert lhs == -integrate_A(eta(1, 2, 3, 4).wedge(b1).wedge(b2))


def test_delta_star_against_units():
    one = ExtElement({0: 1}, "H")
    assert t_form(delta_star(2, eta(1, 2, 3, 4)) * Tensor.pure([one, one])) == -1


def test_delta_star_is_pushforward():
    a = eta(1, 3)
    assert delta_star(3, a) == pushforward((0, 0, 0), Tensor.pure([a]))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(2, 4))
def test_pushforward_adjointness(seed, r):
    assert pushforward_adjoint(random.Random(seed), r)


def test_fast_pushforward_matches_reference():
    rng = random.Random(3)
    for s in [(0, 0, 1), (1, 0, 0, 1), (0, 1, 2)]:
        y = random_monomial_tensor(rng, max(s) + 1, terms=3)
        assert pushforward(s, y) == pushforward_gram(s, y)
