from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kummer_tori.exact import (ExtElement, Quad, SkewMap4, format_scalar, invert_skew, iota,
                               iota_inv, is_skew, parse_scalar, pfaffian, skew_cayley_check,
                               skew_smith, vol)
from kummer_tori.exact.linalg import det, identity, int_det, inverse, matmul, nullspace, rank, solve
from kummer_tori.exact.exterior import contract

rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20))
small = st.integers(-9, 9)


def skew_from(e):
    a12, a13, a14, a23, a24, a34 = e
    return [[0, a12, a13, a14], [-a12, 0, a23, a24],
            [-a13, -a23, 0, a34], [-a14, -a24, -a34, 0]]


skews = st.lists(small, min_size=6, max_size=6).map(skew_from)


# -- scalars ---------------------------------------------------------------------

def test_quad_rejects_square_radicand():
    with pytest.raises(ValueError):
        Quad(1, 1, 4)


def test_quad_i_squared():
    i = Quad(0, 1, -1)
    assert i * i == -1
    assert (i * i).is_rational()


def test_quad_mixing_fields_fails():
    with pytest.raises(ValueError):
        Quad(0, 1, -1) + Quad(0, 1, -3)


@given(rationals, rationals, rationals, rationals)
def test_quad_field_axioms(a, b, c, d):
    x, y = Quad(a, b, -3), Quad(c, d, -3)
    assert x * y == y * x
    assert (x + y) - y == x
    if y:
        assert (x / y) * y == x
    assert x.norm() == x * x.conj()


@given(rationals, rationals, st.sampled_from([-1, -3, 2, Fraction(-1, 3)]))
def test_format_parse_roundtrip(a, b, d):
    x = Quad(a, b, d)
    assert parse_scalar(format_scalar(x)) == x


def test_format_examples():
    assert format_scalar(Fraction(-3, 4)) == "-3/4"
    assert format_scalar(Quad(1, -2, -1)) == "1-2*sqrt(-1)"
    assert format_scalar(Quad(5, 0, -1)) == "5"


# -- linear algebra --------------------------------------------------------------

def test_inverse_and_solve():
    a = [[2, 1], [1, 1]]
    assert matmul(a, inverse(a)) == identity(2)
    assert solve(a, [3, 2]) == [1, 1]


def test_nullspace_dimension():
    a = [[1, 2, 3], [2, 4, 6]]
    ns = nullspace(a, 3)
    assert len(ns) == 2
    assert all(sum(r[k] * v[k] for k in range(3)) == 0 for r in a for v in ns)


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=4, max_size=4))
def test_int_det_matches_rational_det(m):
    assert int_det(m) == det(m)


def test_rank_over_gaussian_rationals():
    i = Quad(0, 1, -1)
    assert rank([[1, i], [i, -1]]) == 1


# -- exterior algebra ------------------------------------------------------------

def test_vol_sign_rules():
    assert vol(ExtElement.mono([0, 1, 2, 3])) == 1
    assert vol(ExtElement.mono([1, 0, 2, 3])) == -1
    assert vol(ExtElement.mono([0, 2, 1, 3], coeff=3)) == -3


def test_iota_examples():
    assert iota(ExtElement.mono([0, 1], "V*")) == ExtElement.mono([2, 3])
    assert iota(ExtElement.mono([2, 3], "V*")) == ExtElement.mono([0, 1])


@given(st.lists(small, min_size=6, max_size=6), st.lists(small, min_size=6, max_size=6))
def test_iota_defining_property(x, z):
    xs = ExtElement.from_wedge2(x, "V*")
    zs = ExtElement.from_wedge2(z)
    assert vol(iota(xs).wedge(zs)) == sum(a * b for a, b in zip(x, z))
    assert iota_inv(iota(xs)) == xs


@given(st.lists(small, min_size=4, max_size=4), st.lists(small, min_size=4, max_size=4))
def test_wedge_anticommutes_on_vectors(v, w):
    a, b = ExtElement.from_vector(v), ExtElement.from_vector(w)
    assert a.wedge(b) == -b.wedge(a)


def test_contraction_is_a_derivation():
    ell = [1, 2, 0, -1]
    a, b = ExtElement.mono([0, 1]), ExtElement.mono([2, 3])
    lhs = contract(ell, a.wedge(b))
    rhs = contract(ell, a).wedge(b) + a.wedge(contract(ell, b))
    assert lhs == rhs


# -- skew matrices ---------------------------------------------------------------

J = skew_from([1, 0, 0, 0, 0, 1])


def test_pfaffian_examples():
    assert pfaffian(J) == 1
    assert pfaffian(skew_from([2, 1, 0, 0, 1, 3])) == 5
    assert pfaffian(skew_from([1, 0, 0, 0, 0, 0])) == 0


@given(skews)
def test_pfaffian_squared_is_det(a):
    assert pfaffian(a) ** 2 == det(a)


def test_invert_skew():
    assert invert_skew(J) == [[-x for x in r] for r in J]
    f = skew_from([2, 1, 0, 0, 1, 3])
    assert matmul(f, invert_skew(f)) == identity(4)
    assert is_skew(invert_skew(f))


def test_skewmap4_wrapper():
    f = SkewMap4.from_entries(a12=2, a13=1, a24=1, a34=3)
    assert f.pfaffian() == 5


@given(skews, skews)
def test_cayley_identity(x, y):
    assert skew_cayley_check(x, y)


def test_cayley_identity_trivial_cases():
    assert skew_cayley_check(J, J)
    assert skew_cayley_check(skew_from([3, -1, 2, 0, 5, 1]), [[0] * 4 for _ in range(4)])


def test_skew_smith_examples():
    assert list(skew_smith([[0, 1], [-1, 0]])) == [1]
    d = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 3, 0], [0, 0, 0, 3]]
    m = [[0] * 4 + r for r in d] + [[-x for x in r] + [0] * 4 for r in d]
    assert list(skew_smith(m)) == [1, 1, 3, 3]


@given(skews)
def test_skew_smith_product_is_pfaffian(a):
    divs = list(skew_smith(a))
    assert divs[0] * divs[1] == abs(pfaffian(a))
    if divs[1]:
        assert divs[1] % divs[0] == 0
