from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from seriesum import NEG_INF, Polynomial, degree, expand_factored

X = Polynomial.x()


def small_polys():
    return st.lists(
        st.fractions(min_value=-5, max_value=5, max_denominator=6),
        min_size=0,
        max_size=5,
    ).map(lambda cs: Polynomial(tuple(cs)))


def test_degree_markers():
    assert degree(Polynomial()) == NEG_INF
    assert degree(Polynomial.of(1, 0, 1)) == 2  # k^2 + 1
    cubic = expand_factored(1, [(0, 1), (1, 1), (2, 1)])
    assert degree(cubic) == 3


def test_degree_condition_works_for_zero_polynomial():
    # the marker orders below every integer, so the convergence
    # inequality needs no special casing
    assert degree(Polynomial()) + 2 <= 2


def test_eval_examples():
    assert Polynomial.of(1, 0, 1)(2) == 5
    cubic = expand_factored(1, [(0, 1), (1, 1), (2, 1)])
    assert cubic(1) == 6
    assert cubic(-1) == 0


def test_arithmetic_examples():
    assert (X**3).derivative() == Polynomial.of(0, 0, 3)
    q, r = divmod(X**2 - Polynomial.constant(1), X - Polynomial.constant(1))
    assert q == X + Polynomial.constant(1)
    assert r.is_zero
    assert (X + Polynomial.constant(1)) * (X + Polynomial.constant(2)) == Polynomial.of(2, 3, 1)


def test_division_by_zero_polynomial():
    with pytest.raises(ZeroDivisionError):
        divmod(X, Polynomial())


def test_expand_factored_examples():
    assert expand_factored(1, [(0, 1), (1, 1), (2, 1)]) == Polynomial.of(0, 2, 3, 1)
    assert expand_factored(1, [(1, 2)]) == Polynomial.of(1, 2, 1)
    assert expand_factored(2, [(0, 1)]) == Polynomial.of(0, 2)
    with pytest.raises(ValueError):
        expand_factored(1, [])


def test_shifted():
    p = Polynomial.of(1, 2, 3)  # 1 + 2k + 3k^2
    shifted = p.shifted(Fraction(1, 2))
    for x in (Fraction(0), Fraction(1), Fraction(-3, 2)):
        assert shifted(x) == p(x + Fraction(1, 2))


@given(
    st.fractions(min_value=-4, max_value=4, max_denominator=5),
    st.lists(
        st.tuples(
            st.fractions(min_value=-4, max_value=4, max_denominator=5),
            st.integers(min_value=1, max_value=3),
        ),
        min_size=1,
        max_size=3,
    ),
    st.fractions(min_value=-4, max_value=4, max_denominator=5),
)
def test_expand_factored_matches_pointwise_product(c, factors, x):
    product = c
    for a, m in factors:
        product *= (x + a) ** m
    assert expand_factored(c, factors)(x) == product


@given(small_polys(), small_polys())
def test_divmod_reconstruction(p, d):
    if d.is_zero:
        return
    q, r = divmod(p, d)
    assert d * q + r == p
    assert r.is_zero or r.degree < d.degree


@given(small_polys(), small_polys())
def test_derivative_product_rule(p, q):
    lhs = (p * q).derivative()
    rhs = p.derivative() * q + p * q.derivative()
    assert lhs == rhs


@given(small_polys(), small_polys(), st.fractions(max_denominator=7))
def test_derivative_is_linear(p, q, c):
    assert (p + q).derivative() == p.derivative() + q.derivative()
    assert (p * c).derivative() == p.derivative() * c


def test_no_trailing_zero_coefficients():
    p = Polynomial.of(1, 2, 0, 0)
    assert p.coeffs == (Fraction(1), Fraction(2))
