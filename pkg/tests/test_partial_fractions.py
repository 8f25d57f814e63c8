import random
from fractions import Fraction

import pytest

from seriesum import (
    FactoredRational,
    Polynomial,
    decompose,
    decompose_andreoli,
    recombine,
)
from seriesum.verification import random_factored_rational

ONE = Polynomial.constant(1)


def fr(factors, numerator=ONE, leading=1):
    return FactoredRational(numerator, Fraction(leading), tuple(factors))


def table(d):
    return {(a, j): c for a, j, c in d.terms}


def test_decompose_consecutive_simple_poles():
    d = decompose(fr([(0, 1), (1, 1), (2, 1)]))
    assert table(d) == {
        (Fraction(0), 1): Fraction(1, 2),
        (Fraction(1), 1): Fraction(-1),
        (Fraction(2), 1): Fraction(1, 2),
    }


def test_decompose_pure_power():
    d = decompose(fr([(0, 2)]))
    assert table(d) == {(Fraction(0), 1): Fraction(0), (Fraction(0), 2): Fraction(1)}


def test_decompose_repeated_root():
    d = decompose(fr([(0, 1), (1, 2)]))
    assert table(d) == {
        (Fraction(0), 1): Fraction(1),
        (Fraction(1), 1): Fraction(-1),
        (Fraction(1), 2): Fraction(-1),
    }


def test_decompose_andreoli_tables():
    assert table(decompose_andreoli(1)) == {
        (Fraction(0), 1): Fraction(1),
        (Fraction(1), 1): Fraction(-1),
    }
    assert table(decompose_andreoli(2)) == {
        (Fraction(0), 1): Fraction(1, 2),
        (Fraction(1), 1): Fraction(-1),
        (Fraction(2), 1): Fraction(1, 2),
    }
    assert table(decompose_andreoli(3)) == {
        (Fraction(0), 1): Fraction(1, 6),
        (Fraction(1), 1): Fraction(-1, 2),
        (Fraction(2), 1): Fraction(1, 2),
        (Fraction(3), 1): Fraction(-1, 6),
    }


@pytest.mark.parametrize("n", range(1, 9))
def test_decompose_matches_closed_form_coefficients(n):
    f = fr([(i, 1) for i in range(n + 1)])
    assert decompose(f).terms == decompose_andreoli(n).terms


def test_recombine_round_trips():
    assert recombine(decompose(fr([(0, 1), (1, 1), (2, 1)]))) == ONE
    assert recombine(decompose(fr([(0, 1), (1, 2)]))) == ONE
    assert recombine(decompose_andreoli(5)) == ONE


def test_invariants_rejected():
    with pytest.raises(ValueError):
        fr([(0, 1), (0, 2)])  # repeated shift
    with pytest.raises(ValueError):
        fr([(0, 1)], numerator=Polynomial.of(0, 1))  # divergent
    with pytest.raises(ValueError):
        FactoredRational(ONE, Fraction(0), ((Fraction(0), 2),))  # zero leading


def test_poles_hit_from():
    f = fr([(-1, 1), (0, 1), (1, 1)])
    assert f.poles_hit_from(1) == [Fraction(-1)]
    assert f.poles_hit_from(2) == []


def test_nonconstant_numerator_decomposition():
    # (k+3) / (k(k+1)(k+2)(k+4)) decomposed and recombined exactly
    f = fr([(0, 1), (1, 1), (2, 1), (4, 1)], numerator=Polynomial.of(3, 1))
    d = decompose(f)
    assert recombine(d) == f.numerator
    assert d.simple_pole_sum() == 0
    x = Fraction(7, 3)
    assert f.term(x) == d.term(x)


def test_simple_pole_sum_zero_iff_degree_gap():
    # degree gap exactly 2 still forces the order-1 coefficients to cancel
    f = fr([(0, 1), (2, 1)])
    assert decompose(f).simple_pole_sum() == 0


def test_randomized_round_trip_and_pointwise():
    rng = random.Random(424243)
    for _ in range(200):
        f = random_factored_rational(rng)
        d = decompose(f)
        assert recombine(d) == f.numerator
        assert d.simple_pole_sum() == 0
        assert d.leading == f.leading
        # every (shift, 1..m) slot is present, zeros stored explicitly
        slots = {(a, j) for a, j, _ in d.terms}
        for a, m in f.factors:
            assert {(a, j) for j in range(1, m + 1)} <= slots
        checked = 0
        for _ in range(10):
            x = Fraction(rng.randint(1, 90), rng.randint(1, 7))
            if any(x + a == 0 for a, _ in f.factors):
                continue
            assert f.term(x) == d.term(x)
            checked += 1
        assert checked >= 8
