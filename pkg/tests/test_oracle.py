from fractions import Fraction

import pytest

from seriesum import (
    FactoredRational,
    Polynomial,
    closed_form_andreoli,
    closed_form_arithmetic,
    closed_form_step,
    feynman_identity_check,
    feynman_stride2_check,
    partial_sum,
    partial_sum_float,
    tail_bound,
)
from seriesum.series_engine import (
    AndreoliFamily,
    ArithmeticFamily,
    StepFamily,
    family_rational,
)

ONE = Polynomial.constant(1)


def fr(factors, numerator=ONE, leading=1):
    return FactoredRational(numerator, Fraction(leading), tuple(factors))


def test_partial_sum_examples():
    f = fr([(0, 1), (1, 1)])
    assert partial_sum(f, 1, 1) == Fraction(1, 2)
    # telescoping identity: sum_{k<=K} 1/(k(k+1)) = 1 - 1/(K+1)
    assert partial_sum(f, 1, 100) == Fraction(100, 101)

    g = fr([(0, 1), (1, 1), (2, 1)])
    # telescoping identity: 1/4 - 1/(2(K+1)(K+2))
    assert partial_sum(g, 1, 10) == Fraction(1, 4) - Fraction(1, 2 * 11 * 12)
    assert partial_sum(g, 1, 10) == Fraction(65, 264)


def test_partial_sum_respects_start_index():
    f = fr([(0, 1), (1, 1)])
    # sum_{k>=2} telescopes to 1/2
    assert partial_sum(f, 2, 10**4) == Fraction(1, 2) - Fraction(1, 10**4 + 1)
    with pytest.raises(ValueError):
        partial_sum(f, 5, 4)


def test_partial_sum_pole_detection():
    f = FactoredRational(ONE, Fraction(1), ((Fraction(-2), 1), (Fraction(0), 2)))
    with pytest.raises(ZeroDivisionError):
        partial_sum(f, 1, 5)
    # but starting past the pole is fine
    assert partial_sum(f, 3, 3) == Fraction(1, 9)


def test_partial_sum_nonconstant_numerator():
    f = fr([(0, 1), (1, 1), (2, 1)], numerator=Polynomial.of(1, 1))
    # (k+1)/(k(k+1)(k+2)) = 1/(k(k+2)); partial sums telescope in pairs
    expected = sum(Fraction(1, k * (k + 2)) for k in range(1, 51))
    assert partial_sum(f, 1, 50) == expected


def test_float_path_tracks_exact_path():
    f = fr([(Fraction(1, 2), 1), (Fraction(3, 2), 1), (Fraction(5, 2), 1)], leading=8)
    exact = partial_sum(f, 1, 5000)
    approx = partial_sum_float(f, 1, 5000)
    assert approx == pytest.approx(float(exact), rel=1e-13)


def test_tail_bound_examples():
    f = fr([(0, 1), (1, 1)])
    tb = tail_bound(f, 100)
    assert tb.cutoff == 100
    assert Fraction(1, 101) <= tb.bound <= Fraction(2, 100)

    g = fr([(0, 1), (1, 1), (2, 1)])
    tb = tail_bound(g, 100)
    true_tail = Fraction(1, 4) - partial_sum(g, 1, 100)
    assert tb.bound <= Fraction(2, 2 * 100 * 100)
    assert true_tail <= tb.bound


def test_tail_bound_scaling():
    f = fr([(0, 1), (1, 1)])  # p = 2: bound scales like 1/K
    assert tail_bound(f, 200).bound == tail_bound(f, 100).bound / 2


def test_tail_bound_monotone_in_cutoff():
    f = fr([(0, 1), (2, 1), (4, 1)])
    bounds = [tail_bound(f, K).bound for K in (50, 100, 500, 1000)]
    assert bounds == sorted(bounds, reverse=True)


def test_tail_bound_rejects_divergent_shape():
    with pytest.raises(ValueError):
        tail_bound(fr([(0, 1), (1, 1)], numerator=Polynomial()), 100)


def test_tail_bound_soundness_on_families():
    cases = []
    for n in range(1, 6):
        cases.append((AndreoliFamily(n), closed_form_andreoli(n)))
    for stride in (2, 3):
        for n in (1, 2, 3):
            cases.append((StepFamily(stride, n), closed_form_step(stride, n)))
    cases.append(
        (
            ArithmeticFamily(Fraction(1), Fraction(2), 1),
            closed_form_arithmetic(Fraction(1), Fraction(2), 1),
        )
    )
    cases.append(
        (
            ArithmeticFamily(Fraction(1, 2), Fraction(1), 2),
            closed_form_arithmetic(Fraction(1, 2), Fraction(1), 2),
        )
    )
    for spec, value in cases:
        f, start = family_rational(spec)
        for K in (50, 100, 500):
            tb = tail_bound(f, K)
            gap = abs(value - partial_sum(f, start, tb.cutoff))
            assert gap <= tb.bound, (spec, K)


def test_tail_bound_bumps_past_negative_shifts():
    # shifts push features right; the cutoff must move accordingly
    f = fr([(Fraction(-19, 2), 1), (Fraction(1, 2), 1)])
    tb = tail_bound(f, 3)
    assert tb.cutoff > 3
    sums = partial_sum(f, 10, tb.cutoff)  # no poles from k=10 on
    assert sums != 0


def test_feynman_identity_trivial_case():
    res = feynman_identity_check(1.0, 1, tolerance=1e-12)
    assert res.passed
    assert res.lhs == pytest.approx(0.5, abs=1e-15)
    assert res.rhs == pytest.approx(0.5, abs=1e-12)


def test_feynman_identity_real_argument():
    res = feynman_identity_check(2.5, 3, tolerance=1e-11)
    assert res.passed
    assert res.residual <= 1e-11


def test_feynman_identity_grid():
    for k in (0.5, 1.0, 2.0, 7.25):
        for n in range(1, 7):
            assert feynman_identity_check(k, n, tolerance=1e-10).passed


def test_feynman_identity_rejects_bad_arguments():
    with pytest.raises(ValueError):
        feynman_identity_check(0.0, 1)
    with pytest.raises(ValueError):
        feynman_identity_check(1.0, 0)


def test_stride2_normalization_report():
    # left side 1/(1*3*5) = 1/15; the printed normalization misses it,
    # the corrected 1/(2^n n!) with exponent n matches
    rep = feynman_stride2_check(1.0, 2, tolerance=1e-10)
    assert rep.lhs == pytest.approx(1.0 / 15.0, abs=1e-15)
    assert rep.matches == "corrected"
    assert abs(rep.corrected - rep.lhs) <= 1e-10
    assert abs(rep.as_printed - rep.lhs) > 1e-3


def test_stride2_report_across_grid():
    for k in (0.5, 1.0, 2.0):
        for n in (1, 2, 3, 4):
            assert feynman_stride2_check(k, n).matches == "corrected"
