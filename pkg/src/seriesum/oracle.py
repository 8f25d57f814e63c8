"""Brute-force certification: exact partial sums and rigorous tail bounds.

The exact path accumulates an integer numerator/denominator pair with a
gcd reduction each step, which is what keeps million-term telescoping
sums cheap: the reduced state stays as small as the answer. A compensated
floating-point path exists for quick interactive runs; certification
always uses the exact one.

The tail bound is deliberately loose but safe: with p = deg P - deg Q,
|tail after K| <= 2 |lc Q / lc P| / ((p-1) K^(p-1)), valid once K is past
every pole/sign feature of the term. The cutoff is bumped internally
until the term is sign-constant with decreasing magnitude (sampled at
K, K+1, K+2) and the asymptotic regime is reached, so the factor-2
safety genuinely covers the low-order corrections.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .partial_fractions import FactoredRational
from .quadrature import DEFAULT_TOLERANCE, integrate_unit_interval


def partial_sum(f: FactoredRational, start_index: int, K: int) -> Fraction:
    """Exact sum_{k=start..K} Q(k)/P(k) in rational arithmetic."""
    if K < start_index:
        raise ValueError("K must be >= start_index")
    facs = [(a.denominator, a.numerator, m) for a, m in f.factors]
    boost = 1
    for q, _, m in facs:
        boost *= q**m
    lead_num = f.leading.numerator
    lead_den = f.leading.denominator
    q_poly = f.numerator
    q_const = q_poly.coefficient(0) if q_poly.degree <= 0 else None

    gcd = math.gcd
    s_num, s_den = 0, 1
    for k in range(start_index, K + 1):
        den = 1
        for q, p, m in facs:
            base = q * k + p
            if base == 0:
                raise ZeroDivisionError(f"pole at summed index k = {k}")
            den *= base if m == 1 else base**m
        qv = q_const if q_const is not None else q_poly(k)
        t_num = qv.numerator * boost * lead_den
        t_den = qv.denominator * lead_num * den
        s_num = s_num * t_den + t_num * s_den
        s_den = s_den * t_den
        g = gcd(s_num, s_den)
        if g > 1:
            s_num //= g
            s_den //= g
    return Fraction(s_num, s_den)


def partial_sum_float(f: FactoredRational, start_index: int, K: int) -> float:
    """Compensated floating-point partial sum (exactly rounded via fsum).

    Fast path for interactive use and internal cross-checks only; the
    certification suites use :func:`partial_sum`.
    """
    if K < start_index:
        raise ValueError("K must be >= start_index")
    shifts = [(float(a), m) for a, m in f.factors]
    lead = float(f.leading)
    coeffs = [float(c) for c in f.numerator.coeffs]

    def terms():
        for k in range(start_index, K + 1):
            den = lead
            for a, m in shifts:
                base = k + a
                den *= base if m == 1 else base**m
            num = 0.0
            for c in reversed(coeffs):
                num = num * k + c
            yield num / den

    return math.fsum(terms())


@dataclass(frozen=True)
class TailBound:
    """Certified |sum_{k>cutoff} Q(k)/P(k)| <= bound."""

    cutoff: int
    bound: Fraction


def tail_bound(f: FactoredRational, K: int) -> TailBound:
    """Safe tail bound after the cutoff, bumping the cutoff if needed."""
    if f.numerator.is_zero:
        raise ValueError("tail bound of the zero series is meaningless")
    q_deg = int(f.numerator.degree)
    p = f.denominator_degree - q_deg
    if p < 2:
        raise ValueError("degree(Q) + 2 <= degree(P) required for a finite tail")
    c = 2 * abs(f.numerator.leading_coefficient / f.leading)

    # Past poles: shifts a < 0 move the term's features right by |a|.
    push = max([Fraction(0)] + [-a for a, _ in f.factors])
    k_min = math.ceil(push * (1 + Fraction(3, 2) * p)) + 4
    if q_deg >= 1:
        lc = f.numerator.leading_coefficient
        spread = sum(abs(cf / lc) for cf in f.numerator.coeffs[:-1])
        k_min = max(k_min, math.ceil(3 * spread) + 4)
    K = max(K, k_min)

    while True:
        t0, t1, t2 = (f.term(K + i) for i in range(3))
        monotone = abs(t0) >= abs(t1) >= abs(t2)
        sign_constant = (t0 >= 0) == (t1 >= 0) == (t2 >= 0)
        if monotone and sign_constant and t0 != 0:
            break
        K *= 2
        if K > 10**9:
            raise ValueError("could not certify a monotone tail")

    bound = c / ((p - 1) * Fraction(K) ** (p - 1))
    return TailBound(K, bound)


@dataclass(frozen=True)
class FeynmanCheck:
    """Both sides of 1/(k(k+1)...(k+n)) = (1/n!) * int_0^1 u^(k-1)(1-u)^n du."""

    lhs: float
    rhs: float
    residual: float
    passed: bool


def feynman_identity_check(
    k: float, n: int, tolerance: float = 1e-10
) -> FeynmanCheck:
    """Verify the one-dimensional product-to-integral reduction at real k > 0."""
    if k <= 0:
        raise ValueError("the identity requires k > 0")
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = 1.0
    for j in range(n + 1):
        lhs /= k + j
    quad = integrate_unit_interval(
        lambda u: u ** (k - 1.0) * (1.0 - u) ** n,
        min(tolerance * 1e-2, DEFAULT_TOLERANCE),
    )
    rhs = quad.value / math.factorial(n)
    residual = abs(lhs - rhs)
    return FeynmanCheck(lhs, rhs, residual, residual <= tolerance)


@dataclass(frozen=True)
class StrideTwoReport:
    """Both printed and corrected normalizations of the stride-2 reduction.

    For 1/(k(k+2)...(k+2n)) one published form reads
    (1/n!) * int_0^1 u^(k-1) (1-u^2)^(n-1) du, which already fails at
    k=1, n=1 (1/3 vs 1). The Beta-integral identity fixes it to
    (1/(2^n n!)) * int_0^1 u^(k-1) (1-u^2)^n du. This check evaluates the
    left side against both and reports which normalization matches.
    """

    lhs: float
    as_printed: float
    corrected: float
    matches: str  # "as_printed" | "corrected" | "both" | "neither"
    tolerance: float


def feynman_stride2_check(
    k: float, n: int, tolerance: float = 1e-10
) -> StrideTwoReport:
    if k <= 0:
        raise ValueError("the identity requires k > 0")
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = 1.0
    for j in range(n + 1):
        lhs /= k + 2 * j
    tol = min(tolerance * 1e-2, DEFAULT_TOLERANCE)
    printed = integrate_unit_interval(
        lambda u: u ** (k - 1.0) * (1.0 - u * u) ** (n - 1), tol
    ).value / math.factorial(n)
    corrected = integrate_unit_interval(
        lambda u: u ** (k - 1.0) * (1.0 - u * u) ** n, tol
    ).value / (2**n * math.factorial(n))
    hit_printed = abs(lhs - printed) <= tolerance
    hit_corrected = abs(lhs - corrected) <= tolerance
    matches = {
        (True, True): "both",
        (True, False): "as_printed",
        (False, True): "corrected",
        (False, False): "neither",
    }[(hit_printed, hit_corrected)]
    return StrideTwoReport(lhs, printed, corrected, matches, tolerance)
