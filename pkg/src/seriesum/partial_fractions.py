"""Exact partial-fraction decomposition of Q(k) / (c * prod (k+a_i)^m_i).

The coefficient A_ij of 1/(k+a_i)^j is the Taylor coefficient of order
m_i - j of g_i(k) = Q(k) / prod_{i' != i} (k+a_i')^m_i' at k = -a_i.
Those Taylor coefficients are computed by exact power-series division
(never by differentiating quotients), so every step is plain polynomial
arithmetic over Fraction and the result is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .exact_arith import binomial, factorial
from .polynomials import Polynomial, expand_factored

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class FactoredRational:
    """A rational function Q(k) / (leading * prod (k + a_i)^m_i).

    Shifts are kept monic: a non-monic input factor g*k + c must be folded
    in as shift c/g with g**multiplicity multiplied onto ``leading``.
    Factors are stored sorted by shift; shifts must be pairwise distinct
    and the convergence condition degree(Q) + 2 <= degree(P) must hold.
    """

    numerator: Polynomial
    leading: Fraction
    factors: tuple[tuple[Fraction, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "leading", Fraction(self.leading))
        norm = tuple(
            sorted((Fraction(a), int(m)) for a, m in self.factors)
        )
        object.__setattr__(self, "factors", norm)
        if self.leading == 0:
            raise ValueError("leading constant must be nonzero")
        if not norm:
            raise ValueError("at least one denominator factor required")
        shifts = [a for a, _ in norm]
        if len(set(shifts)) != len(shifts):
            raise ValueError("denominator shifts must be pairwise distinct")
        if any(m < 1 for _, m in norm):
            raise ValueError("multiplicities must be >= 1")
        if self.numerator.degree + 2 > self.denominator_degree:
            raise ValueError(
                "series diverges: degree(Q) + 2 must not exceed degree(P)"
            )

    @property
    def denominator_degree(self) -> int:
        return sum(m for _, m in self.factors)

    def denominator(self) -> Polynomial:
        return expand_factored(self.leading, self.factors)

    def term(self, k: Scalar) -> Fraction:
        """Exact value Q(k)/P(k); raises ZeroDivisionError at a pole."""
        k = Fraction(k)
        den = self.leading
        for a, m in self.factors:
            den *= (k + a) ** m
        return self.numerator(k) / den

    def poles_hit_from(self, start: int) -> list[Fraction]:
        """Shifts a_i with k + a_i = 0 at some summation index k >= start."""
        return [
            a
            for a, _ in self.factors
            if a.denominator == 1 and -a >= start
        ]


@dataclass(frozen=True)
class PartialFractionDecomposition:
    """Coefficient table: Q/(prod (k+a_i)^m_i) = sum_ij A_ij/(k+a_i)^j.

    For every shift the orders run 1..m_i with zeros stored explicitly.
    ``leading`` is carried through unchanged: the original rational
    function is (1/leading) times the tabulated sum.
    """

    terms: tuple[tuple[Fraction, int, Fraction], ...]
    leading: Fraction = field(default=Fraction(1))

    def __post_init__(self) -> None:
        object.__setattr__(self, "leading", Fraction(self.leading))
        object.__setattr__(
            self, "terms", tuple(sorted((Fraction(a), int(j), Fraction(c)) for a, j, c in self.terms))
        )

    def coefficient(self, shift: Scalar, order: int) -> Fraction:
        shift = Fraction(shift)
        for a, j, c in self.terms:
            if a == shift and j == order:
                return c
        raise KeyError((shift, order))

    @property
    def shifts(self) -> list[Fraction]:
        return sorted({a for a, _, _ in self.terms})

    @property
    def max_order(self) -> int:
        return max(j for _, j, _ in self.terms)

    def multiplicity(self, shift: Scalar) -> int:
        shift = Fraction(shift)
        return max(j for a, j, _ in self.terms if a == shift)

    def simple_pole_sum(self) -> Fraction:
        """Sum of the order-1 coefficients; zero iff the series converges."""
        return sum((c for _, j, c in self.terms if j == 1), Fraction(0))

    def term(self, k: Scalar) -> Fraction:
        """Exact term value (1/leading) * sum A_ij/(k+a_i)^j."""
        k = Fraction(k)
        total = Fraction(0)
        for a, j, c in self.terms:
            if c:
                total += c / (k + a) ** j
        return total / self.leading

    def shifted(self, offset: int) -> "PartialFractionDecomposition":
        """Reindex the summation variable: shifts a_i become a_i + offset."""
        return PartialFractionDecomposition(
            tuple((a + offset, j, c) for a, j, c in self.terms), self.leading
        )


def decompose(f: FactoredRational) -> PartialFractionDecomposition:
    """Exact coefficient table of f's monic part, leading carried through."""
    table: list[tuple[Fraction, int, Fraction]] = []
    for a, m in f.factors:
        # Work in t = k + a.  D(t) collects the other factors, shifted so
        # the expansion point is t = 0; D(0) != 0 because shifts are distinct.
        den = Polynomial.constant(1)
        for b, mb in f.factors:
            if b == a:
                continue
            den = den * Polynomial((b - a, Fraction(1))) ** mb
        num = f.numerator.shifted(-a)
        d0 = den.coefficient(0)
        series: list[Fraction] = []
        for r in range(m):
            acc = num.coefficient(r)
            for s in range(r):
                acc -= series[s] * den.coefficient(r - s)
            series.append(acc / d0)
        # g_i(k)/(k+a)^m = sum_r c_r * t^(r-m), so order j pairs with r = m-j.
        for j in range(1, m + 1):
            table.append((a, j, series[m - j]))
    return PartialFractionDecomposition(tuple(table), f.leading)


def decompose_andreoli(n: int) -> PartialFractionDecomposition:
    """Closed-form table for 1/(k(k+1)...(k+n)): A_i = (-1)^i C(n,i)/n!."""
    if n < 1:
        raise ValueError("n must be >= 1")
    nfact = factorial(n)
    terms = tuple(
        (Fraction(i), 1, Fraction((-1) ** i * binomial(n, i), nfact))
        for i in range(n + 1)
    )
    return PartialFractionDecomposition(terms, Fraction(1))


def recombine(d: PartialFractionDecomposition) -> Polynomial:
    """Clear denominators: the numerator of sum A_ij/(k+a_i)^j over prod (k+a_i)^m_i.

    Inverse check for decompose: recombine(decompose(f)) == f.numerator.
    """
    mults = {a: d.multiplicity(a) for a in d.shifts}
    total = Polynomial()
    for a, j, c in d.terms:
        if c == 0:
            continue
        piece = Polynomial.constant(c)
        for b, mb in mults.items():
            power = mb - j if b == a else mb
            if power:
                piece = piece * Polynomial((b, Fraction(1))) ** power
        total = total + piece
    return total
