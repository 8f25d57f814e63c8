"""Dense univariate polynomials over exact rationals.

Coefficients are stored low degree first with no trailing zeros; the zero
polynomial is the empty tuple and reports degree ``NEG_INF`` so degree
comparisons like ``degree(q) + 2 <= degree(p)`` need no special casing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

NEG_INF = float("-inf")

Scalar = Union[int, Fraction]


def _coerce(values: Iterable[Scalar]) -> tuple[Fraction, ...]:
    coeffs = [Fraction(v) for v in values]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Polynomial:
    """Immutable polynomial in one variable over Fraction."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _coerce(self.coeffs))

    @staticmethod
    def of(*coeffs: Scalar) -> "Polynomial":
        """Build from coefficients, lowest power first: of(1, 0, 3) = 1 + 3k^2."""
        return Polynomial(tuple(coeffs))

    @staticmethod
    def constant(c: Scalar) -> "Polynomial":
        return Polynomial((Fraction(c),))

    @staticmethod
    def x() -> "Polynomial":
        return Polynomial((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        """Exact Horner evaluation."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(tuple(out))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(tuple(c * other for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(c * i for i, c in enumerate(self.coeffs) if i > 0))

    def __divmod__(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Exact division with remainder; degree(remainder) < degree(divisor)."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero polynomial")
        quotient = [Fraction(0)] * max(0, len(self.coeffs) - len(divisor.coeffs) + 1)
        rem = list(self.coeffs)
        dlead = divisor.leading_coefficient
        dlen = len(divisor.coeffs)
        while len(rem) >= dlen:
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) < dlen:
                break
            shift = len(rem) - dlen
            factor = rem[-1] / dlead
            quotient[shift] = factor
            for i, c in enumerate(divisor.coeffs):
                rem[shift + i] -= factor * c
            rem.pop()
        return Polynomial(tuple(quotient)), Polynomial(tuple(rem))

    def shifted(self, c: Scalar) -> "Polynomial":
        """p(k + c), expanded exactly (Horner on the shifted variable)."""
        c = Fraction(c)
        shift = Polynomial((c, Fraction(1)))
        acc = Polynomial()
        for coef in reversed(self.coeffs):
            acc = acc * shift + Polynomial.constant(coef)
        return acc

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*k" if c != 1 else "k")
            else:
                parts.append(f"{c}*k^{i}" if c != 1 else f"k^{i}")
        return " + ".join(parts).replace("+ -", "- ")


def degree(p: Polynomial) -> int | float:
    return p.degree


def expand_factored(
    leading: Scalar, factors: Iterable[tuple[Scalar, int]]
) -> Polynomial:
    """Expand leading * prod (k + a_i)^(m_i) into dense coefficients."""
    factors = list(factors)
    if not factors:
        raise ValueError("expand_factored requires at least one factor")
    out = Polynomial.constant(leading)
    for shift, mult in factors:
        if mult < 1:
            raise ValueError("factor multiplicity must be >= 1")
        out = out * Polynomial((Fraction(shift), Fraction(1))) ** mult
    return out
