"""Exact integer and rational arithmetic used by every closed form.

``Rational`` is an alias for :class:`fractions.Fraction`: arbitrary
precision, always reduced (gcd 1), denominator always positive. All
coefficient algebra in this package runs on it; floats never enter.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction


def factorial(n: int) -> int:
    """n! for n >= 0, with factorial(0) == 1."""
    if n < 0:
        raise ValueError("factorial requires n >= 0")
    return math.factorial(n)


def binomial(n: int, i: int) -> int:
    """n choose i, computed exactly. Rejects i outside 0..n."""
    if not 0 <= i <= n:
        raise ValueError(f"binomial requires 0 <= i <= n, got n={n}, i={i}")
    return math.comb(n, i)


def multifactorial(n: int, step: int) -> int:
    """Product n * (n-step) * (n-2*step) * ... over the positive members.

    step=1 is the ordinary factorial, step=2 the double factorial N!!;
    for n <= step the product has the single element n.
    """
    if n < 1:
        raise ValueError("multifactorial requires n >= 1")
    if step < 1:
        raise ValueError("multifactorial requires step >= 1")
    out = 1
    while n > 0:
        out *= n
        n -= step
    return out
