"""Evaluation routes for convergent series of rational terms.

A series sum_{k>=start} Q(k)/P(k) with P in monic factored form can be
evaluated four independent ways:

* exact closed forms for the product families (consecutive shifts,
  arithmetic-progression shifts, stride-l shifts);
* a polygamma formula applied to the partial-fraction table, using
  sum_{k>=1} 1/(k+a)^j = (-1)^j psi^(j-1)(1+a)/(j-1)! for j >= 2 and the
  order-1 coefficients combined through -sum_i A_i1 psi(1+a_i), which
  converges because sum_i A_i1 = 0;
* tanh-sinh quadrature of the single combined integrand
  (1/(1-u)) * sum_ij A_ij (-ln u)^(j-1) u^(a_i) / (j-1)!   on (0,1),
  where the order-1 terms are summed before dividing by 1-u so the u->1
  singularity is removable (again because sum_i A_i1 = 0);
* brute-force partial sums with a certified tail bound (see `oracle`).

Shifts at or below -1 are handled by summing a short head of the series
exactly in rational arithmetic and applying the identities to the tail,
whose effective shifts a_i + s are then all safely above -1.

The reciprocal-product families summed over the *number of factors*,
F(x; l) = sum_{n>=0} 1/(x(x+l)...(x+nl)), get two mutually checking
numeric routes: e^(1/l) * integral_0^1 u^(x-1) e^(-u^l / l) du and the
alternating expansion e^(1/l) * sum_m (-1)^m / (l^m m! (x+ml)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import oracle
from .exact_arith import factorial, multifactorial
from .partial_fractions import (
    FactoredRational,
    PartialFractionDecomposition,
    decompose,
)
from .polynomials import Polynomial
from .quadrature import DEFAULT_TOLERANCE, integrate_unit_interval
from .special_functions import (
    MAX_POLYGAMMA_ORDER,
    DomainError,
    digamma,
    polygamma,
)


class EvaluationError(RuntimeError):
    """An evaluation route failed or does not apply to the given series."""


# ---------------------------------------------------------------------------
# series descriptions


@dataclass(frozen=True)
class GeneralRational:
    """sum_{k>=start_index} Q(k)/P(k) for an arbitrary factored term."""

    f: FactoredRational
    start_index: int = 1

    def __post_init__(self) -> None:
        if self.start_index < 1:
            raise ValueError("start_index must be >= 1")
        hit = self.f.poles_hit_from(self.start_index)
        if hit:
            raise ValueError(
                f"term has a pole at summed index k = {-hit[0]}"
            )


@dataclass(frozen=True)
class AndreoliFamily:
    """sum_{k>=1} 1/(k(k+1)...(k+n))."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError("family requires n >= 1")


@dataclass(frozen=True)
class ArithmeticFamily:
    """sum_{k>=1} 1/([a+kb][a+(k+1)b]...[a+(k+n)b])."""

    a: Fraction
    b: Fraction
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.n < 1:
            raise DomainError("family requires n >= 1")
        if self.b <= 0:
            raise DomainError("family requires b > 0")
        if self.a + self.b <= 0:
            raise DomainError("family requires a + b > 0 so every term is positive")


@dataclass(frozen=True)
class StepFamily:
    """sum_{k>=1} 1/(k(k+l)(k+2l)...(k+nl)) with stride l = step."""

    step: int
    n: int

    def __post_init__(self) -> None:
        if self.step < 1:
            raise DomainError("stride must be >= 1")
        if self.n < 1:
            raise DomainError("family requires n >= 1")


@dataclass(frozen=True)
class OverNFamily:
    """F(x; l) = sum_{n>=0} 1/(x(x+l)...(x+nl)), summed over n."""

    x: float
    step: int

    def __post_init__(self) -> None:
        if not self.x > 0:
            raise DomainError("F(x; l) requires x > 0")
        if self.step < 1:
            raise DomainError("F(x; l) requires stride l >= 1")


@dataclass(frozen=True)
class ConclusionOverN:
    """sum_{n>=0} 1/([a+xb][a+(x+l)b]...[a+(x+nl)b]), summed over n."""

    a: Fraction
    b: Fraction
    x: float
    step: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.b <= 0:
            raise DomainError("series requires b > 0 (term ratio must decay)")
        if self.step < 1:
            raise DomainError("stride must be >= 1")


@dataclass(frozen=True)
class ConclusionOverK:
    """sum_{k>=1} 1/([a+kb][a+(k+l)b]...[a+(k+nl)b]), summed over k."""

    a: Fraction
    b: Fraction
    n: int
    step: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.b <= 0:
            raise DomainError("series requires b > 0")
        if self.n < 1:
            raise DomainError("series diverges for n = 0 (single factor)")
        if self.step < 1:
            raise DomainError("stride must be >= 1")


SeriesSpec = Union[
    GeneralRational,
    AndreoliFamily,
    ArithmeticFamily,
    StepFamily,
    OverNFamily,
    ConclusionOverN,
    ConclusionOverK,
]


@dataclass(frozen=True)
class EvalResult:
    """A numeric value with a certified absolute bound, plus the exact
    rational value when a closed form produced it."""

    numeric: float
    error_bound: float
    method: str
    exact: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.error_bound < 0:
            raise ValueError("error_bound must be >= 0")
        if self.exact is not None and not isinstance(self.exact, Fraction):
            object.__setattr__(self, "exact", Fraction(self.exact))
        if self.exact is not None:
            if abs(self.numeric - float(self.exact)) > self.error_bound:
                raise ValueError("numeric is not within error_bound of exact")


def exact_result(value: Fraction, method: str = "closed_form") -> EvalResult:
    numeric = float(value)
    bound = math.ldexp(abs(numeric), -52) + 5e-324
    return EvalResult(numeric, bound, method, exact=value)


# ---------------------------------------------------------------------------
# exact closed forms


def closed_form_andreoli(n: int) -> Fraction:
    """1/(n * n!) for the consecutive-factor family."""
    if n < 1:
        raise DomainError("family requires n >= 1")
    return Fraction(1, n * factorial(n))


def closed_form_arithmetic(a: Fraction, b: Fraction, n: int) -> Fraction:
    """(1/(n b)) * prod_{i=1..n} 1/(a + i b)."""
    a, b = Fraction(a), Fraction(b)
    if n < 1:
        raise DomainError("family requires n >= 1")
    if b <= 0:
        raise DomainError("family requires b > 0")
    if a + b <= 0:
        raise DomainError("family requires a + b > 0 so every term is positive")
    out = Fraction(1, n) / b
    for i in range(1, n + 1):
        fac = a + i * b
        if fac == 0:
            raise DomainError(f"zero factor a + {i}b")
        out /= fac
    return out


def closed_form_step(step: int, n: int) -> Fraction:
    """(1/(l n)) * sum_{m=0..l-1} 1/(l n - m)!^l, multifactorial stride l."""
    if step < 1:
        raise DomainError("stride must be >= 1")
    if n < 1:
        raise DomainError("family requires n >= 1")
    total = sum(
        (Fraction(1, multifactorial(step * n - m, step)) for m in range(step)),
        Fraction(0),
    )
    return Fraction(1, step * n) * total


# ---------------------------------------------------------------------------
# family plumbing


def family_rational(spec: SeriesSpec) -> tuple[FactoredRational, int]:
    """The (FactoredRational, start_index) pair describing a k-summed spec."""
    one = Polynomial.constant(1)
    if isinstance(spec, GeneralRational):
        return spec.f, spec.start_index
    if isinstance(spec, AndreoliFamily):
        factors = tuple((Fraction(i), 1) for i in range(spec.n + 1))
        return FactoredRational(one, Fraction(1), factors), 1
    if isinstance(spec, StepFamily):
        factors = tuple((Fraction(j * spec.step), 1) for j in range(spec.n + 1))
        return FactoredRational(one, Fraction(1), factors), 1
    if isinstance(spec, ArithmeticFamily):
        if spec.b <= 0:
            raise DomainError("family requires b > 0")
        factors = tuple((spec.a / spec.b + i, 1) for i in range(spec.n + 1))
        return FactoredRational(one, spec.b ** (spec.n + 1), factors), 1
    if isinstance(spec, ConclusionOverK):
        factors = tuple(
            (spec.a / spec.b + j * spec.step, 1) for j in range(spec.n + 1)
        )
        f = FactoredRational(one, spec.b ** (spec.n + 1), factors)
        hit = f.poles_hit_from(1)
        if hit:
            raise DomainError(f"zero denominator factor at summed index k = {-hit[0]}")
        return f, 1
    raise EvaluationError(f"not a k-indexed rational series: {spec!r}")


def match_closed_form(f: FactoredRational, start_index: int = 1) -> Optional[Fraction]:
    """Exact value when the factored term fits a product family, else None.

    Recognized shape: constant numerator, all multiplicities 1, at least
    two factors, shifts in arithmetic progression. A gap of 1 maps onto
    the arithmetic family; an integer gap with integer smallest shift maps
    onto the stride family after splitting off an exact head.
    """
    if f.numerator.degree > 0:
        return None
    scale = f.numerator.coefficient(0) / f.leading
    if scale == 0:
        return Fraction(0)
    if any(m != 1 for _, m in f.factors):
        return None
    shifts = [a + (start_index - 1) for a, _ in f.factors]
    if len(shifts) < 2:
        return None
    gaps = {shifts[i + 1] - shifts[i] for i in range(len(shifts) - 1)}
    if len(gaps) != 1:
        return None
    gap = gaps.pop()
    n = len(shifts) - 1
    first = shifts[0]

    if gap == 1:
        # Shift the index until the arithmetic-family positivity condition
        # first + s > -1 holds, summing the skipped terms exactly.
        s = 0
        while first + s <= -1:
            s += 1
        head = Fraction(0)
        for k in range(1, s + 1):
            prod = Fraction(1)
            for e in shifts:
                prod *= k + e
            head += 1 / prod
        return scale * (head + closed_form_arithmetic(first + s, Fraction(1), n))

    if gap.denominator == 1 and gap >= 2 and first.denominator == 1 and first >= 0:
        stride = int(gap)
        offset = int(first)
        head = Fraction(0)
        for k in range(1, offset + 1):
            prod = Fraction(1)
            for j in range(n + 1):
                prod *= k + j * stride
            head += 1 / prod
        return scale * (closed_form_step(stride, n) - head)

    return None


def _exact_head(d: PartialFractionDecomposition, start: int, stop: int) -> Fraction:
    total = Fraction(0)
    for k in range(start, stop + 1):
        total += d.term(k)
    return total


def _offset_for(d: PartialFractionDecomposition, start_index: int, margin: Fraction) -> int:
    """Smallest s >= start_index-1 making every shift a_i + s > margin."""
    s = start_index - 1
    for a in d.shifts:
        need = margin - a  # require s > need
        candidate = need.numerator // need.denominator + 1
        if candidate > s:
            s = candidate
    return s


def _check_summable(d: PartialFractionDecomposition) -> None:
    if d.simple_pole_sum() != 0:
        raise DomainError(
            "order-1 coefficients do not sum to zero: series diverges"
        )
    if d.max_order - 1 > MAX_POLYGAMMA_ORDER:
        raise DomainError(
            f"multiplicity {d.max_order} exceeds polygamma order cap "
            f"{MAX_POLYGAMMA_ORDER + 1}"
        )


def closed_form_polygamma(
    d: PartialFractionDecomposition, start_index: int = 1
) -> EvalResult:
    """Series value through psi/psi^(m) applied to the coefficient table."""
    _check_summable(d)
    s = _offset_for(d, start_index, Fraction(-1))
    head = _exact_head(d, start_index, s)

    tail = 0.0
    abs_scale = abs(float(head))
    lead = float(d.leading)
    simple = 0.0
    for a, j, c in d.terms:
        if c == 0:
            continue
        arg = float(1 + a + s)
        if j == 1:
            contrib = -float(c) * digamma(arg)
            simple += contrib
            abs_scale += abs(contrib / lead)
        else:
            sign = 1.0 if j % 2 == 0 else -1.0
            contrib = sign * float(c) * polygamma(j - 1, arg) / factorial(j - 1)
            tail += contrib
            abs_scale += abs(contrib / lead)
    numeric = float(head) + (tail + simple) / lead
    bound = 1e-11 * abs_scale + 1e-15 * (1.0 + abs(numeric))
    return EvalResult(numeric, bound, "polygamma")


def integral_eval(
    d: PartialFractionDecomposition,
    start_index: int = 1,
    tolerance: float = DEFAULT_TOLERANCE,
) -> EvalResult:
    """Series value by quadrature of the combined integral representation."""
    _check_summable(d)
    # Margin -1/2 (not the mathematically sufficient -1): exponents very
    # close to -1 put integrand mass below the smallest positive double.
    s = _offset_for(d, start_index, Fraction(-1, 2))
    head = _exact_head(d, start_index, s)

    lead = float(d.leading)
    simple: list[tuple[float, float]] = []  # (alpha, A)
    higher: list[tuple[float, int, float]] = []  # (alpha, j, A/(j-1)!)
    for a, j, c in d.terms:
        if c == 0:
            continue
        alpha = float(a + s)
        if j == 1:
            simple.append((alpha, float(c)))
        else:
            higher.append((alpha, j, float(c) / factorial(j - 1)))

    def integrand(u: float) -> float:
        if u <= 0.5:
            lnu = math.log(u)
            omu = 1.0 - u
        else:
            omu = 1.0 - u  # exact: u and 1 are within a factor of two
            lnu = math.log1p(-omu)
        acc = 0.0
        # order-1 block: sum A * (u^alpha - 1); the -1's cancel since the
        # coefficients sum to zero, and expm1 keeps u -> 1 well conditioned
        for alpha, c in simple:
            acc += c * math.expm1(alpha * lnu)
        neglog = -lnu
        for alpha, j, c in higher:
            acc += c * neglog ** (j - 1) * math.exp(alpha * lnu)
        return acc / omu

    quad = integrate_unit_interval(integrand, tolerance)
    if not quad.converged:
        raise EvaluationError(
            f"quadrature did not converge (best value {quad.value!r}, "
            f"estimate {quad.error_estimate:.3e})"
        )
    numeric = float(head) + quad.value / lead
    bound = quad.error_estimate / abs(lead) + 1e-15 * (1.0 + abs(numeric))
    return EvalResult(numeric, bound, "integral")


# ---------------------------------------------------------------------------
# families summed over the number of factors


def over_n_integral(x: float, step: int = 1, tolerance: float = DEFAULT_TOLERANCE) -> EvalResult:
    """F(x; l) by quadrature of e^(1/l) * integral u^(x-1) e^(-u^l/l) du."""
    _check_over_n_args(x, step)
    pref = math.exp(1.0 / step)

    def integrand(u: float) -> float:
        return u ** (x - 1.0) * math.exp(-(u**step) / step)

    quad = integrate_unit_interval(integrand, tolerance)
    if not quad.converged:
        raise EvaluationError("quadrature did not converge for F(x; l)")
    return EvalResult(
        pref * quad.value,
        pref * quad.error_estimate + 1e-16 * (1.0 + pref * abs(quad.value)),
        "integral",
    )


def over_n_eval(x: float, step: int = 1, tolerance: float = DEFAULT_TOLERANCE) -> EvalResult:
    """F(x; l) by the alternating expansion, cross-checked against the
    integral representation; disagreement raises EvaluationError."""
    _check_over_n_args(x, step)
    pref = math.exp(1.0 / step)
    total = 0.0
    coef = 1.0  # 1/(l^m m!)
    m = 0
    while True:
        term = coef / (x + m * step)
        total += term if m % 2 == 0 else -term
        m += 1
        coef /= step * m
        nxt = coef / (x + m * step)
        if pref * nxt < tolerance / 4 or m >= 500:
            break
    value = pref * total
    # Leibniz: the truncation error is at most the first omitted term.
    bound = pref * nxt + 4e-16 * (1.0 + abs(value)) * m

    integral = over_n_integral(x, step, tolerance)
    slack = bound + integral.error_bound + 1e-13 * (1.0 + abs(value))
    if abs(value - integral.numeric) > slack:
        raise EvaluationError(
            "alternating-series and integral representations disagree: "
            f"{value!r} vs {integral.numeric!r}"
        )
    return EvalResult(value, bound, "alternating_series")


def _check_over_n_args(x: float, step: int) -> None:
    if not x > 0:
        raise DomainError("F(x; l) requires x > 0")
    if step < 1:
        raise DomainError("F(x; l) requires stride l >= 1")


def conclusion_eval(
    spec: Union[ConclusionOverN, ConclusionOverK],
    tolerance: float = DEFAULT_TOLERANCE,
) -> EvalResult:
    """Numeric-only evaluation of the two-parameter product families."""
    if isinstance(spec, ConclusionOverN):
        return _conclusion_over_n(spec, tolerance)
    if isinstance(spec, ConclusionOverK):
        return _conclusion_over_k(spec, tolerance)
    raise EvaluationError(f"not a two-parameter product family: {spec!r}")


def _conclusion_over_n(spec: ConclusionOverN, tolerance: float) -> EvalResult:
    if spec.b <= 0:
        raise DomainError("series requires b > 0 (term ratio must decay)")
    if spec.step < 1:
        raise DomainError("stride must be >= 1")
    a, b = float(spec.a), float(spec.b)

    def factor(j: int) -> float:
        val = a + (spec.x + j * spec.step) * b
        if val == 0.0:
            raise DomainError(f"zero denominator factor at n = {j}")
        return val

    term = 1.0 / factor(0)
    total = term
    j = 0
    while True:
        j += 1
        if j > 100_000:
            raise EvaluationError("term ratio is not decaying")
        term /= factor(j)
        total += term
        nxt = factor(j + 1)
        if nxt > 2.0:
            ratio = 1.0 / nxt
            geom = abs(term) * ratio / (1.0 - ratio)
            if geom < tolerance / 2:
                break
    bound = geom + 4e-16 * (1.0 + abs(total)) * j
    return EvalResult(total, bound, "oracle")


def _conclusion_over_k(spec: ConclusionOverK, tolerance: float) -> EvalResult:
    f, start = family_rational(spec)
    return _oracle_route(f, start, tolerance)


# ---------------------------------------------------------------------------
# oracle-backed route and the dispatcher


_ORACLE_TERM_CAP = 10**6
_EXACT_ORACLE_CAP = 20_000


def _decay_power(f: FactoredRational) -> int:
    qdeg = f.numerator.degree
    return f.denominator_degree - (int(qdeg) if qdeg >= 0 else 0)


def _cutoff_for(f: FactoredRational, target: float) -> int:
    """Cutoff K whose tail bound is <= target, capped at the term budget."""
    probe = oracle.tail_bound(f, 64)
    p = _decay_power(f)
    c = probe.bound * (p - 1) * Fraction(probe.cutoff) ** (p - 1)
    need = (c / ((p - 1) * Fraction(target))) ** Fraction(1, p - 1)
    return max(probe.cutoff, min(_ORACLE_TERM_CAP, math.ceil(need)))


def _oracle_route(f: FactoredRational, start: int, tolerance: float) -> EvalResult:
    K = _cutoff_for(f, max(tolerance, 1e-14))
    tb = oracle.tail_bound(f, K)
    if tb.cutoff <= _EXACT_ORACLE_CAP:
        value = oracle.partial_sum(f, start, tb.cutoff)
        numeric = float(value)
        bound = float(tb.bound) + math.ldexp(abs(numeric), -52) + 5e-324
    else:
        numeric = oracle.partial_sum_float(f, start, tb.cutoff)
        bound = float(tb.bound) + 1e-15 * (1.0 + abs(numeric))
    return EvalResult(numeric, bound, "oracle")


METHODS = ("auto", "closed", "polygamma", "integral", "oracle")


def evaluate(
    spec: SeriesSpec,
    method: str = "auto",
    tolerance: float = DEFAULT_TOLERANCE,
) -> EvalResult:
    """Evaluate a series by the requested route.

    auto prefers an exact closed form when the series fits a product
    family, falls back to the polygamma route, and sanity-checks the
    result against a floating-point partial sum when that costs at most
    10^6 term evaluations.
    """
    if method not in METHODS:
        raise EvaluationError(f"unknown method {method!r}; expected one of {METHODS}")

    if isinstance(spec, OverNFamily):
        if method in ("auto", "polygamma", "closed"):
            if method != "auto":
                raise EvaluationError(
                    f"method {method!r} does not apply to a series summed over n"
                )
            return over_n_eval(spec.x, spec.step, tolerance)
        if method == "integral":
            return over_n_integral(spec.x, spec.step, tolerance)
        return _conclusion_over_n(
            ConclusionOverN(Fraction(0), Fraction(1), spec.x, spec.step), tolerance
        )

    if isinstance(spec, ConclusionOverN):
        if method in ("closed", "polygamma", "integral"):
            raise EvaluationError(
                f"method {method!r} does not apply to a series summed over n"
            )
        return _conclusion_over_n(spec, tolerance)

    # Everything else is a k-indexed rational series.
    f, start = family_rational(spec)
    if f.numerator.is_zero:
        return exact_result(Fraction(0))

    if method == "oracle":
        return _oracle_route(f, start, tolerance)

    exact = _family_value(spec, f, start)
    if method == "closed":
        if exact is None:
            raise EvaluationError("no closed-form family matches this series")
        return exact_result(exact)

    if method == "auto" and exact is not None:
        result = exact_result(exact)
    elif method in ("auto", "polygamma"):
        result = closed_form_polygamma(decompose(f), start)
    else:
        result = integral_eval(decompose(f), start, tolerance)

    if method == "auto":
        _crosscheck_against_oracle(f, start, result, tolerance)
    return result


def _family_value(
    spec: SeriesSpec, f: FactoredRational, start: int
) -> Optional[Fraction]:
    if isinstance(spec, AndreoliFamily):
        return closed_form_andreoli(spec.n)
    if isinstance(spec, ArithmeticFamily):
        return closed_form_arithmetic(spec.a, spec.b, spec.n)
    if isinstance(spec, StepFamily):
        return closed_form_step(spec.step, spec.n)
    return match_closed_form(f, start)


def _crosscheck_against_oracle(
    f: FactoredRational, start: int, result: EvalResult, tolerance: float
) -> None:
    K = _cutoff_for(f, max(1e-6, 100.0 * tolerance))
    tb = oracle.tail_bound(f, K)
    approx = oracle.partial_sum_float(f, start, tb.cutoff)
    slack = float(tb.bound) + result.error_bound + 1e-9 * (1.0 + abs(result.numeric))
    if abs(approx - result.numeric) > slack:
        raise EvaluationError(
            f"route {result.method!r} disagrees with the partial-sum oracle: "
            f"{result.numeric!r} vs {approx!r} (slack {slack:.3e})"
        )
