"""The cross-validation battery behind `seriesum verify --suite paper`.

Each check function returns granular items so the CLI can print one
PASS/FAIL line per fact. The same items back the acceptance test module,
so the suite here is the single source of truth for what "the build
reproduces every published value" means. Randomized checks use fixed
seeds: a verification suite that flickers is worse than none.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import oracle
from .exact_arith import factorial, multifactorial
from .partial_fractions import (
    FactoredRational,
    decompose,
    decompose_andreoli,
    recombine,
)
from .polynomials import Polynomial
from .quadrature import integrate_unit_interval
from .series_engine import (
    AndreoliFamily,
    ArithmeticFamily,
    ConclusionOverK,
    ConclusionOverN,
    StepFamily,
    closed_form_andreoli,
    closed_form_arithmetic,
    closed_form_polygamma,
    closed_form_step,
    conclusion_eval,
    family_rational,
    integral_eval,
    over_n_eval,
    over_n_integral,
)
from .special_functions import beta, gamma, polygamma


@dataclass
class CheckItem:
    name: str
    expected: str
    got: str
    tolerance: float
    passed: bool


def _item(name: str, expected, got, tolerance: float, passed: bool) -> CheckItem:
    return CheckItem(name, str(expected), str(got), tolerance, passed)


def _close(a: float, b: float, tol: float) -> bool:
    return abs(a - b) <= tol


# -- criterion 1 -------------------------------------------------------------


def check_andreoli_family() -> list[CheckItem]:
    """Closed form 1/(n n!) vs oracle, polygamma, and integral routes."""
    items = []
    for n in range(1, 9):
        expected = Fraction(1, n * factorial(n))
        closed = closed_form_andreoli(n)
        f, start = family_rational(AndreoliFamily(n))
        ps = oracle.partial_sum(f, start, 10**4)
        tb = oracle.tail_bound(f, 10**4)
        d = decompose(f)
        poly_route = closed_form_polygamma(d, start)
        int_route = integral_eval(d, start)
        ok = (
            closed == expected
            and abs(expected - ps) <= tb.bound
            and _close(poly_route.numeric, float(expected), 1e-9)
            and _close(int_route.numeric, float(expected), 1e-9)
        )
        got = (
            f"closed={closed}, |exact-oracle|={float(abs(expected - ps)):.2e}"
            f"<= {float(tb.bound):.2e}, polygamma={poly_route.numeric:.15g}, "
            f"integral={int_route.numeric:.15g}"
        )
        items.append(_item(f"andreoli-n{n}", expected, got, 1e-9, ok))
    return items


# -- criterion 2 -------------------------------------------------------------


def check_andreoli_coefficients() -> list[CheckItem]:
    """decompose on 1/(k(k+1)...(k+n)) equals (-1)^i C(n,i)/n! exactly."""
    items = []
    for n in range(1, 9):
        f, _ = family_rational(AndreoliFamily(n))
        got = decompose(f)
        expected = decompose_andreoli(n)
        ok = got.terms == expected.terms and recombine(got) == f.numerator
        items.append(
            _item(
                f"coefficients-n{n}",
                "closed-form table + round trip",
                "match" if ok else f"{got.terms!r}",
                0.0,
                ok,
            )
        )
    return items


# -- criterion 3 -------------------------------------------------------------


def _random_arithmetic(rng: random.Random) -> ArithmeticFamily:
    a = Fraction(rng.randint(1, 6), rng.randint(1, 4))
    b = Fraction(rng.randint(1, 6), rng.randint(1, 4))
    n = rng.randint(1, 5)
    return ArithmeticFamily(a, b, n)


def check_arithmetic_family() -> list[CheckItem]:
    """Random (a, b, n): closed form vs exact oracle and integral route."""
    rng = random.Random(20608)
    items = []
    for idx in range(20):
        fam = _random_arithmetic(rng)
        expected = closed_form_arithmetic(fam.a, fam.b, fam.n)
        f, start = family_rational(fam)
        ps = oracle.partial_sum(f, start, 2000)
        tb = oracle.tail_bound(f, 2000)
        int_route = integral_eval(decompose(f), start)
        ok = (
            abs(expected - ps) <= tb.bound
            and _close(int_route.numeric, float(expected), 1e-9)
        )
        items.append(
            _item(
                f"arith-{idx:02d}-a{fam.a}-b{fam.b}-n{fam.n}",
                expected,
                f"oracle gap {float(abs(expected - ps)):.2e} <= {float(tb.bound):.2e}, "
                f"integral={int_route.numeric:.15g}",
                1e-9,
                ok,
            )
        )
    # one long exact run: a=1/2, b=1, n=2 summed to a million terms
    fam = ArithmeticFamily(Fraction(1, 2), Fraction(1), 2)
    expected = closed_form_arithmetic(fam.a, fam.b, fam.n)
    f, start = family_rational(fam)
    ps = oracle.partial_sum(f, start, 10**6)
    tb = oracle.tail_bound(f, 10**6)
    ok = abs(expected - ps) <= tb.bound and expected == Fraction(2, 15)
    items.append(
        _item(
            "arith-exact-1e6-terms",
            expected,
            f"partial sum gap {float(abs(expected - ps)):.2e} <= {float(tb.bound):.2e}",
            0.0,
            ok,
        )
    )
    return items


# -- criteria 4 and 5 --------------------------------------------------------


def _double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def check_stride2_family() -> list[CheckItem]:
    """Stride-2 closed form vs double factorials and the oracle."""
    items = []
    for n in range(1, 7):
        closed = closed_form_step(2, n)
        independent = Fraction(1, 2 * n) * (
            Fraction(1, _double_factorial(2 * n - 1))
            + Fraction(1, _double_factorial(2 * n))
        )
        f, start = family_rational(StepFamily(2, n))
        ps = oracle.partial_sum(f, start, 2000)
        tb = oracle.tail_bound(f, 2000)
        ok = closed == independent and abs(closed - ps) <= tb.bound
        if n == 1:
            ok = ok and closed == Fraction(3, 4)
        if n == 2:
            ok = ok and closed == Fraction(11, 96)
        items.append(
            _item(f"stride2-n{n}", independent, closed, 0.0, ok)
        )
    return items


def check_stride_family() -> list[CheckItem]:
    """Stride-l closed form vs the oracle for l = 1..4, n = 1..5."""
    items = []
    for stride in range(1, 5):
        ok = True
        detail = []
        for n in range(1, 6):
            closed = closed_form_step(stride, n)
            f, start = family_rational(StepFamily(stride, n))
            ps = oracle.partial_sum(f, start, 1000)
            tb = oracle.tail_bound(f, 1000)
            good = abs(closed - ps) <= tb.bound
            if stride == 1:
                good = good and closed == closed_form_andreoli(n)
            if stride == 3 and n == 1:
                good = good and closed == Fraction(11, 18)
            ok = ok and good
            detail.append(f"n{n}={closed}")
        items.append(
            _item(
                f"stride{stride}-n1..5",
                "oracle agreement within tail bound",
                "; ".join(detail),
                0.0,
                ok,
            )
        )
    return items


# -- criterion 6 -------------------------------------------------------------


def check_feynman_identity() -> list[CheckItem]:
    """Product-to-integral reduction at real k, orders n = 1..6."""
    items = []
    for k in (0.5, 1.0, 2.0, 7.25):
        worst = 0.0
        ok = True
        for n in range(1, 7):
            res = oracle.feynman_identity_check(k, n, tolerance=1e-10)
            worst = max(worst, res.residual)
            ok = ok and res.passed
        items.append(
            _item(f"feynman-k{k}", "residual <= 1e-10", f"max residual {worst:.2e}", 1e-10, ok)
        )
    return items


# -- criterion 7 -------------------------------------------------------------


def check_over_n_family() -> list[CheckItem]:
    """Alternating vs integral representations of F(x; l), plus F(1;1)=e-1."""
    items = []
    for stride in (1, 2, 3):
        worst = 0.0
        ok = True
        for x in (0.5, 1.0, 1.5, 2.0, 3.0):
            alt = over_n_eval(x, stride, tolerance=1e-13)
            quad = over_n_integral(x, stride, tolerance=1e-13)
            gap = abs(alt.numeric - quad.numeric)
            worst = max(worst, gap)
            ok = ok and gap <= 1e-11
        items.append(
            _item(
                f"overn-stride{stride}",
                "route gap <= 1e-11",
                f"max gap {worst:.2e}",
                1e-11,
                ok,
            )
        )
    val = over_n_eval(1.0, 1, tolerance=1e-13)
    gap = abs(val.numeric - (math.e - 1.0))
    items.append(
        _item("overn-x1-l1-is-e-minus-1", math.e - 1.0, val.numeric, 1e-12, gap <= 1e-12)
    )
    return items


# -- criterion 8 -------------------------------------------------------------


def check_repeated_roots() -> list[CheckItem]:
    """sum 1/(k(k+1)^2) = 2 - pi^2/6 by the polygamma and integral routes."""
    expected = 2.0 - math.pi**2 / 6.0
    f = FactoredRational(
        Polynomial.constant(1),
        Fraction(1),
        ((Fraction(0), 1), (Fraction(1), 2)),
    )
    d = decompose(f)
    poly_route = closed_form_polygamma(d)
    int_route = integral_eval(d)
    return [
        _item(
            "repeated-roots-polygamma",
            expected,
            poly_route.numeric,
            1e-10,
            _close(poly_route.numeric, expected, 1e-10),
        ),
        _item(
            "repeated-roots-integral",
            expected,
            int_route.numeric,
            1e-10,
            _close(int_route.numeric, expected, 1e-10),
        ),
    ]


# -- criterion 9 -------------------------------------------------------------


def random_factored_rational(rng: random.Random) -> FactoredRational:
    """Small random term satisfying every invariant (shared with tests)."""
    count = rng.randint(1, 4)
    shifts: set[Fraction] = set()
    while len(shifts) < count:
        a = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
        if a.denominator == 1 and a <= -1:
            continue
        shifts.add(a)
    mults = [rng.randint(1, 3) for _ in range(count)]
    if sum(mults) < 2:
        mults[0] = 2
    factors = tuple((a, m) for a, m in zip(sorted(shifts), mults))
    total = sum(mults)
    q_deg = rng.randint(0, min(2, total - 2))
    coeffs = [Fraction(rng.randint(-5, 5)) for _ in range(q_deg + 1)]
    if coeffs[-1] == 0:
        coeffs[-1] = Fraction(1)
    leading = Fraction(rng.choice([1, 1, 2, 3]), rng.choice([1, 1, 2]))
    return FactoredRational(Polynomial(tuple(coeffs)), leading, factors)


def check_partial_fraction_properties(instances: int = 200) -> list[CheckItem]:
    """Round trip, pointwise equality, and the order-1 sum rule, randomized."""
    rng = random.Random(1135)
    failures = 0
    for _ in range(instances):
        f = random_factored_rational(rng)
        d = decompose(f)
        if recombine(d) != f.numerator:
            failures += 1
            continue
        if d.simple_pole_sum() != 0:
            failures += 1
            continue
        # pointwise at sample points clear of every pole
        for probe in range(10):
            x = Fraction(rng.randint(1, 60), rng.randint(1, 7)) + Fraction(1, 11)
            if any(x + a == 0 for a, _ in f.factors):
                continue
            direct = f.term(x)
            via_table = d.term(x)
            if direct != via_table:
                failures += 1
                break
    return [
        _item(
            f"partial-fraction-properties-{instances}x",
            "0 failures",
            f"{failures} failures",
            0.0,
            failures == 0,
        )
    ]


def check_quadrature_battery() -> list[CheckItem]:
    """Exactness on monomials and error-estimate soundness on known integrals."""
    monomial_ok = True
    worst = 0.0
    for p in range(13):
        res = integrate_unit_interval(lambda u, p=p: u**p, 1e-13)
        gap = abs(res.value - 1.0 / (p + 1))
        worst = max(worst, gap)
        monomial_ok = monomial_ok and gap <= 1e-13
    items = [
        _item(
            "quadrature-monomials-p0..12",
            "gap <= 1e-13",
            f"max gap {worst:.2e}",
            1e-13,
            monomial_ok,
        )
    ]

    battery: list[tuple[str, Callable[[float], float], float]] = [
        ("const", lambda u: 1.0, 1.0),
        ("line", lambda u: u, 0.5),
        ("inv-sqrt", lambda u: u**-0.5, 2.0),
        ("cube-root", lambda u: u ** (1.0 / 3.0), 0.75),
        ("u^-1/4", lambda u: u**-0.25, 4.0 / 3.0),
        ("log", lambda u: -math.log(u), 1.0),
        ("log-squared", lambda u: math.log(u) ** 2, 2.0),
        ("u-log", lambda u: -u * math.log(u), 0.25),
        ("exp", math.exp, math.e - 1.0),
        ("exp-neg", lambda u: math.exp(-u), 1.0 - 1.0 / math.e),
        ("inv-1p", lambda u: 1.0 / (1.0 + u), math.log(2.0)),
        ("sin-pi", lambda u: math.sin(math.pi * u), 2.0 / math.pi),
        ("cos-pi2", lambda u: math.cos(0.5 * math.pi * u), 2.0 / math.pi),
        ("sqrt", math.sqrt, 2.0 / 3.0),
        ("one-minus-sq", lambda u: (1.0 - u) ** 2, 1.0 / 3.0),
        ("sqrt-log", lambda u: -math.sqrt(u) * math.log(u), 4.0 / 9.0),
        ("inv-sqrt-log", lambda u: -math.log(u) / math.sqrt(u), 4.0),
        ("rational", lambda u: 1.0 / (1.0 + u * u), math.pi / 4.0),
        ("gauss", lambda u: math.exp(-u * u), 0.7468241328124270254),
        ("mixed", lambda u: u**-0.5 * math.exp(-u), 1.4936482656248540507),
    ]
    sound = True
    detail = 0.0
    for name, fn, truth in battery:
        res = integrate_unit_interval(fn, 1e-12)
        true_err = abs(res.value - truth)
        sound = sound and res.converged and true_err <= 10.0 * res.error_estimate
        detail = max(detail, true_err)
    items.append(
        _item(
            "quadrature-error-bound-battery",
            "true error <= 10x estimate on 20 integrands",
            f"max true error {detail:.2e}",
            0.0,
            sound,
        )
    )
    return items


def check_special_function_recurrences() -> list[CheckItem]:
    """Gamma/psi recurrences and the Beta-integral identity on a grid."""
    gamma_ok = True
    for i in range(1, 101):
        x = i / 10.0
        lhs = gamma(x + 1.0)
        rhs = x * gamma(x)
        gamma_ok = gamma_ok and abs(lhs - rhs) <= 1e-12 * abs(rhs)

    psi_ok = True
    for m in range(5):
        for i in range(1, 101):
            x = i / 10.0
            lhs = polygamma(m, x + 1.0) - polygamma(m, x)
            rhs = (-1.0) ** m * math.factorial(m) / x ** (m + 1)
            psi_ok = psi_ok and abs(lhs - rhs) <= 1e-11 * abs(rhs)

    rng = random.Random(8988)
    beta_ok = True
    for _ in range(50):
        p = rng.uniform(1e-3, 20.0)
        q = rng.uniform(1e-3, 20.0)
        beta_ok = beta_ok and abs(beta(p, q) - beta(q, p)) <= 1e-13 * beta(p, q)

    ident_ok = True
    for ell in range(1, 5):
        for m in range(1, 5):
            for n in range(1, 5):
                quad = integrate_unit_interval(
                    lambda u, ell=ell, m=m, n=n: (1.0 - u**ell) ** (n - 1)
                    * u ** (m - 1),
                    1e-12,
                )
                closed = beta(m / ell, n) / ell
                ident_ok = ident_ok and abs(quad.value - closed) <= 1e-10

    return [
        _item("gamma-recurrence", "rel gap <= 1e-12", "ok" if gamma_ok else "fail", 1e-12, gamma_ok),
        _item("polygamma-recurrence", "rel gap <= 1e-11", "ok" if psi_ok else "fail", 1e-11, psi_ok),
        _item("beta-symmetry", "rel gap <= 1e-13", "ok" if beta_ok else "fail", 1e-13, beta_ok),
        _item("beta-integral-identity", "gap <= 1e-10", "ok" if ident_ok else "fail", 1e-10, ident_ok),
    ]


# -- criterion 10 ------------------------------------------------------------


def check_conclusion_reductions() -> list[CheckItem]:
    """Two-parameter families against their simpler reductions."""
    items = []

    red = conclusion_eval(ConclusionOverN(Fraction(0), Fraction(1), 1.5, 2), 1e-12)
    base = over_n_eval(1.5, 2, 1e-12)
    gap = abs(red.numeric - base.numeric)
    slack = red.error_bound + base.error_bound
    items.append(
        _item("conclusion-overn-reduces-to-F", base.numeric, red.numeric, slack, gap <= slack)
    )

    ok = True
    worst = 0.0
    for n in range(1, 5):
        red = conclusion_eval(ConclusionOverK(Fraction(0), Fraction(1), n, 1), 1e-12)
        expected = float(closed_form_andreoli(n))
        gap = abs(red.numeric - expected)
        worst = max(worst, gap)
        ok = ok and gap <= red.error_bound
    items.append(
        _item("conclusion-overk-reduces-to-consecutive", "within bound", f"max gap {worst:.2e}", 0.0, ok)
    )

    red = conclusion_eval(ConclusionOverK(Fraction(1), Fraction(2), 1, 1), 1e-12)
    gap = abs(red.numeric - 1.0 / 6.0)
    items.append(
        _item("conclusion-overk-a1-b2-n1", Fraction(1, 6), red.numeric, red.error_bound, gap <= red.error_bound)
    )
    return items


PAPER_SUITE: list[tuple[str, Callable[[], list[CheckItem]]]] = [
    ("1-consecutive-family-closed-form", check_andreoli_family),
    ("2-coefficient-formula", check_andreoli_coefficients),
    ("3-arithmetic-family", check_arithmetic_family),
    ("4-stride2-family", check_stride2_family),
    ("5-stride-family", check_stride_family),
    ("6-feynman-reduction", check_feynman_identity),
    ("7-over-n-family", check_over_n_family),
    ("8-repeated-roots", check_repeated_roots),
    ("9-property-suites", lambda: check_partial_fraction_properties()
        + check_quadrature_battery()
        + check_special_function_recurrences()),
    ("10-conclusion-reductions", check_conclusion_reductions),
]


def run_paper_suite() -> list[CheckItem]:
    items: list[CheckItem] = []
    for _, fn in PAPER_SUITE:
        items.extend(fn())
    return items
