"""One series, four independent answers.

Any convergent sum of rational terms Q(k)/P(k) decomposes into a table of
coefficients A_ij over the poles of P. That table feeds two analytic
routes (polygamma values, and a single combined integral over (0,1)
evaluated by tanh-sinh quadrature), while exact partial sums with a
certified tail bound give a third, assumption-free route. When a closed
form exists it is the fourth. Watching all of them land on the same
digits is the whole point of the package.
"""

import math
from fractions import Fraction

from seriesum import (
    closed_form_polygamma,
    decompose,
    integral_eval,
    parse,
    partial_sum,
    tail_bound,
)


def show(label, value, bound=None):
    tail = f"   (bound {bound:.2e})" if bound is not None else ""
    print(f"  {label:<28} {value:.15f}{tail}")


def main():
    text = "1/(k*(k+1)^2)"
    spec = parse(text)
    print(f"series: sum of {text} for k >= 1")
    print()

    table = decompose(spec.f)
    print("partial-fraction table (shift, order -> coefficient):")
    for a, j, c in table.terms:
        print(f"  A[{a}, {j}] = {c}")
    print("order-1 coefficients sum to", table.simple_pole_sum(), "(must be 0)")
    print()

    expected = 2.0 - math.pi**2 / 6.0
    print("routes:")
    show("reference 2 - pi^2/6", expected)

    poly = closed_form_polygamma(table)
    show("polygamma route", poly.numeric, poly.error_bound)

    quad = integral_eval(table)
    show("integral route", quad.numeric, quad.error_bound)

    tb = tail_bound(spec.f, 4000)
    sums = partial_sum(spec.f, 1, tb.cutoff)
    show("partial sum + tail bound", float(sums), float(tb.bound))
    print()

    print("the tail certificate is exact arithmetic: the sum through",
          tb.cutoff, "terms is")
    print(" ", Fraction(sums).numerator, "/", Fraction(sums).denominator)


if __name__ == "__main__":
    main()
