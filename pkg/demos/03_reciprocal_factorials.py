"""Series summed over the *number* of factors.

Fixing the start x and letting the product grow gives
F(x; l) = sum_{n>=0} 1/(x(x+l)(x+2l)...(x+nl)), a smooth function of x
that generalizes e: F(1; 1) = e - 1. Two numeric representations keep
each other honest here: e^(1/l) * integral_0^1 u^(x-1) e^(-u^l/l) du and
an alternating series with a Leibniz remainder bound. The evaluator runs
both and refuses to answer if they disagree.
"""

import math

from seriesum import ConclusionOverN, conclusion_eval, over_n_eval, over_n_integral


def main():
    print("F(x; l) by alternating series vs integral representation")
    print(f"{'x':>5} {'l':>3} {'alternating':>20} {'integral':>20} {'gap':>10}")
    for stride in (1, 2, 3):
        for x in (0.5, 1.0, 2.0, 3.0):
            alt = over_n_eval(x, stride, 1e-13)
            quad = over_n_integral(x, stride, 1e-13)
            gap = abs(alt.numeric - quad.numeric)
            print(
                f"{x:>5} {stride:>3} {alt.numeric:>20.15f} "
                f"{quad.numeric:>20.15f} {gap:>10.1e}"
            )

    print()
    print("landmarks:")
    print("  F(1; 1) =", over_n_eval(1.0, 1, 1e-13).numeric, " vs e - 1 =", math.e - 1)
    print("  F(2; 1) =", over_n_eval(2.0, 1, 1e-13).numeric, " vs e - 2 =", math.e - 2)

    print()
    print("the two-parameter variant sum_n 1/([a+xb][a+(x+l)b]...):")
    res = conclusion_eval(ConclusionOverN(0, 1, 1.5, 2), 1e-12)
    base = over_n_eval(1.5, 2, 1e-12)
    print("  a=0, b=1 reduces to F(1.5; 2):", res.numeric, "vs", base.numeric)
    res = conclusion_eval(ConclusionOverN(1, 3, 0.5, 2), 1e-12)
    print("  a=1, b=3, x=0.5, l=2       :", res.numeric, "+/-", res.error_bound)


if __name__ == "__main__":
    main()
