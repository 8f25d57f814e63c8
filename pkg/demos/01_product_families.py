"""Closed forms for the reciprocal-product families.

Three families of series have exact rational values:

  * consecutive factors   sum_k 1/(k(k+1)...(k+n))          = 1/(n n!)
  * arithmetic factors    sum_k 1/([a+kb]...[a+(k+n)b])     = (1/(n b)) prod 1/(a+ib)
  * stride-l factors      sum_k 1/(k(k+l)...(k+nl))         = (1/(l n)) sum_m 1/(ln-m)!^l

where !^l is the multifactorial (product down an arithmetic progression
of stride l). This script prints each closed form next to a brute-force
partial sum so you can watch the sums converge onto the exact values.
"""

from fractions import Fraction

from seriesum import (
    closed_form_andreoli,
    closed_form_arithmetic,
    closed_form_step,
    multifactorial,
)


def brute_force(term, K):
    return sum(term(k) for k in range(1, K + 1))


def main():
    print("=== consecutive factors: sum 1/(k(k+1)...(k+n)) ===")
    for n in range(1, 7):
        exact = closed_form_andreoli(n)
        approx = brute_force(lambda k: _consecutive(k, n), 2000)
        print(f"  n={n}:  exact {str(exact):>10}   partial sum {float(approx):.12f}")

    print()
    print("=== arithmetic factors: a=1, b=2 gives sum 1/((2k+1)(2k+3)...) ===")
    for n in range(1, 5):
        exact = closed_form_arithmetic(Fraction(1), Fraction(2), n)
        approx = brute_force(lambda k: _arithmetic(k, Fraction(1), Fraction(2), n), 2000)
        print(f"  n={n}:  exact {str(exact):>10}   partial sum {float(approx):.12f}")

    print()
    print("=== stride-l factors: sum 1/(k(k+l)...(k+nl)) ===")
    for stride in (2, 3):
        for n in (1, 2, 3):
            exact = closed_form_step(stride, n)
            approx = brute_force(lambda k: _stride(k, stride, n), 4000)
            print(
                f"  l={stride} n={n}:  exact {str(exact):>8} "
                f"  partial sum {float(approx):.12f}"
            )

    print()
    print("=== the multifactorial behind the stride family ===")
    print("  6!^3 = 3*6        =", multifactorial(6, 3))
    print("  8!^2 = 2*4*6*8    =", multifactorial(8, 2))
    print("  5!^1 = 5!         =", multifactorial(5, 1))


def _consecutive(k, n):
    den = 1
    for j in range(n + 1):
        den *= k + j
    return Fraction(1, den)


def _arithmetic(k, a, b, n):
    den = Fraction(1)
    for i in range(n + 1):
        den *= a + (k + i) * b
    return 1 / den


def _stride(k, stride, n):
    den = 1
    for j in range(n + 1):
        den *= k + j * stride
    return Fraction(1, den)


if __name__ == "__main__":
    main()
