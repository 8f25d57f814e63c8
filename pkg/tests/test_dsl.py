from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seriesum import ParseError, Polynomial, parse, pretty

ONE = Polynomial.constant(1)


def shifts_of(spec):
    return [(a, m) for a, m in spec.f.factors]


def test_parse_consecutive_product():
    spec = parse("1/(k*(k+1)*(k+2))")
    assert spec.f.numerator == ONE
    assert spec.f.leading == 1
    assert shifts_of(spec) == [(Fraction(0), 1), (Fraction(1), 1), (Fraction(2), 1)]
    assert spec.start_index == 1


def test_parse_repeated_factor_power():
    spec = parse("1/(k*(k+1)^2)")
    assert shifts_of(spec) == [(Fraction(0), 1), (Fraction(1), 2)]


def test_parse_nonmonic_factors_normalize():
    spec = parse("1/((2*k+1)*(2*k+3))")
    assert spec.f.leading == 4
    assert shifts_of(spec) == [(Fraction(1, 2), 1), (Fraction(3, 2), 1)]


def test_parse_polynomial_numerators():
    spec = parse("(k+1)/(k*(k+1)^2*(k+2))")
    assert spec.f.numerator == Polynomial.of(1, 1)
    spec = parse("(k^2+3*k+2)/(k^2*(k+1)^2)")
    assert spec.f.numerator == Polynomial.of(2, 3, 1)
    spec = parse("1/2/(k*(k+1))")
    assert spec.f.numerator == Polynomial.constant(Fraction(1, 2))
    spec = parse("3/(k*(k+5)^3)")
    assert spec.f.numerator == Polynomial.constant(3)


def test_parse_rational_shift_literals():
    spec = parse("1/((k+1/2)*(k+3/2))")
    assert spec.f.leading == 1
    assert shifts_of(spec) == [(Fraction(1, 2), 1), (Fraction(3, 2), 1)]
    spec = parse("1/((k-1/2)*(k+1/2))")
    assert shifts_of(spec) == [(Fraction(-1, 2), 1), (Fraction(1, 2), 1)]
    spec = parse("1/((1+2*k)*(3+2*k))")
    assert spec.f.leading == 4
    assert shifts_of(spec) == [(Fraction(1, 2), 1), (Fraction(3, 2), 1)]


def test_parse_whitespace_insensitive():
    a = parse("1/(k*(k+1))")
    b = parse(" 1 / ( k * ( k + 1 ) ) ")
    assert a == b


def kinds_of(text, start_index=1):
    with pytest.raises(ParseError) as err:
        parse(text, start_index=start_index)
    return err.value


def test_syntax_errors_carry_offsets():
    err = kinds_of("1/(k")
    assert err.kind == "syntax"
    assert err.byte_offset == 4

    err = kinds_of("1/k")  # denominator must be parenthesized
    assert err.kind == "syntax"
    assert err.byte_offset == 2

    err = kinds_of("")
    assert err.kind == "syntax"

    err = kinds_of("1/(k*(k+1))junk")
    assert err.kind == "syntax"
    assert err.byte_offset == 11


def test_repeated_root_detection():
    err = kinds_of("1/(k*k)")
    assert err.kind == "repeated_root"
    err = kinds_of("1/((2*k+1)*(4*k+2))")  # same root after normalization
    assert err.kind == "repeated_root"


def test_negative_integer_pole_detection():
    err = kinds_of("1/(k*(k-1))")
    assert err.kind == "negative_integer_pole"
    # but summing from k=2 clears the pole
    spec = parse("1/(k*(k-1))", start_index=2)
    assert shifts_of(spec) == [(Fraction(-1), 1), (Fraction(0), 1)]
    err = kinds_of("1/(k*(k-5))", start_index=3)
    assert err.kind == "negative_integer_pole"


def test_divergence_detection():
    err = kinds_of("(k+1)/(k*(k+2))")
    assert err.kind == "divergent"
    err = kinds_of("1/(k)")
    assert err.kind == "divergent"


def test_unsupported_multiplicity():
    err = kinds_of("1/(k^12)")
    assert err.kind == "unsupported"
    spec = parse("1/(k^9)")  # at the cap
    assert shifts_of(spec) == [(Fraction(0), 9)]


def test_zero_denominator_literal_rejected():
    err = kinds_of("1/((k+1/0)*(k+2))")
    assert err.kind == "syntax"


ROUND_TRIP_CORPUS = [
    "1/(k*(k+1))",
    "1/(k*(k+1)*(k+2))",
    "1/(k*(k+1)*(k+2)*(k+3))",
    "1/(k*(k+1)^2)",
    "1/(k^2*(k+1)^2)",
    "1/(k*(k+2))",
    "1/(k*(k+2)*(k+4))",
    "1/(k*(k+3)*(k+6))",
    "1/((k+1)*(k+3))",
    "1/((2*k+1)*(2*k+3))",
    "1/((2*k+1)*(2*k+3)*(2*k+5))",
    "1/((3*k+1)*(3*k+4))",
    "1/((2*k-1)*(2*k+1))",
    "1/((k+1/2)*(k+3/2))",
    "1/((k-1/2)*(k+1/2)*(k+3/2))",
    "1/((k+1/3)*(k+4/3))",
    "1/((2*k+1)^2*(2*k+3))",
    "1/(k^3)",
    "1/((k+5)^2)",
    "1/(k^2)",
    "(k+1)/(k*(k+1)^2*(k+2))",
    "(k+3)/(k*(k+1)*(k+2)*(k+4))",
    "(k^2+1)/(k^2*(k+1)^2)",
    "2/(k*(k+1))",
    "5/2/(k*(k+7))",
    "(2*k+1)/(k^2*(k+1)^2)",
    "1/((4*k+2)*(k+3/2))",
    "1/((2*k+4)*(2*k+6))",
    "3/((2*k+1)*(2*k+5))",
    "(k+1/2)/(k*(k+1)*(k+2)*(k+5))",
]


@pytest.mark.parametrize("text", ROUND_TRIP_CORPUS)
def test_pretty_round_trip(text):
    spec = parse(text)
    rendered = pretty(spec)
    again = parse(rendered)
    assert again == spec, rendered
    # canonical form is a fixed point
    assert pretty(again) == rendered


BASE_INPUTS = ROUND_TRIP_CORPUS[:8]
ALPHABET = "k0123456789+-*/^() "


@settings(max_examples=300)
@given(
    st.sampled_from(BASE_INPUTS),
    st.integers(min_value=0, max_value=40),
    st.sampled_from(ALPHABET),
    st.sampled_from(["insert", "delete", "replace"]),
)
def test_fuzzed_inputs_never_crash(base, pos, ch, op):
    pos = min(pos, len(base) - 1)
    if op == "insert":
        text = base[:pos] + ch + base[pos:]
    elif op == "delete":
        text = base[:pos] + base[pos + 1 :]
    else:
        text = base[:pos] + ch + base[pos + 1 :]
    try:
        spec = parse(text)
    except ParseError as err:
        assert 0 <= err.byte_offset <= len(text.encode("utf-8"))
        assert err.kind in {
            "syntax",
            "repeated_root",
            "negative_integer_pole",
            "divergent",
            "unsupported",
        }
    else:
        assert spec.f.numerator.degree + 2 <= spec.f.denominator_degree


def test_non_ascii_rejected_cleanly():
    err = kinds_of("1/(k*(k+é))")
    assert err.kind == "syntax"
    assert err.byte_offset <= len("1/(k*(k+é))".encode("utf-8"))
