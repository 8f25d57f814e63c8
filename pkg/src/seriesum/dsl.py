"""Parser for the textual series-term language.

Grammar (whitespace insignificant):

    series   = expr ;
    expr     = numerator "/" "(" product ")" ;
    numerator= "1" | polynomial ;        integer- or rational-coefficient
                                         polynomial in k, with + - * ^ and
                                         non-negative integer exponents
    product  = factor { "*" factor } ;
    factor   = atom [ "^" posint ] ;
    atom     = "k" | "(" linear ")" ;
    linear   = [rational "*"] "k" [("+"|"-") rational]
             | rational "+" [rational "*"] "k" ;

A "/" inside the numerator binds as a rational literal only when followed
by an integer; followed by "(" it is the numerator/denominator split, so
both "1/2" coefficients and the top-level division stay unambiguous.

Non-monic factors g*k + c are normalized at parse time to shift c/g with
g^multiplicity collected into the leading constant. The parse validates
what summation needs: distinct shifts, no pole at any summed index, and
the convergence condition degree(Q) + 2 <= degree(P).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .partial_fractions import FactoredRational
from .polynomials import Polynomial
from .series_engine import GeneralRational

MAX_MULTIPLICITY = 9  # one above the polygamma order cap


class ParseError(Exception):
    """Located parse or validation failure.

    kind is one of: syntax, repeated_root, negative_integer_pole,
    divergent, unsupported.
    """

    def __init__(self, kind: str, char_offset: int, text: str, message: str):
        self.kind = kind
        self.byte_offset = len(text[:char_offset].encode("utf-8"))
        self.message = message
        super().__init__(f"{kind} at byte {self.byte_offset}: {message}")


@dataclass(frozen=True)
class _Token:
    kind: str  # INT NAME PLUS MINUS STAR SLASH CARET LPAREN RPAREN EOF
    pos: int
    text: str

    @property
    def value(self) -> int:
        return int(self.text)


_SINGLE = {
    "+": "PLUS",
    "-": "MINUS",
    "*": "STAR",
    "/": "SLASH",
    "^": "CARET",
    "(": "LPAREN",
    ")": "RPAREN",
}


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", i, text[i:j]))
            i = j
            continue
        if ch == "k":
            tokens.append(_Token("NAME", i, ch))
            i += 1
            continue
        kind = _SINGLE.get(ch)
        if kind is None:
            raise ParseError("syntax", i, text, f"unexpected character {ch!r}")
        tokens.append(_Token(kind, i, ch))
        i += 1
    tokens.append(_Token("EOF", n, ""))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    # -- token helpers ------------------------------------------------

    @property
    def cur(self) -> _Token:
        return self.tokens[self.i]

    def peek(self, ahead: int = 1) -> _Token:
        j = min(self.i + ahead, len(self.tokens) - 1)
        return self.tokens[j]

    def advance(self) -> _Token:
        tok = self.cur
        self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        if self.cur.kind != kind:
            self.fail(f"expected {what}")
        return self.advance()

    def fail(self, message: str, kind: str = "syntax", pos: Optional[int] = None):
        where = self.cur.pos if pos is None else pos
        raise ParseError(kind, where, self.text, message)

    # -- numerator: polynomial expression ------------------------------

    def poly_expr(self) -> Polynomial:
        negate = False
        if self.cur.kind == "MINUS":
            self.advance()
            negate = True
        acc = self.poly_term()
        if negate:
            acc = -acc
        while self.cur.kind in ("PLUS", "MINUS"):
            op = self.advance().kind
            rhs = self.poly_term()
            acc = acc + rhs if op == "PLUS" else acc - rhs
        return acc

    def poly_term(self) -> Polynomial:
        acc = self.poly_factor()
        while self.cur.kind == "STAR":
            self.advance()
            acc = acc * self.poly_factor()
        return acc

    def poly_factor(self) -> Polynomial:
        base = self.poly_atom()
        if self.cur.kind == "CARET":
            self.advance()
            exp = self.expect("INT", "a non-negative integer exponent")
            base = base ** exp.value
        return base

    def poly_atom(self) -> Polynomial:
        tok = self.cur
        if tok.kind == "INT":
            self.advance()
            # "p/q" is a rational literal only when an integer follows the
            # slash; "p/(" is the numerator/denominator split.
            if self.cur.kind == "SLASH" and self.peek().kind == "INT":
                self.advance()
                den = self.advance()
                if den.value == 0:
                    self.fail("zero denominator in rational literal", pos=den.pos)
                return Polynomial.constant(Fraction(tok.value, den.value))
            return Polynomial.constant(tok.value)
        if tok.kind == "NAME":
            self.advance()
            return Polynomial.x()
        if tok.kind == "LPAREN":
            self.advance()
            inner = self.poly_expr()
            self.expect("RPAREN", "')'")
            return inner
        self.fail("expected a number, 'k', or '('")

    # -- denominator: product of linear factors ------------------------

    def rational(self) -> Fraction:
        num = self.expect("INT", "an integer")
        if self.cur.kind == "SLASH" and self.peek().kind == "INT":
            self.advance()
            den = self.advance()
            if den.value == 0:
                self.fail("zero denominator in rational literal", pos=den.pos)
            return Fraction(num.value, den.value)
        return Fraction(num.value)

    def linear(self) -> tuple[Fraction, Fraction]:
        """A first-degree factor, returned as (g, c) meaning g*k + c."""
        if self.cur.kind == "INT":
            first = self.rational()
            if self.cur.kind == "STAR":
                self.advance()
                self.expect("NAME", "'k'")
                g, c = first, Fraction(0)
                if self.cur.kind in ("PLUS", "MINUS"):
                    sign = 1 if self.advance().kind == "PLUS" else -1
                    c = sign * self.rational()
                return g, c
            if self.cur.kind == "PLUS":
                self.advance()
                g = Fraction(1)
                if self.cur.kind == "INT":
                    g = self.rational()
                    self.expect("STAR", "'*'")
                self.expect("NAME", "'k'")
                return g, first
            self.fail("a linear factor needs 'k'")
        if self.cur.kind == "NAME":
            self.advance()
            c = Fraction(0)
            if self.cur.kind in ("PLUS", "MINUS"):
                sign = 1 if self.advance().kind == "PLUS" else -1
                c = sign * self.rational()
            return Fraction(1), c
        self.fail("expected a linear factor in k")

    def denominator_factor(self) -> tuple[Fraction, Fraction, int, int]:
        """One product factor: (g, c, multiplicity, position)."""
        pos = self.cur.pos
        if self.cur.kind == "NAME":
            self.advance()
            g, c = Fraction(1), Fraction(0)
        elif self.cur.kind == "LPAREN":
            self.advance()
            g, c = self.linear()
            self.expect("RPAREN", "')'")
        else:
            self.fail("expected 'k' or '(' in the denominator product")
        mult = 1
        if self.cur.kind == "CARET":
            self.advance()
            exp = self.expect("INT", "a positive integer exponent")
            if exp.value < 1:
                self.fail("exponent must be >= 1", pos=exp.pos)
            if exp.value > MAX_MULTIPLICITY:
                self.fail(
                    f"multiplicity {exp.value} above the supported cap "
                    f"{MAX_MULTIPLICITY}",
                    kind="unsupported",
                    pos=exp.pos,
                )
            mult = exp.value
        return g, c, mult, pos


def parse(text: str, start_index: int = 1) -> GeneralRational:
    """Parse a series term; raises ParseError with a byte offset on failure."""
    if start_index < 1:
        raise ValueError("start_index must be >= 1")
    p = _Parser(text)
    numerator = p.poly_expr()
    p.expect("SLASH", "'/' between numerator and denominator")
    p.expect("LPAREN", "'(' opening the denominator product")
    raw = [p.denominator_factor()]
    while p.cur.kind == "STAR":
        p.advance()
        raw.append(p.denominator_factor())
    p.expect("RPAREN", "')' closing the denominator product")
    if p.cur.kind != "EOF":
        p.fail("trailing input after the series term")

    leading = Fraction(1)
    shifts: dict[Fraction, int] = {}
    factors: list[tuple[Fraction, int]] = []
    for g, c, mult, pos in raw:
        if g == 0:
            raise ParseError("syntax", pos, text, "factor has no k term")
        shift = c / g
        leading *= g**mult
        if shift in shifts:
            raise ParseError(
                "repeated_root",
                pos,
                text,
                f"factor duplicates the root at k = {-shift}",
            )
        shifts[shift] = pos
        if shift.denominator == 1 and -shift >= start_index:
            raise ParseError(
                "negative_integer_pole",
                pos,
                text,
                f"term is undefined at summed index k = {-shift}",
            )
        factors.append((shift, mult))

    total_degree = sum(m for _, m in factors)
    if numerator.degree + 2 > total_degree:
        raise ParseError(
            "divergent",
            0,
            text,
            "degree(numerator) + 2 must not exceed degree(denominator)",
        )
    f = FactoredRational(numerator, leading, tuple(factors))
    return GeneralRational(f, start_index)


def _nth_root(value: Fraction, m: int) -> Optional[Fraction]:
    """Exact m-th root of a positive rational, or None."""
    if value <= 0:
        return None

    def iroot(x: int) -> Optional[int]:
        if x == 1:
            return 1
        r = round(x ** (1.0 / m))
        for cand in (r - 1, r, r + 1):
            if cand > 0 and cand**m == x:
                return cand
        return None

    num = iroot(value.numerator)
    den = iroot(value.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _format_rational(value: Fraction) -> str:
    return str(value)


def _format_linear(g: Fraction, c: Fraction) -> str:
    if g == 1 and c == 0:
        return "k"
    head = "k" if g == 1 else f"{_format_rational(g)}*k"
    if c == 0:
        return f"({head})"
    sign = "+" if c > 0 else "-"
    return f"({head}{sign}{_format_rational(abs(c))})"


def _format_polynomial(poly: Polynomial) -> str:
    if poly.is_zero:
        return "0"
    parts: list[str] = []
    for power in range(int(poly.degree), -1, -1):
        coef = poly.coefficient(power)
        if coef == 0:
            continue
        if power == 0:
            body = _format_rational(abs(coef))
        else:
            var = "k" if power == 1 else f"k^{power}"
            body = var if abs(coef) == 1 else f"{_format_rational(abs(coef))}*{var}"
        if not parts:
            parts.append(body if coef > 0 else f"-{body}")
        else:
            parts.append(f"+{body}" if coef > 0 else f"-{body}")
    return "".join(parts)


def pretty(spec: GeneralRational) -> str:
    """Canonical text for a parsed series term.

    Reattaches the leading constant to the factors (integer-cleared linear
    coefficients, residue folded into a multiplicity-1 factor or split off
    as an exact root) so parsing the output reproduces the same structure.
    """
    f = spec.f
    scaled = [
        [Fraction(a.denominator), Fraction(a.numerator), m] for a, m in f.factors
    ]
    residue = f.leading
    for g, _, m in scaled:
        residue /= g**m

    if residue != 1:
        target = next((fac for fac in scaled if fac[2] == 1), None)
        if target is not None:
            target[0] *= residue
            target[1] *= residue
            residue = Fraction(1)
    if residue != 1:
        for fac in scaled:
            root = _nth_root(residue, fac[2])
            if root is not None:
                fac[0] *= root
                fac[1] *= root
                residue = Fraction(1)
                break

    numerator = f.numerator
    if residue != 1:
        numerator = numerator * (1 / residue)

    num_text = _format_polynomial(numerator)
    if "+" in num_text[1:] or "-" in num_text[1:]:
        num_text = f"({num_text})" if not num_text.startswith("(") else num_text
    factor_text = "*".join(
        _format_linear(g, c) + (f"^{m}" if m > 1 else "")
        for g, c, m in scaled
    )
    return f"{num_text}/({factor_text})"
