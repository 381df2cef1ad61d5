"""Recursive-descent parser for polynomial expressions in x, y, z.

Grammar (whitespace is insignificant):

    expr    = term , { ("+" | "-") , term } ;
    term    = factor , { "*" , factor } ;
    factor  = { "-" } , power ;
    power   = atom , { "^" , natural } ;
    atom    = "x" | "y" | "z" | literal | "(" , expr , ")" ;
    literal = natural , [ "/" , natural ] ;
    natural = digit , { digit } ;

"^" binds tightest and exponents are non-negative integer literals only.
"/" is not a general operator: it may only follow an integer literal, so
"1/2*x^2" is the monomial with coefficient 1/2.  The parsed expression is
expanded and must be homogeneous and nonzero.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PolyParseError
from .fields import QQ
from .poly import HomogPoly, Monomial

_Sparse = dict[Monomial, Fraction]  # possibly inhomogeneous expansion


def _sadd(a: _Sparse, b: _Sparse) -> _Sparse:
    out = dict(a)
    for m, c in b.items():
        s = out.get(m, Fraction(0)) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def _sneg(a: _Sparse) -> _Sparse:
    return {m: -c for m, c in a.items()}


def _smul(a: _Sparse, b: _Sparse) -> _Sparse:
    out: _Sparse = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            mono = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
            s = out.get(mono, Fraction(0)) + c1 * c2
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
    return out


def _spow(a: _Sparse, e: int) -> _Sparse:
    result: _Sparse = {(0, 0, 0): Fraction(1)}
    base = a
    while e:
        if e & 1:
            result = _smul(result, base)
        e >>= 1
        if e:
            base = _smul(base, base)
    return result


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise PolyParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def expect(self, ch: str):
        got = self.peek()
        if got != ch:
            self.error(f"expected {ch!r}, found {got!r}" if got else f"expected {ch!r}, found end of input")
        self.pos += 1

    def natural(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def expr(self) -> _Sparse:
        value = self.term()
        while True:
            op = self.peek()
            if op == "+":
                self.pos += 1
                value = _sadd(value, self.term())
            elif op == "-":
                self.pos += 1
                value = _sadd(value, _sneg(self.term()))
            else:
                return value

    def term(self) -> _Sparse:
        value = self.factor()
        while self.peek() == "*":
            self.pos += 1
            value = _smul(value, self.factor())
        return value

    def factor(self) -> _Sparse:
        negate = False
        while self.peek() == "-":
            self.pos += 1
            negate = not negate
        value = self.power()
        return _sneg(value) if negate else value

    def power(self) -> _Sparse:
        value = self.atom()
        while self.peek() == "^":
            self.pos += 1
            value = _spow(value, self.natural())
        return value

    def atom(self) -> _Sparse:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            self.expect(")")
            return value
        if ch and ch in "xyz":
            self.pos += 1
            mono = {"x": (1, 0, 0), "y": (0, 1, 0), "z": (0, 0, 1)}[ch]
            return {mono: Fraction(1)}
        if ch.isdigit():
            num = self.natural()
            if self.peek() == "/":
                self.pos += 1
                den = self.natural()
                if den == 0:
                    self.error("zero denominator")
                return {(0, 0, 0): Fraction(num, den)}
            return {(0, 0, 0): Fraction(num)}
        if ch == "":
            self.error("unexpected end of input")
        self.error(f"unexpected character {ch!r}")


def parse_poly(text: str) -> HomogPoly:
    """Parse and expand `text` into a homogeneous polynomial over Q.

    Raises PolyParseError (with a character position) for syntax errors,
    and for expansions that are zero or not homogeneous; the latter names
    two offending terms of differing degree.
    """
    parser = _Parser(text)
    value = parser.expr()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error(f"unexpected trailing input {text[parser.pos]!r}")
    if not value:
        raise PolyParseError("expression expands to the zero polynomial")
    degrees = {sum(m) for m in value}
    if len(degrees) > 1:
        by_degree = sorted(value, key=sum)
        low, high = by_degree[0], by_degree[-1]
        raise PolyParseError(
            "polynomial is not homogeneous: term "
            f"{_mono_text(low)} has degree {sum(low)} but term "
            f"{_mono_text(high)} has degree {sum(high)}"
        )
    return HomogPoly(QQ, degrees.pop(), value)


def _mono_text(mono: Monomial) -> str:
    parts = [f"{v}^{e}" if e > 1 else v for v, e in zip("xyz", mono) if e]
    return "*".join(parts) if parts else "1"
