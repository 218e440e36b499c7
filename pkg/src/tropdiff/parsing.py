"""Text input for polynomials and rational functions.

Grammar, in decreasing precedence:

    atom  := INT | VAR | '(' expr ')'
    power := atom ['^' INT]
    unary := ('+'|'-')* power
    term  := unary ( ('*'|'/') unary )*
    expr  := term ( ('+'|'-') term )*

Variables are written t1, t2, ...; for convenience t is t1 and u is t2,
matching the pretty-printer for m <= 2.  Exponents are nonnegative integers.
parse_rational accepts arbitrary division; parse_poly only allows dividing by
nonzero constants (so rational literals like 3/4 still work).  When m is not
given it is inferred as the largest variable index seen, with a floor of 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NegativeExponent, PolyParseError, UnknownVariable, ZeroDenominator
from .series import QPoly, RationalFunction


@dataclass
class _Token:
    kind: str  # int, var, op, end
    value: object
    pos: int


def _lex(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            name = text[i:j]
            if name == "t":
                idx = 1
            elif name == "u":
                idx = 2
            elif name.startswith("t") and name[1:].isdigit() and int(name[1:]) >= 1:
                idx = int(name[1:])
            else:
                raise UnknownVariable(f"unknown variable {name!r}", i)
            tokens.append(_Token("var", idx, i))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append(_Token("op", ch, i))
            i += 1
            continue
        raise PolyParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], m: int, poly_mode: bool):
        self.tokens = tokens
        self.i = 0
        self.m = m
        self.poly_mode = poly_mode

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at_op(self, *ops: str) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.value in ops

    def expr(self) -> RationalFunction:
        value = self.term()
        while self.at_op("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op.value == "+" else value - rhs
        return value

    def term(self) -> RationalFunction:
        value = self.unary()
        while self.at_op("*", "/"):
            op = self.take()
            rhs = self.unary()
            if op.value == "*":
                value = value * rhs
                continue
            if self.poly_mode and not (rhs.num.is_constant and rhs.den.is_constant):
                raise PolyParseError(
                    "division by a non-constant is not allowed in a polynomial", op.pos
                )
            if rhs.is_zero:
                raise ZeroDenominator(f"division by zero at position {op.pos}")
            value = value / rhs
        return value

    def unary(self) -> RationalFunction:
        sign = 1
        while self.at_op("+", "-"):
            if self.take().value == "-":
                sign = -sign
        value = self.power()
        return value if sign > 0 else -value

    def power(self) -> RationalFunction:
        value = self.atom()
        if self.at_op("^"):
            self.take()
            tok = self.peek()
            if tok.kind == "op" and tok.value == "-":
                raise NegativeExponent("exponents must be nonnegative", tok.pos)
            if tok.kind != "int":
                raise PolyParseError("exponent must be a nonnegative integer", tok.pos)
            self.take()
            value = value ** tok.value
        return value

    def atom(self) -> RationalFunction:
        tok = self.take()
        if tok.kind == "int":
            return RationalFunction.constant(self.m, Fraction(tok.value))
        if tok.kind == "var":
            if tok.value > self.m:
                raise UnknownVariable(f"variable t{tok.value} exceeds m={self.m}", tok.pos)
            return RationalFunction(QPoly.variable(self.m, tok.value))
        if tok.kind == "op" and tok.value == "(":
            value = self.expr()
            closing = self.take()
            if not (closing.kind == "op" and closing.value == ")"):
                raise PolyParseError("expected closing parenthesis", closing.pos)
            return value
        raise PolyParseError(
            "expected a number, variable or parenthesized expression", tok.pos
        )


def _parse(text: str, m: int | None, poly_mode: bool) -> RationalFunction:
    tokens = _lex(text)
    if tokens[0].kind == "end":
        raise PolyParseError("empty input", 0)
    if m is None:
        seen = max((tok.value for tok in tokens if tok.kind == "var"), default=0)
        m = max(2, seen)
    parser = _Parser(tokens, m, poly_mode)
    value = parser.expr()
    tail = parser.peek()
    if tail.kind != "end":
        raise PolyParseError("unexpected trailing input", tail.pos)
    return value


def parse_rational(text: str, m: int | None = None) -> RationalFunction:
    """Parse a rational function; m is inferred from the variables if absent."""
    return _parse(text, m, poly_mode=False)


def parse_poly(text: str, m: int | None = None) -> QPoly:
    """Parse a polynomial; division is restricted to nonzero constants."""
    return _parse(text, m, poly_mode=True).as_qpoly()
