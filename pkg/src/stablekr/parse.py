"""Text grammar for polynomials.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | '+' unary | power
    power  := atom ('^' INT)?
    atom   := NUMBER | NAME | '(' expr ')'

Division is only allowed by nonzero rational constants.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple

from .ring import Poly, SuperRing


class ParseError(ValueError):
    def __init__(self, message: str, position: int, expected: str = ""):
        self.position = position
        self.expected = expected
        detail = f" (expected {expected})" if expected else ""
        super().__init__(f"{message} at position {position}{detail}")


class Token(NamedTuple):
    kind: str
    text: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start, "number, name or operator")
        num, name, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(Token("num", num, start))
        elif name is not None:
            tokens.append(Token("name", name, start))
        else:
            tokens.append(Token("op", "^" if op == "**" else op, start))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: SuperRing):
        self.tokens = tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> None:
        tok = self.take()
        if tok.kind != "op" or tok.text != op:
            raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.pos, repr(op))

    def parse(self) -> Poly:
        result = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos, "operator or end of input")
        return result

    def expr(self) -> Poly:
        acc = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.take().text
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Poly:
        acc = self.unary()
        while self.peek().kind == "op" and self.peek().text in "*/":
            tok = self.take()
            rhs = self.unary()
            if tok.text == "*":
                acc = acc * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by zero", tok.pos)
                if any(any(e) or m for (e, m) in rhs.terms):
                    raise ParseError("division only by constants", tok.pos, "a rational constant")
                acc = acc.scale(Fraction(1) / Fraction(rhs.constant_term()))
        return acc

    def unary(self) -> Poly:
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.take()
            val = self.unary()
            return -val if tok.text == "-" else val
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.take()
            tok = self.take()
            if tok.kind != "num":
                raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.pos, "integer exponent")
            return base ** int(tok.text)
        return base

    def atom(self) -> Poly:
        tok = self.take()
        if tok.kind == "num":
            return self.ring.const(int(tok.text))
        if tok.kind == "name":
            if not self.ring.has(tok.text):
                raise ParseError(f"unknown generator {tok.text!r}", tok.pos, "a generator name")
            return self.ring.gen(tok.text)
        if tok.kind == "op" and tok.text == "(":
            val = self.expr()
            self.expect_op(")")
            return val
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.pos, "number, name or '('")


def parse_poly(text: str, ring: SuperRing) -> Poly:
    return _Parser(text, ring).parse()
