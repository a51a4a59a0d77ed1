"""Recursive-descent parser for polynomial text.

Grammar (whitespace ignored)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INTEGER)?
    atom   := INTEGER | NAME | "(" expr ")"

Division is only allowed by a nonzero constant, which is how rational
coefficients such as ``3/2*x`` are written.  Implicit multiplication
(``2x``, ``x y``) is a syntax error.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .errors import ParseError
from .ring import Polynomial

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))")


def tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.index = {name: k for k, name in enumerate(names)}
        if len(self.index) != len(names):
            raise ParseError("duplicate variable name")
        self.n = len(names)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ParseError(message, tok[2], self.text)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise self.error(f"unexpected {tok[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op_tok = self.take()
            q = self.unary()
            if op_tok[1] == "*":
                p = p * q
            else:
                if not q.is_constant() or q.is_zero():
                    raise self.error("division only by a nonzero constant", op_tok)
                p = p.scale(Fraction(1) / q.constant_term())
        return p

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            p = self.unary()
            return -p if tok[1] == "-" else p
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                raise self.error("exponent not a nonnegative integer")
            self.take()
            return base ** int(tok[1])
        return base

    def atom(self):
        tok = self.take()
        kind, value, _ = tok
        if kind == "int":
            return Polynomial.constant(self.n, int(value))
        if kind == "name":
            if value not in self.index:
                raise ParseError(f"unknown variable {value!r}", tok[2], self.text)
            return Polynomial.variable(self.n, self.index[value])
        if kind == "op" and value == "(":
            p = self.expr()
            close = self.peek()
            if close[0] != "op" or close[1] != ")":
                raise self.error("expected ')'")
            self.take()
            return p
        if kind == "end":
            raise ParseError("unexpected end of input", tok[2], self.text)
        raise ParseError(f"unexpected {value!r}", tok[2], self.text)


def parse_polynomial(text: str, names: Sequence[str]) -> Polynomial:
    """Parse ``text`` as a polynomial in the variables ``names`` (in order)."""
    return _Parser(text, list(names)).parse()
