"""Recursive-descent parser for polynomial expressions over Q.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := unary (('*'|'/') unary)*
    unary  := ('+'|'-') unary | power
    power  := atom (('^'|'**') INT)?
    atom   := NUMBER | NAME | '(' expr ')'

Division is only allowed by a nonzero constant.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .mpoly import MPoly

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z_]\w*)|(\*\*|[-+*/^()]))")


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.text = text
        self.variables = tuple(variables)
        self.tokens = self._lex(text)
        self.i = 0

    def _lex(self, text):
        tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                start = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[start]!r}", start, text)
            start = m.start(m.lastindex)
            if m.group(1) is not None:
                if "." in m.group(1):
                    raise ParseError("decimal literals are not exact; use a/b", start, text)
                tokens.append(("num", int(m.group(1)), start))
            elif m.group(2) is not None:
                tokens.append(("name", m.group(2), start))
            else:
                tokens.append(("op", m.group(3), start))
            pos = m.end()
        tokens.append(("end", None, len(text)))
        return tokens

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, *ops):
        kind, val, _ = self.peek()
        if kind == "op" and val in ops:
            self.i += 1
            return val
        return None

    def parse(self) -> MPoly:
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", pos, self.text)
        return p

    def expr(self) -> MPoly:
        acc = self.term()
        while True:
            op = self.accept("+", "-")
            if op is None:
                return acc
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs

    def term(self) -> MPoly:
        acc = self.unary()
        while True:
            kind, val, pos = self.peek()
            op = self.accept("*", "/")
            if op is None:
                return acc
            rhs = self.unary()
            if op == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ParseError("division only by a nonzero constant", pos, self.text)
                acc = acc * (1 / rhs.constant_term())

    def unary(self) -> MPoly:
        op = self.accept("+", "-")
        if op == "-":
            return -self.unary()
        if op == "+":
            return self.unary()
        return self.power()

    def power(self) -> MPoly:
        base = self.atom()
        if self.accept("^", "**") is None:
            return base
        kind, val, pos = self.peek()
        if kind == "op" and val == "-":
            raise ParseError("negative exponent", pos, self.text)
        if kind != "num":
            raise ParseError("exponent must be a nonnegative integer literal", pos, self.text)
        self.take()
        return base ** val

    def atom(self) -> MPoly:
        kind, val, pos = self.take()
        if kind == "num":
            return MPoly.constant(self.variables, Fraction(val))
        if kind == "name":
            if val not in self.variables:
                raise ParseError(f"unknown symbol {val!r}", pos, self.text)
            return MPoly.var(self.variables, val)
        if kind == "op" and val == "(":
            inner = self.expr()
            k, v, p = self.take()
            if not (k == "op" and v == ")"):
                raise ParseError("expected ')'", p, self.text)
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos, self.text)
        raise ParseError(f"unexpected token {val!r}", pos, self.text)


def parse_polynomial(text: str, variables: Sequence[str] = ("x", "y", "z")) -> MPoly:
    if not isinstance(text, str):
        raise TypeError("expression must be a string")
    return _Parser(text, variables).parse()
