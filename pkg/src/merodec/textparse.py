"""Parser for polynomial / rational-function text.

Accepts ``+ - * / ^ **``, parentheses, integers, decimals, ``i`` and one
variable name, e.g. ``(z^5 - 5*z)/(5*z^4 - 1)`` or ``-4*z*(z**4 + 1)``.
"""

from __future__ import annotations

import re

from .exactnum import GaussianRational, I
from .merofn import MeroFn
from .poly import UniPoly


class ParseError(ValueError):
    def __init__(self, msg, pos=None):
        self.pos = pos
        super().__init__(msg if pos is None else f"{msg} (at position {pos})")


_TOKEN = re.compile(r"\s*(?:(\*\*|[-+*/^()])|(\d+(?:\.\d*)?|\.\d+)|([A-Za-z_][A-Za-z_0-9]*))")


def tokenize(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            pos += len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.group(1):
            tok = "^" if m.group(1) == "**" else m.group(1)
            out.append(("op", tok, m.start(1)))
        elif m.group(2):
            out.append(("num", m.group(2), m.start(2)))
        else:
            out.append(("name", m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    # expr := term (('+'|'-') term)*
    # term := unary (('*'|'/') unary)*
    # unary := ('+'|'-') unary | power
    # power := atom ('^' unary)?
    def __init__(self, text, var):
        self.toks = tokenize(text)
        self.k = 0
        self.var = var

    def peek(self):
        return self.toks[self.k]

    def take(self):
        tok = self.toks[self.k]
        self.k += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok[:2] != ("op", op):
            raise ParseError(f"expected {op!r}", tok[2])

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            tok = self.take()
            rhs = self.unary()
            if tok[1] == "*":
                value = value * rhs
            else:
                try:
                    value = value / rhs
                except ZeroDivisionError:
                    raise ParseError("division by zero", tok[2]) from None
        return value

    def unary(self):
        tok = self.peek()
        if tok[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if tok[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            tok = self.take()
            e = self.unary()
            if not (e.is_const() and e.num[0].im == 0 and e.num[0].re.denominator == 1):
                raise ParseError("exponent must be an integer constant", tok[2])
            try:
                return base ** int(e.num[0].re)
            except ZeroDivisionError:
                raise ParseError("negative power of zero", tok[2]) from None
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return MeroFn.const(GaussianRational(val), self.var)
        if kind == "name":
            if val == "i":
                return MeroFn.const(I, self.var)
            if val == self.var:
                return MeroFn.identity(self.var)
            raise ParseError(f"unknown name {val!r}", pos)
        if (kind, val) == ("op", "("):
            value = self.expr()
            self.expect(")")
            return value
        if val is None:
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {val!r}", pos)


def parse_mero(text: str, var: str = "z") -> MeroFn:
    return _Parser(text, var).parse()


def parse_poly(text: str, var: str = "z") -> UniPoly:
    f = parse_mero(text, var)
    if not f.den.is_const():
        raise ParseError("expected a polynomial, got a proper rational function")
    return f.num.scale(f.den[0].inv())
