"""Expression grammar for field elements.

::

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := "-" factor | power
    power  := atom ("^" exponent)?
    atom   := INT | NAME | "(" expr ")"
    exponent := ["-"] INT | "(" ["-"] INT ")"

Names are ``t``, ``s``, ``g`` and ``x1``, ``x2``, ...; which of them are
admissible depends on the evaluation context.  Binary operators associate to
the left.  ``format_expr`` prints with the fewest parentheses that reparse to
the same tree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    DivisionByZero,
    ExprSyntaxError,
    NonMonomialDivisor,
    NonRepresentableInverse,
    UnknownVariable,
)
from .ff import FqElem, FqField
from .laurent import LaurentPoly


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


_INT = re.compile(r"\d+")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _tokenize(src):
    tokens = []
    pos = 0
    while pos < len(src):
        ch = src[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _INT.match(src, pos)
        if m:
            tokens.append(("INT", m.group(), pos))
            pos = m.end()
            continue
        m = _NAME.match(src, pos)
        if m:
            tokens.append(("NAME", m.group(), pos))
            pos = m.end()
            continue
        if ch not in "+-*^()":
            raise ExprSyntaxError(f"unexpected character {ch!r}", pos)
        tokens.append((ch, ch, pos))
        pos += 1
    tokens.append(("EOF", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src, names):
        self.tokens = _tokenize(src)
        self.i = 0
        self.names = names

    @property
    def tok(self):
        return self.tokens[self.i]

    def take(self, kind):
        tok = self.tok
        if tok[0] != kind:
            what = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise ExprSyntaxError(f"expected {kind}, found {what}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        node = self.expr()
        if self.tok[0] != "EOF":
            raise ExprSyntaxError(f"unexpected {self.tok[1]!r}", self.tok[2])
        return node

    def expr(self):
        node = self.term()
        while self.tok[0] in ("+", "-"):
            op = self.take(self.tok[0])[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.tok[0] == "*":
            self.take("*")
            node = BinOp("*", node, self.factor())
        return node

    def factor(self):
        if self.tok[0] == "-":
            self.take("-")
            return Neg(self.factor())
        return self.power()

    def power(self):
        node = self.atom()
        if self.tok[0] == "^":
            self.take("^")
            node = Pow(node, self.exponent())
        return node

    def exponent(self):
        if self.tok[0] == "(":
            self.take("(")
            value = self.signed_int()
            self.take(")")
            return value
        return self.signed_int()

    def signed_int(self):
        sign = 1
        if self.tok[0] == "-":
            self.take("-")
            sign = -1
        if self.tok[0] != "INT":
            raise ExprSyntaxError("expected integer exponent", self.tok[2])
        return sign * int(self.take("INT")[1])

    def atom(self):
        kind, text, pos = self.tok
        if kind == "INT":
            self.i += 1
            return Num(int(text))
        if kind == "NAME":
            if self.names is not None and text not in self.names:
                raise UnknownVariable(f"unknown variable {text!r} at offset {pos}")
            self.i += 1
            return Var(text)
        if kind == "(":
            self.take("(")
            node = self.expr()
            self.take(")")
            return node
        what = "end of input" if kind == "EOF" else repr(text)
        raise ExprSyntaxError(f"expected a term, found {what}", pos)


def parse_expr(src, names=None):
    """Parse ``src`` into an AST; ``names`` restricts the admissible variables."""
    return _Parser(src, names).parse()


_PREC = {"+": 1, "-": 1, "*": 2}


def _prec(node):
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return 3
    if isinstance(node, Pow):
        return 4
    return 5


def format_expr(node):
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        inner = format_expr(node.operand)
        return "-" + (inner if _prec(node.operand) >= 3 else f"({inner})")
    if isinstance(node, Pow):
        base = format_expr(node.base)
        if _prec(node.base) < 5:
            base = f"({base})"
        return f"{base}^{node.exponent}"
    prec = _PREC[node.op]
    left = format_expr(node.left)
    right = format_expr(node.right)
    if _prec(node.left) < prec:
        left = f"({left})"
    if _prec(node.right) <= prec:
        right = f"({right})"
    return f"{left}{node.op}{right}"


# -- evaluation -------------------------------------------------------------


class ScalarContext:
    def __init__(self, field: FqField):
        self.field = field
        self.names = {"g"}

    def const(self, n):
        return self.field(n)

    def var(self, name):
        return self.field.gen


class LaurentContext:
    def __init__(self, field: FqField, var="t"):
        self.field = field
        self.names = {var, "g"}
        self._var = var

    def const(self, n):
        return LaurentPoly.monomial(self.field, 0, n, self._var)

    def var(self, name):
        if name == "g":
            return LaurentPoly.monomial(self.field, 0, self.field.gen, self._var)
        return LaurentPoly.monomial(self.field, 1, 1, self._var)


class TowerContext:
    def __init__(self, tower):
        self.tower = tower
        self.names = {"t", "g"} | {f"x{k}" for k in range(1, tower.n + 1)}

    def const(self, n):
        return self.tower.element(n)

    def var(self, name):
        if name == "t":
            return self.tower.t()
        if name == "g":
            return self.tower.element(self.tower.field.gen)
        return self.tower.x(int(name[1:]))


def evaluate(node, ctx):
    if isinstance(node, Num):
        return ctx.const(node.value)
    if isinstance(node, Var):
        return ctx.var(node.name)
    if isinstance(node, Neg):
        return -evaluate(node.operand, ctx)
    if isinstance(node, Pow):
        base = evaluate(node.base, ctx)
        try:
            return base ** node.exponent
        except (NonMonomialDivisor, DivisionByZero) as exc:
            raise NonRepresentableInverse(f"cannot invert {format_expr(node.base)}: {exc}") from None
    left = evaluate(node.left, ctx)
    right = evaluate(node.right, ctx)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    return left * right


def _context_for(context):
    from .tower import Tower

    if isinstance(context, Tower):
        return TowerContext(context)
    if isinstance(context, FqField):
        return LaurentContext(context)
    return context


def parse_element(src, context):
    """Parse and evaluate ``src`` in a tower, a base field (as K) or a custom context."""
    ctx = _context_for(context)
    return evaluate(parse_expr(src, ctx.names), ctx)


def parse_laurent(src, field, var="t"):
    ctx = LaurentContext(field, var)
    return evaluate(parse_expr(src, ctx.names), ctx)


def parse_scalar(src, field) -> FqElem:
    ctx = ScalarContext(field)
    return evaluate(parse_expr(src, ctx.names), ctx)
