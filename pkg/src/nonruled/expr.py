"""Element expressions: integers, the variable t (and X for radicands), + - * / ^ and parentheses.

Precedence: ``^`` binds tightest and takes an integer literal exponent, then
unary minus, then ``* /``, then ``+ -``; binary operators associate left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class ExprSyntaxError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class ExprEvalError(ValueError):
    pass


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str
    pos: int


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


_TOKEN = re.compile(r"(\d+)|([A-Za-z_]\w*)|(\S)")


def _tokenize(src: str):
    out = []
    for m in _TOKEN.finditer(src):
        start = m.start()
        if m.group(1):
            out.append(("int", m.group(1), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ExprSyntaxError(f"unexpected character {ch!r}", start)
            out.append((ch, ch, start))
    out.append(("end", "", len(src)))
    return out


class _Parser:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            raise ExprSyntaxError(f"expected {want}, found {tok[1] or 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op, _, pos = self.take()
            node = BinOp(op, node, self.term(), pos)
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            node = BinOp(op, node, self.unary(), pos)
        return node

    def unary(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return Neg(self.unary())
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            sign = 1
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            tok = self.peek()
            if tok[0] != "int":
                raise ExprSyntaxError("exponent must be an integer literal", tok[2])
            self.take()
            return Pow(base, sign * int(tok[1]))
        return base

    def atom(self):
        kind, text, pos = self.peek()
        if kind == "int":
            self.take()
            return Num(int(text))
        if kind == "name":
            self.take()
            return Var(text, pos)
        if kind == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        raise ExprSyntaxError(f"unexpected {text or 'end of input'!r}", pos)


def parse_ast(src: str):
    p = _Parser(src)
    node = p.expr()
    p.take("end")
    return node


def evaluate_ast(node, domain, env: dict):
    if isinstance(node, Num):
        return domain(node.value)
    if isinstance(node, Var):
        if node.name not in env:
            raise ExprEvalError(f"variable {node.name!r} is not available here (position {node.pos})")
        return env[node.name]
    if isinstance(node, Neg):
        return -evaluate_ast(node.operand, domain, env)
    if isinstance(node, Pow):
        base = evaluate_ast(node.base, domain, env)
        if node.exp < 0 and not base:
            raise ExprEvalError("division by zero")
        return base ** node.exp
    left = evaluate_ast(node.left, domain, env)
    right = evaluate_ast(node.right, domain, env)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if not right:
        raise ExprEvalError(f"division by zero (position {node.pos})")
    return left / right


def parse_expr(src: str, field, *, with_x: bool = False):
    """Parse into the base field of a ValuedField, or into E(X) when ``with_x``."""
    from .exact_algebra import RationalFunctionField

    node = parse_ast(src)
    env = {}
    domain = field.domain
    if field.has_t:
        env["t"] = field.t
    if with_x:
        domain = RationalFunctionField(field.domain, "X")
        env = {k: domain(v) for k, v in env.items()}
        env["X"] = domain.gen()
    try:
        return evaluate_ast(node, domain, env)
    except ZeroDivisionError as exc:
        raise ExprEvalError(f"division by zero: {exc}") from None


def format_element(x) -> str:
    return str(x)
