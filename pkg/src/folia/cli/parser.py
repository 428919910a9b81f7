"""Recursive-descent parser for vector fields and 1-forms with rational coefficients.

Grammar (``*`` is mandatory, ``^`` binds tighter than ``*``, which binds
tighter than ``+``/``-``)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := NUMBER | "z" | "w" | "d/dz" | "d/dw" | "dz" | "dw" | "(" expr ")"
    NUMBER := INT ("/" INT)?

Offsets in errors are 0-based character positions in the input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..algebra.poly import BiPoly, W, Z
from ..errors import FoliaError
from ..germ import FoliationGerm

VECTOR_SYMBOLS = ("d/dz", "d/dw")
FORM_SYMBOLS = ("dz", "dw")


class ExprSyntaxError(FoliaError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.detail = message


class MixedSyntax(ExprSyntaxError):
    pass


class NonIntegerExponent(ExprSyntaxError):
    pass


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<sym>d/dz|d/dw|dz|dw|z|w)|(?P<op>[-+*^()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "sym", "op", "end"
    text: str
    offset: int


def tokenize(text: str) -> list[Token]:
    out, pos = [], 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            out.append(Token("end", "", pos))
            return out
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        tok = m.group(kind)
        # identifiers must not run into letters ("zw", "dzz")
        if kind == "sym" and m.end() < len(text) and text[m.end()].isalnum():
            raise ExprSyntaxError(f"unknown name starting with {tok!r}", start)
        if kind == "num" and "/" in tok and tok.endswith("/"):
            raise ExprSyntaxError("malformed rational literal", start)
        out.append(Token(kind, tok, start))
        pos = m.end()


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction
    offset: int


@dataclass(frozen=True)
class Var:
    name: str  # "z", "w", or one of the formal symbols
    offset: int


@dataclass(frozen=True)
class Neg:
    arg: object
    offset: int


@dataclass(frozen=True)
class BinOp:
    op: str  # "+", "-", "*"
    left: object
    right: object
    offset: int


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    offset: int


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ExprSyntaxError(f"unexpected {tok.text!r}", tok.offset)
        return node

    def expr(self):
        node = self.term()
        while self.peek().text in ("+", "-") and self.peek().kind == "op":
            op = self.take()
            node = BinOp(op.text, node, self.term(), op.offset)
        return node

    def term(self):
        node = self.unary()
        while self.peek().text == "*" and self.peek().kind == "op":
            op = self.take()
            node = BinOp("*", node, self.unary(), op.offset)
        return node

    def unary(self):
        tok = self.peek()
        if tok.kind == "op" and tok.text in ("+", "-"):
            self.take()
            arg = self.unary()
            return arg if tok.text == "+" else Neg(arg, tok.offset)
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            caret = self.take()
            tok = self.peek()
            if tok.kind == "num" and "/" not in tok.text:
                self.take()
                return Pow(base, int(tok.text), caret.offset)
            if tok.kind == "end":
                raise ExprSyntaxError("missing exponent", tok.offset)
            raise NonIntegerExponent("exponent must be a nonnegative integer literal", tok.offset)
        return base

    def atom(self):
        tok = self.take()
        if tok.kind == "num":
            num, _, den = tok.text.partition("/")
            if den and int(den) == 0:
                raise ExprSyntaxError("zero denominator", tok.offset)
            return Num(Fraction(int(num), int(den or 1)), tok.offset)
        if tok.kind == "sym":
            return Var(tok.text, tok.offset)
        if tok.kind == "op" and tok.text == "(":
            inner = self.expr()
            close = self.peek()
            if close.kind != "op" or close.text != ")":
                raise ExprSyntaxError(f"unclosed '(' opened at {tok.offset}", close.offset)
            self.take()
            return inner
        if tok.kind == "end":
            raise ExprSyntaxError("unexpected end of input", tok.offset)
        raise ExprSyntaxError(f"unexpected {tok.text!r}", tok.offset)


def parse_ast(text: str):
    return _Parser(text).parse()


# -- evaluation ----------------------------------------------------------------
# A value is a map from formal symbol (None for the scalar part) to BiPoly.

def _lin_add(a: dict, b: dict, sign=1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, BiPoly()) + (v if sign == 1 else -v)
    return {k: v for k, v in out.items() if not v.is_zero() or k is None}


def _evaluate(node, symbols_seen: dict) -> dict:
    if isinstance(node, Num):
        return {None: BiPoly.const(node.value)}
    if isinstance(node, Var):
        if node.name == "z":
            return {None: Z}
        if node.name == "w":
            return {None: W}
        family = "vector" if node.name in VECTOR_SYMBOLS else "form"
        first = symbols_seen.setdefault("family", (family, node.offset))
        if first[0] != family:
            raise MixedSyntax(f"{node.name!r} mixes vector-field and 1-form notation", node.offset)
        return {node.name: BiPoly.const(1)}
    if isinstance(node, Neg):
        return {k: -v for k, v in _evaluate(node.arg, symbols_seen).items()}
    if isinstance(node, Pow):
        base = _evaluate(node.base, symbols_seen)
        if any(k is not None for k in base):
            raise ExprSyntaxError("cannot raise a differential symbol to a power", node.offset)
        return {None: base.get(None, BiPoly()) ** node.exponent}
    if isinstance(node, BinOp):
        left = _evaluate(node.left, symbols_seen)
        right = _evaluate(node.right, symbols_seen)
        if node.op == "+":
            return _lin_add(left, right)
        if node.op == "-":
            return _lin_add(left, right, -1)
        lsym = [k for k in left if k is not None]
        rsym = [k for k in right if k is not None]
        if lsym and rsym:
            raise ExprSyntaxError("product of two differential symbols", node.offset)
        if lsym and not left.get(None, BiPoly()).is_zero():
            raise ExprSyntaxError("sum of a polynomial and a differential term", node.offset)
        if rsym and not right.get(None, BiPoly()).is_zero():
            raise ExprSyntaxError("sum of a polynomial and a differential term", node.offset)
        if lsym:
            scal = right.get(None, BiPoly())
            return {k: v * scal for k, v in left.items() if k is not None}
        scal = left.get(None, BiPoly())
        if rsym:
            return {k: v * scal for k, v in right.items() if k is not None}
        return {None: scal * right.get(None, BiPoly())}
    raise TypeError(node)


@dataclass(frozen=True)
class ParsedFoliation:
    germ: FoliationGerm
    kind: str  # "vector" or "form"
    warnings: tuple = ()

    @property
    def removed_factor(self) -> BiPoly:
        return self.germ.removed_factor


def parse_foliation(text: str) -> ParsedFoliation:
    """Parse ``P*d/dz + Q*d/dw`` or ``A*dz + B*dw``; a 1-form maps to (P, Q) = (B, -A)."""
    node = parse_ast(text)
    seen: dict = {}
    value = _evaluate(node, seen)
    scalar = value.get(None, BiPoly())
    if "family" not in seen:
        raise ExprSyntaxError("expected a vector field (d/dz, d/dw) or a 1-form (dz, dw)", 0)
    if not scalar.is_zero():
        raise ExprSyntaxError("polynomial term without a differential symbol", 0)
    kind = seen["family"][0]
    zero = BiPoly()
    if kind == "vector":
        P, Q = value.get("d/dz", zero), value.get("d/dw", zero)
    else:
        A, B = value.get("dz", zero), value.get("dw", zero)
        P, Q = B, -A
    if P.is_zero() and Q.is_zero():
        raise ExprSyntaxError("the expression is identically zero", 0)
    germ = FoliationGerm(P, Q)
    warnings = ()
    if not germ.removed_factor.is_constant():
        warnings = (f"removed common factor {germ.removed_factor}",)
    return ParsedFoliation(germ, kind, warnings)


def parse_polynomial(text: str) -> BiPoly:
    """Parse a plain polynomial in z and w (no differential symbols)."""
    value = _evaluate(parse_ast(text), {})
    if any(k is not None for k in value):
        raise ExprSyntaxError("expected a polynomial without differential symbols", 0)
    return value.get(None, BiPoly())


def parse_point(text: str) -> tuple:
    parts = [p.strip() for p in text.strip().strip("()").split(",")]
    if len(parts) != 2:
        raise ExprSyntaxError("expected a point 'a,b'", 0)
    try:
        return (Fraction(parts[0]), Fraction(parts[1]))
    except (ValueError, ZeroDivisionError):
        raise ExprSyntaxError(f"bad point {text!r}", 0) from None
