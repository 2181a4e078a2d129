"""Text syntax for groups, elements and algebras.

    spec    := ("Gamma" | "Γ") "(" group "," element ")"
    group   := product ("lex" product)*          left-associative
    product := atom ("x" atom)*                  binds tighter than lex
    atom    := "Z" | "O" | "Heis" | "(" group ")"
    element := integer | "(" element ("," element)* ")"

Errors carry the character span of the offending token and what was expected.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .gamma import PmvAlgebra, UnitalGroup
from .groups import (HEIS, O, Z, Direct, GroupError, GroupExpr, Lex, ShapeError,
                     coerce_element, show_element)

__all__ = ["ParseError", "Token", "tokenize", "AlgebraSpec", "parse_spec", "parse_group",
           "parse_element"]


class ParseError(ValueError):
    def __init__(self, message: str, text: str, start: int, end: int | None = None,
                 expected: tuple[str, ...] = ()):
        self.message = message
        self.text = text
        self.start = start
        self.end = start + 1 if end is None else end
        self.expected = tuple(expected)
        super().__init__(str(self))

    def __str__(self) -> str:
        exp = f" (expected {' or '.join(self.expected)})" if self.expected else ""
        caret = " " * self.start + "^" * max(1, self.end - self.start)
        return f"{self.message}{exp} at {self.start}\n  {self.text}\n  {caret}"


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    start: int

    @property
    def end(self) -> int:
        return self.start + len(self.text)


def tokenize(text: str, spec: list[tuple[str, str]]) -> list[Token]:
    master = re.compile("|".join(f"(?P<{k}>{p})" for k, p in spec))
    out, pos = [], 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = master.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        out.append(Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(Token("EOF", "", len(text)))
    return out


class Cursor:
    def __init__(self, text: str, tokens: list[Token]):
        self.text, self.tokens, self.i = text, tokens, 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def take(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def accept(self, *texts: str) -> Token | None:
        if self.tok.text in texts and self.tok.kind != "EOF":
            return self.take()
        return None

    def expect(self, *texts: str) -> Token:
        t = self.accept(*texts)
        if t is None:
            self.fail(*[repr(s) for s in texts])
        return t

    def fail(self, *expected: str):
        t = self.tok
        what = "end of input" if t.kind == "EOF" else repr(t.text)
        raise ParseError(f"unexpected {what}", self.text, t.start, max(t.end, t.start + 1), expected)


_SPEC_TOKENS = [
    ("INT", r"-?\d+"),
    ("NAME", r"Gamma|Γ|Heis|lex|[A-Za-z]"),
    ("PUNCT", r"[(),]"),
]


def _group(c: Cursor) -> GroupExpr:
    g = _product(c)
    while c.accept("lex"):
        g = Lex(g, _product(c))
    return g


def _product(c: Cursor) -> GroupExpr:
    fs = [_atom(c)]
    while c.accept("x"):
        fs.append(_atom(c))
    return fs[0] if len(fs) == 1 else Direct(tuple(fs))


def _atom(c: Cursor) -> GroupExpr:
    t = c.tok
    if c.accept("Z"):
        return Z
    if c.accept("O"):
        return O
    if c.accept("Heis"):
        return HEIS
    if c.accept("("):
        g = _group(c)
        c.expect(")")
        return g
    c.fail("'Z'", "'O'", "'Heis'", "'('")
    raise AssertionError(t)


def _element(c: Cursor):
    t = c.tok
    if t.kind == "INT":
        c.take()
        return int(t.text)
    if c.accept("("):
        items = [_element(c)]
        while c.accept(","):
            items.append(_element(c))
        c.expect(")")
        return tuple(items)
    c.fail("integer", "'('")


def _wrap_group_error(text: str, start: int, end: int, fn):
    try:
        return fn()
    except GroupError as e:
        raise ParseError(str(e), text, start, end) from None


def parse_group(text: str) -> GroupExpr:
    c = Cursor(text, tokenize(text, _SPEC_TOKENS))
    g = _wrap_group_error(text, 0, len(text), lambda: _group(c))
    if c.tok.kind != "EOF":
        c.fail("'lex'", "'x'", "end of input")
    return g


def parse_element(text: str, expr: GroupExpr) -> tuple[int, ...]:
    c = Cursor(text, tokenize(text, _SPEC_TOKENS))
    lit = _element(c)
    if c.tok.kind != "EOF":
        c.fail("end of input")
    try:
        return coerce_element(expr, lit)
    except ShapeError as e:
        raise ParseError(str(e), text, 0, len(text)) from None


@dataclass(frozen=True)
class AlgebraSpec:
    source: str
    expr: GroupExpr
    unit: tuple

    @property
    def algebra(self) -> PmvAlgebra:
        return PmvAlgebra(UnitalGroup(self.expr, self.unit))

    def __str__(self) -> str:
        return f"Gamma({self.expr}, {show_element(self.unit)})"


def parse_spec(text: str) -> AlgebraSpec:
    """Parse ``Gamma(<group>, <unit>)`` and validate the unit."""
    c = Cursor(text, tokenize(text, _SPEC_TOKENS))
    c.expect("Gamma", "Γ")
    c.expect("(")
    g_start = c.tok.start
    expr = _wrap_group_error(text, g_start, g_start + 1, lambda: _group(c))
    c.expect(",")
    e_start = c.tok.start
    lit = _element(c)
    e_end = c.tokens[c.i - 1].end
    c.expect(")")
    if c.tok.kind != "EOF":
        c.fail("end of input")
    try:
        unit = coerce_element(expr, lit)
        UnitalGroup(expr, unit)
    except (ShapeError, GroupError) as e:
        raise ParseError(str(e), text, e_start, e_end) from None
    return AlgebraSpec(text, expr, unit)
