"""Terms in the language {0, 1, ⊕, ⊙, ⁻, ∼} and windowed identity checking.

ASCII syntax::

    x (+) y      x ⊕ y           ⊙ binds tighter than ⊕
    x (.) y      x ⊙ y
    x^-  x^~     left / right negation (postfix, stackable)
    n . t        n-fold ⊕ of t   (0 . t = 0)
    t ^ n        n-fold ⊙ of t   (t ^ 0 = 1)

The prefix ``n .`` and every postfix operator bind tighter than both infix
operators, so ``2.x^2`` reads as ``2.(x^2)``.  ``⊕ ⊙ ⁻ ∼`` are accepted too.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

import numpy as np

from .gamma import PmvAlgebra, PmvElement, first_false
from .parsing import Cursor, ParseError, tokenize
from .report import Report

__all__ = [
    "Term", "Var", "Const", "Oplus", "Odot", "LNeg", "RNeg", "Times", "Power",
    "parse_term", "parse_identity", "free_vars", "evaluate", "eval_term", "check_identity",
    "UnboundVariable",
]


class UnboundVariable(KeyError):
    pass


class Term:
    prec = 3

    def _paren(self, child: "Term", prec: int) -> str:
        s = str(child)
        return f"({s})" if child.prec < prec else s


@dataclass(frozen=True)
class Var(Term):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Const(Term):
    value: int  # 0 or 1

    def __post_init__(self):
        if self.value not in (0, 1):
            raise ValueError("constants are 0 and 1")

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Oplus(Term):
    left: Term
    right: Term
    prec = 0

    def __str__(self):
        return f"{self._paren(self.left, 0)} (+) {self._paren(self.right, 1)}"


@dataclass(frozen=True)
class Odot(Term):
    left: Term
    right: Term
    prec = 1

    def __str__(self):
        return f"{self._paren(self.left, 1)} (.) {self._paren(self.right, 2)}"


@dataclass(frozen=True)
class LNeg(Term):
    arg: Term

    def __str__(self):
        return f"{self._paren(self.arg, 3)}^-"


@dataclass(frozen=True)
class RNeg(Term):
    arg: Term

    def __str__(self):
        return f"{self._paren(self.arg, 3)}^~"


@dataclass(frozen=True)
class Times(Term):
    n: int
    arg: Term
    prec = 2

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("multiplier must be non-negative")

    def __str__(self):
        return f"{self.n}.{self._paren(self.arg, 2)}"


@dataclass(frozen=True)
class Power(Term):
    arg: Term
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("exponent must be non-negative")

    def __str__(self):
        return f"{self._paren(self.arg, 3)}^{self.n}"


# --- parser -----------------------------------------------------------------

_TERM_TOKENS = [
    ("OPLUS", r"\(\+\)|⊕"),
    ("ODOT", r"\(\.\)|⊙"),
    ("LNEG", r"\^-|⁻"),
    ("RNEG", r"\^~|∼"),
    ("CARET", r"\^"),
    ("INT", r"\d+"),
    ("VAR", r"[a-z][a-z0-9_]*"),
    ("PUNCT", r"[().=]"),
]


class _TermParser:
    def __init__(self, text: str):
        self.c = Cursor(text, tokenize(text, _TERM_TOKENS))

    def term(self) -> Term:
        t = self.prod()
        while self.c.tok.kind == "OPLUS":
            self.c.take()
            t = Oplus(t, self.prod())
        return t

    def prod(self) -> Term:
        t = self.prefix()
        while self.c.tok.kind == "ODOT":
            self.c.take()
            t = Odot(t, self.prefix())
        return t

    def prefix(self) -> Term:
        c = self.c
        if c.tok.kind == "INT" and c.peek().text == ".":
            n = int(c.take().text)
            c.take()
            return Times(n, self.prefix())
        return self.postfix()

    def postfix(self) -> Term:
        c = self.c
        t = self.primary()
        while True:
            k = c.tok.kind
            if k == "LNEG":
                c.take()
                t = LNeg(t)
            elif k == "RNEG":
                c.take()
                t = RNeg(t)
            elif k == "CARET":
                c.take()
                if c.tok.kind != "INT":
                    c.fail("exponent", "'-'", "'~'")
                t = Power(t, int(c.take().text))
            else:
                return t

    def primary(self) -> Term:
        c = self.c
        tok = c.tok
        if tok.kind == "VAR":
            return Var(c.take().text)
        if tok.kind == "INT":
            if tok.text not in ("0", "1"):
                raise ParseError("only 0 and 1 are constants; use 'n . t' for multiples",
                                 c.text, tok.start, tok.end, ("'.'",))
            return Const(int(c.take().text))
        if c.accept("("):
            t = self.term()
            c.expect(")")
            return t
        c.fail("variable", "'0'", "'1'", "'('")

    def finish(self):
        if self.c.tok.kind != "EOF":
            self.c.fail("operator", "end of input")


def parse_term(text: str) -> Term:
    p = _TermParser(text)
    t = p.term()
    p.finish()
    return t


def parse_identity(text: str) -> tuple[Term, Term]:
    """Parse ``lhs = rhs``."""
    p = _TermParser(text)
    lhs = p.term()
    p.c.expect("=")
    rhs = p.term()
    p.finish()
    return lhs, rhs


def free_vars(t: Term) -> list[str]:
    """Free variables in order of first occurrence."""
    out: list[str] = []

    def walk(s):
        if isinstance(s, Var):
            if s.name not in out:
                out.append(s.name)
        elif isinstance(s, (Oplus, Odot)):
            walk(s.left)
            walk(s.right)
        elif isinstance(s, (LNeg, RNeg, Times, Power)):
            walk(s.arg)
    walk(t)
    return out


# --- evaluation ---------------------------------------------------------------

def evaluate(m: PmvAlgebra, t: Term, env: Mapping[str, np.ndarray]) -> np.ndarray:
    """Evaluate on coordinate arrays; every binding may carry batch dimensions."""
    if isinstance(t, Var):
        if t.name not in env:
            raise UnboundVariable(t.name)
        return np.asarray(env[t.name], dtype=np.int64)
    if isinstance(t, Const):
        return m.u if t.value else m.zero_arr
    if isinstance(t, Oplus):
        return m.oplus(evaluate(m, t.left, env), evaluate(m, t.right, env))
    if isinstance(t, Odot):
        return m.odot(evaluate(m, t.left, env), evaluate(m, t.right, env))
    if isinstance(t, LNeg):
        return m.lneg(evaluate(m, t.arg, env))
    if isinstance(t, RNeg):
        return m.rneg(evaluate(m, t.arg, env))
    if isinstance(t, Times):
        a = evaluate(m, t.arg, env)
        acc = np.broadcast_to(m.zero_arr, a.shape)
        for _ in range(t.n):
            acc = m.oplus(acc, a)
        return acc
    if isinstance(t, Power):
        a = evaluate(m, t.arg, env)
        acc = np.broadcast_to(m.u, a.shape)
        for _ in range(t.n):
            acc = m.odot(acc, a)
        return acc
    raise TypeError(f"not a term: {t!r}")


def _as_term(t: Union[Term, str]) -> Term:
    return parse_term(t) if isinstance(t, str) else t


def eval_term(t: Union[Term, str], env: Mapping[str, PmvElement],
              algebra: PmvAlgebra | None = None) -> PmvElement:
    t = _as_term(t)
    algs = {e.algebra for e in env.values()}
    if algebra is not None:
        algs.add(algebra)
    if len(algs) != 1:
        raise ValueError("environment must name exactly one algebra")
    m = algs.pop()
    out = evaluate(m, t, {k: v.arr for k, v in env.items()})
    return PmvElement(tuple(int(v) for v in out), m)


def check_identity(m: PmvAlgebra, lhs: Union[Term, str], rhs: Union[Term, str] | None = None,
                   bound: int = 3) -> Report:
    """Exhaustively evaluate ``lhs = rhs`` over all windowed assignments.

    ``lhs`` may also be a whole ``"s = t"`` string with ``rhs`` omitted.
    """
    if rhs is None:
        lhs, rhs = parse_identity(lhs)
    lhs, rhs = _as_term(lhs), _as_term(rhs)
    names = free_vars(lhs) + [v for v in free_vars(rhs) if v not in free_vars(lhs)]
    rep = Report("identity", data={"algebra": str(m), "identity": f"{lhs} = {rhs}",
                                   "variables": names})
    with rep.timed():
        w = m.window(bound)
        bounds = {"bound": bound, "window_size": len(w), "assignments": len(w) ** len(names)}
        witness = None
        if not names:
            if not bool(m.eq(evaluate(m, lhs, {}), evaluate(m, rhs, {}))):
                witness = {"lhs": _tup(evaluate(m, lhs, {})), "rhs": _tup(evaluate(m, rhs, {}))}
        else:
            witness = _search(m, lhs, rhs, names, w)
        rep.add("identity", witness is None, witness, bounds)
    return rep


def _tup(a) -> list:
    return [int(v) for v in np.asarray(a).reshape(-1)]


def _search(m, lhs, rhs, names, w):
    """First failing assignment; the first variable runs slowest."""
    if len(names) == 1:
        chunks = [{names[0]: w}]
    else:
        rest = len(names) - 1
        idx = np.indices((len(w),) * rest).reshape(rest, -1)
        block = {n: w[idx[i]] for i, n in enumerate(names[1:])}
        size = idx.shape[1]
        chunks = ({**block, names[0]: np.broadcast_to(row, (size, m.dim))} for row in w)
    for env in chunks:
        a = np.broadcast_to(evaluate(m, lhs, env), env[names[0]].shape)
        b = np.broadcast_to(evaluate(m, rhs, env), env[names[0]].shape)
        i = first_false(m.eq(a, b))
        if i is not None:
            wit = {n: _tup(env[n][i]) for n in names}
            wit["lhs"], wit["rhs"] = _tup(a[i]), _tup(b[i])
            return wit
    return None
