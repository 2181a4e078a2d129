"""Pseudo MV-algebras Γ(G, u) = [0, u] inside a unital ℓ-group.

``PmvAlgebra`` exposes the algebra operations on coordinate arrays (shape
``(..., dim)``), which is what the exhaustive checkers use.  ``PmvElement``
is the small user-facing value type; the ``mv_*`` functions operate on it.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Optional

import numpy as np

from .groups import (GroupError, GroupExpr, _guard, _sort_simplest, coerce_element, g_le,
                     in_center, is_strong_unit, show_element, window_array)
from .report import Report

__all__ = [
    "UnitalGroup", "PmvAlgebra", "PmvElement", "gamma", "AlgebraMismatch",
    "mv_oplus", "mv_odot", "mv_lneg", "mv_rneg", "mv_join", "mv_meet",
    "check_axioms", "symmetry_witness", "Symmetry", "nat_multiple", "is_infinitesimal",
    "pairs", "first_false",
]


class AlgebraMismatch(ValueError):
    """Operands belong to different algebras."""


@dataclass(frozen=True)
class UnitalGroup:
    expr: GroupExpr
    unit: tuple

    def __post_init__(self):
        u = coerce_element(self.expr, self.unit)
        object.__setattr__(self, "unit", u)
        if not g_le(self.expr, self.expr.zero(), u):
            raise GroupError(f"unit {show_element(u)} is not positive in {self.expr}")
        if not is_strong_unit(self.expr, u):
            raise GroupError(f"{show_element(u)} is not a strong unit of {self.expr}")


@dataclass(frozen=True)
class PmvAlgebra:
    group: UnitalGroup

    @property
    def expr(self) -> GroupExpr:
        return self.group.expr

    @property
    def unit(self) -> tuple:
        return self.group.unit

    @property
    def dim(self) -> int:
        return self.expr.dim

    @cached_property
    def u(self) -> np.ndarray:
        a = np.asarray(self.unit, dtype=np.int64)
        a.setflags(write=False)
        return a

    @cached_property
    def zero_arr(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=np.int64)

    def __str__(self) -> str:
        return f"Gamma({self.expr}, {show_element(self.unit)})"

    # group level
    def add(self, x, y):
        _guard(x, y)
        return self.expr._add(x, y)

    def neg(self, x):
        _guard(x)
        return self.expr._neg(x)

    def sub(self, x, y):
        """Right difference x + (-y)."""
        return self.add(x, self.neg(y))

    def le(self, x, y):
        return self.expr._le(x, y)

    def lt(self, x, y):
        return self.expr._cmp(x, y) == -1

    @staticmethod
    def eq(x, y):
        x, y = np.broadcast_arrays(x, y)
        return np.all(x == y, axis=-1)

    def contains(self, x):
        x = np.asarray(x, dtype=np.int64)
        return self.le(self.zero_arr, x) & self.le(x, self.u)

    # algebra level
    def oplus(self, x, y):
        return self.expr._meet(self.add(x, y), self.u)

    def odot(self, x, y):
        return self.expr._join(self.add(self.sub(x, self.u), y), self.zero_arr)

    def lneg(self, x):
        return self.add(self.u, self.neg(x))

    def rneg(self, x):
        return self.add(self.neg(x), self.u)

    def join(self, x, y):
        return self.expr._join(x, y)

    def meet(self, x, y):
        return self.expr._meet(x, y)

    def sum_defined(self, x, y):
        """Partial sum x + y: defined iff y ⊙ x = 0, i.e. iff x ≤ y⁻.

        Equivalently the group sum x + y stays below u.  With the operands
        the other way round the condition would test y + x instead, which
        differs once u is not central.
        """
        return self.eq(self.odot(y, x), self.zero_arr)

    def window(self, bound: int) -> np.ndarray:
        """Members with coordinates in [-bound, bound], simplest first."""
        return _carrier_window(self, bound)

    def element(self, value) -> "PmvElement":
        return PmvElement(coerce_element(self.expr, value), self)

    __call__ = element

    @property
    def zero(self) -> "PmvElement":
        return PmvElement(tuple(0 for _ in range(self.dim)), self)

    @property
    def one(self) -> "PmvElement":
        return PmvElement(self.unit, self)


@lru_cache(maxsize=128)
def _carrier_window(m: PmvAlgebra, bound: int) -> np.ndarray:
    w = window_array(m.expr, bound)
    out = _sort_simplest(w[m.contains(w)])
    out.setflags(write=False)
    return out


def gamma(expr: GroupExpr, unit) -> PmvAlgebra:
    return PmvAlgebra(UnitalGroup(expr, unit))


@dataclass(frozen=True)
class PmvElement:
    value: tuple
    algebra: PmvAlgebra

    def __post_init__(self):
        v = coerce_element(self.algebra.expr, self.value)
        object.__setattr__(self, "value", v)
        if not bool(self.algebra.contains(np.asarray(v, dtype=np.int64))):
            raise ValueError(f"{show_element(v)} is not in {self.algebra}")

    @property
    def arr(self) -> np.ndarray:
        return np.asarray(self.value, dtype=np.int64)

    def __repr__(self) -> str:
        return show_element(self.value)

    def _wrap(self, a) -> "PmvElement":
        return PmvElement(tuple(int(v) for v in a), self.algebra)


def _same(x: PmvElement, y: PmvElement) -> PmvAlgebra:
    if x.algebra != y.algebra:
        raise AlgebraMismatch(f"{x} and {y} live in different algebras")
    return x.algebra


def mv_oplus(x: PmvElement, y: PmvElement) -> PmvElement:
    return x._wrap(_same(x, y).oplus(x.arr, y.arr))


def mv_odot(x: PmvElement, y: PmvElement) -> PmvElement:
    return x._wrap(_same(x, y).odot(x.arr, y.arr))


def mv_lneg(x: PmvElement) -> PmvElement:
    return x._wrap(x.algebra.lneg(x.arr))


def mv_rneg(x: PmvElement) -> PmvElement:
    return x._wrap(x.algebra.rneg(x.arr))


def mv_join(x: PmvElement, y: PmvElement) -> PmvElement:
    return x._wrap(_same(x, y).join(x.arr, y.arr))


def mv_meet(x: PmvElement, y: PmvElement) -> PmvElement:
    return x._wrap(_same(x, y).meet(x.arr, y.arr))


# --- exhaustive checking helpers -------------------------------------------

def pairs(w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """All ordered pairs of rows of ``w`` (first index slowest)."""
    n = len(w)
    return np.repeat(w, n, axis=0), np.tile(w, (n, 1))


def first_false(mask) -> int | None:
    mask = np.asarray(mask).reshape(-1)
    bad = np.flatnonzero(~mask)
    return int(bad[0]) if len(bad) else None


def _tuple(a) -> tuple:
    return tuple(int(v) for v in np.asarray(a).reshape(-1))


def run_law(w: np.ndarray, arity: int, law: Callable, names=("x", "y", "z")):
    """Evaluate ``law`` on every ``arity``-tuple over ``w``.

    Returns ``None`` when it holds everywhere, else the first failing
    assignment as a dict.  Triples are processed one leading value at a time.
    """
    n = len(w)
    if arity == 0:
        return None if bool(np.all(law())) else {}
    if arity == 1:
        i = first_false(law(w))
        return None if i is None else {names[0]: _tuple(w[i])}
    if arity == 2:
        x, y = pairs(w)
        i = first_false(law(x, y))
        return None if i is None else {names[0]: _tuple(x[i]), names[1]: _tuple(y[i])}
    y, z = pairs(w)
    for k in range(n):
        i = first_false(law(w[k], y, z))
        if i is not None:
            return {names[0]: _tuple(w[k]), names[1]: _tuple(y[i]), names[2]: _tuple(z[i])}
    return None


def _axiom_laws(m: PmvAlgebra):
    e, o, d, ln, rn = m.eq, m.oplus, m.odot, m.lneg, m.rneg
    zero, one = m.zero_arr, m.u

    def a6(x, y):
        r1 = o(x, d(rn(x), y))
        r2 = o(y, d(rn(y), x))
        r3 = o(d(x, ln(y)), y)
        r4 = o(d(y, ln(x)), x)
        return e(r1, r2) & e(r2, r3) & e(r3, r4)

    def difference(x, y):
        below = m.le(y, x)
        ok = e(d(x, ln(y)), m.sub(x, y)) & e(d(rn(y), x), m.add(m.neg(y), x))
        return ~below | ok

    return [
        ("A1", 3, lambda x, y, z: e(o(x, o(y, z)), o(o(x, y), z))),
        ("A2", 1, lambda x: e(o(x, zero), x) & e(o(zero, x), x)),
        ("A3", 1, lambda x: e(o(x, one), one) & e(o(one, x), one)),
        ("A4", 0, lambda: e(rn(one), zero) & e(ln(one), zero)),
        ("A5", 2, lambda x, y: e(rn(o(ln(x), ln(y))), ln(o(rn(x), rn(y))))),
        ("A6", 2, a6),
        ("A7", 2, lambda x, y: e(d(x, o(ln(x), y)), d(o(x, rn(y)), y))),
        ("A8", 1, lambda x: e(rn(ln(x)), x)),
        ("A8-dual", 1, lambda x: e(ln(rn(x)), x)),
        ("odot-definition", 2, lambda x, y: e(d(y, x), rn(o(ln(x), ln(y))))),
        ("join-is-A6", 2, lambda x, y: e(m.join(x, y), o(x, d(rn(x), y)))),
        ("meet-is-A7", 2, lambda x, y: e(m.meet(x, y), d(x, o(ln(x), y)))),
        ("distributive-meet", 3,
         lambda x, y, z: e(m.meet(x, m.join(y, z)), m.join(m.meet(x, y), m.meet(x, z)))),
        ("distributive-join", 3,
         lambda x, y, z: e(m.join(x, m.meet(y, z)), m.meet(m.join(x, y), m.join(x, z)))),
        ("group-difference", 2, difference),
    ]


def check_axioms(m: PmvAlgebra, bound: int = 3) -> Report:
    """Exhaustive check of A1–A8, the lattice identities and distributivity."""
    rep = Report("axioms", data={"algebra": str(m)})
    with rep.timed():
        w = m.window(bound)
        if not len(w):
            raise ValueError("empty window")
        bounds = {"bound": bound, "window_size": len(w)}
        for name, arity, law in _axiom_laws(m):
            bad = run_law(w, arity, law)
            rep.add(name, bad is None, bad, bounds)
    return rep


@dataclass(frozen=True)
class Symmetry:
    witness: Optional[tuple]
    unit_central: bool

    @property
    def agrees(self) -> bool:
        """No witness exactly when the unit is central."""
        return (self.witness is None) == self.unit_central


def symmetry_witness(m: PmvAlgebra, bound: int = 3) -> Symmetry:
    w = m.window(bound)
    i = first_false(m.eq(m.lneg(w), m.rneg(w)))
    return Symmetry(None if i is None else _tuple(w[i]), in_center(m.expr, m.unit))


def multiples_defined(m: PmvAlgebra, x: np.ndarray, n_max: int) -> np.ndarray:
    """Row-wise: is n·x defined for every n ≤ n_max?"""
    acc = np.zeros_like(x)
    ok = np.ones(x.shape[:-1], dtype=bool)
    for _ in range(n_max):
        ok &= m.sum_defined(acc, x)
        acc = m.oplus(acc, x)
    return ok


def nat_multiple(n: int, x: PmvElement) -> Optional[PmvElement]:
    """n·x as an iterated partial sum; ``None`` once a partial sum is undefined."""
    if n < 0:
        raise ValueError("n must be non-negative")
    m = x.algebra
    acc = m.zero_arr
    for _ in range(n):
        if not bool(m.sum_defined(acc, x.arr)):
            return None
        acc = m.oplus(acc, x.arr)
    return x._wrap(acc)


def _leading_coordinate_decides(g: GroupExpr) -> bool:
    from .groups import Heis, Lex, ZZ
    if isinstance(g, (ZZ, Heis)):
        return True
    if isinstance(g, Lex):
        return _leading_coordinate_decides(g.head if g.head.dim else g.tail)
    return False


def is_infinitesimal(x: PmvElement, n_max: int = 16) -> bool:
    """Is n·x defined for all n ≤ n_max?

    When the first coordinate decides the order (lex towers headed by ``Z``
    or ``Heis``) the exact answer is "first coordinate is 0"; once
    ``n_max`` exceeds the unit's first coordinate the windowed answer must
    coincide with it, and a disagreement raises ``RuntimeError``.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    m = x.algebra
    found = bool(multiples_defined(m, x.arr, n_max))
    if m.dim and _leading_coordinate_decides(m.expr) and n_max > m.unit[0]:
        exact = x.value[0] == 0
        if exact != found:
            raise RuntimeError(f"infinitesimal test disagrees with structure at {x}")
    return found
