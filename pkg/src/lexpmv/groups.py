"""Structural lattice-ordered groups over the integers.

A group is described by a small expression tree built from ``Z``, the trivial
group ``O``, the integer Heisenberg group ``Heis``, lexicographic products and
direct products.  Elements are *flat* tuples of Python ints, one entry per
coordinate of the flattened tree (``Lex(Z, Heis)`` has four coordinates).

All arithmetic is carried out on ``int64`` arrays whose last axis holds the
coordinates, so the same code path serves single elements and whole windows
of elements.  Inputs are range-checked before every group operation; anything
that could overflow raises :class:`OverflowError` instead of wrapping.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

__all__ = [
    "Order", "GroupExpr", "Trivial", "ZZ", "Heis", "Lex", "Direct",
    "O", "Z", "HEIS", "lex", "direct",
    "ShapeError", "GroupError", "UnsupportedError",
    "coerce_element", "g_add", "g_neg", "g_sub", "g_compare", "g_le",
    "g_meet", "g_join", "is_linear", "is_strong_unit", "in_center",
    "enumerate_window", "window_array", "flatten",
    "prefix_expr", "tail_expr", "leading_z",
]

# |coordinate| bound accepted by every operation; keeps Heisenberg products
# (a * b') and the following sums inside int64.
COORD_LIMIT = 1 << 30


class Order(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1
    INCOMPARABLE = 2


class ShapeError(ValueError):
    """An element does not match the shape of its group expression."""


class GroupError(ValueError):
    """Invalid group expression, or a unit that is not a strong unit."""


class UnsupportedError(Exception):
    """The requested construction is not available for this structure."""


def _guard(*arrays: np.ndarray) -> None:
    for a in arrays:
        if a.size and np.abs(a).max() > COORD_LIMIT:
            raise OverflowError(
                f"coordinate magnitude exceeds {COORD_LIMIT}; refusing to risk int64 wraparound")


def _lex_sign(d: np.ndarray) -> np.ndarray:
    """Sign of the first non-zero entry along the last axis (0 if none)."""
    if d.shape[-1] == 0:
        return np.zeros(d.shape[:-1], dtype=np.int64)
    first = np.argmax(d != 0, axis=-1)
    val = np.take_along_axis(d, first[..., None], axis=-1)[..., 0]
    return np.sign(val).astype(np.int64)


class GroupExpr:
    """Base class of group expressions.

    Subclasses implement the private array methods ``_add``, ``_neg``,
    ``_cmp``, ``_meet`` and ``_join``; they take arrays of shape
    ``(..., dim)`` (``_cmp`` returns codes of shape ``(...)`` using the
    :class:`Order` values).
    """

    dim: int

    @property
    def linear(self) -> bool:
        raise NotImplementedError

    @property
    def abelian(self) -> bool:
        raise NotImplementedError

    def _le(self, x, y):
        c = self._cmp(x, y)
        return (c == Order.LT) | (c == Order.EQ)

    def _sub(self, x, y):
        """Right difference ``x - y = x + (-y)``."""
        return self._add(x, self._neg(y))

    def zero(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=np.int64)

    def __str__(self) -> str:
        return _show(self)


@dataclass(frozen=True)
class Trivial(GroupExpr):
    dim = 0
    linear = True
    abelian = True

    def _add(self, x, y):
        return np.broadcast_arrays(x, y)[0].copy()

    def _neg(self, x):
        return np.array(x, copy=True)

    def _cmp(self, x, y):
        x, y = np.broadcast_arrays(x, y)
        return np.zeros(x.shape[:-1], dtype=np.int64)

    def _meet(self, x, y):
        return self._add(x, y)

    _join = _meet


@dataclass(frozen=True)
class ZZ(GroupExpr):
    dim = 1
    linear = True
    abelian = True

    def _add(self, x, y):
        return x + y

    def _neg(self, x):
        return -x

    def _cmp(self, x, y):
        return np.sign(x[..., 0] - y[..., 0]).astype(np.int64)

    def _meet(self, x, y):
        return np.minimum(x, y)

    def _join(self, x, y):
        return np.maximum(x, y)


@dataclass(frozen=True)
class Heis(GroupExpr):
    """Integer Heisenberg group: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').

    Ordered lexicographically on (a, b, c); this order is invariant under
    left and right translations, so the group is linearly ordered.
    """

    dim = 3
    linear = True
    abelian = False

    def _add(self, x, y):
        x, y = np.broadcast_arrays(x, y)
        c = x[..., 2] + y[..., 2] + x[..., 0] * y[..., 1]
        return np.stack([x[..., 0] + y[..., 0], x[..., 1] + y[..., 1], c], axis=-1)

    def _neg(self, x):
        a, b = x[..., 0], x[..., 1]
        return np.stack([-a, -b, -x[..., 2] + a * b], axis=-1)

    def _cmp(self, x, y):
        x, y = np.broadcast_arrays(x, y)
        return _lex_sign(x - y)

    def _meet(self, x, y):
        x, y = np.broadcast_arrays(x, y)
        return np.where((self._cmp(x, y) <= 0)[..., None], x, y)

    def _join(self, x, y):
        x, y = np.broadcast_arrays(x, y)
        return np.where((self._cmp(x, y) >= 0)[..., None], x, y)


@dataclass(frozen=True)
class Lex(GroupExpr):
    """Lexicographic product: compare heads first, tails on ties."""

    head: GroupExpr
    tail: GroupExpr

    def __post_init__(self):
        if self.tail.dim and not self.head.linear:
            raise GroupError(
                f"lexicographic product {self} is not lattice ordered: head must be linear "
                "or tail trivial")

    @property
    def dim(self) -> int:
        return self.head.dim + self.tail.dim

    @property
    def linear(self) -> bool:
        return self.head.linear and self.tail.linear

    @property
    def abelian(self) -> bool:
        return self.head.abelian and self.tail.abelian

    def _split(self, x):
        k = self.head.dim
        return x[..., :k], x[..., k:]

    def _add(self, x, y):
        xh, xt = self._split(x)
        yh, yt = self._split(y)
        return _cat(self.head._add(xh, yh), self.tail._add(xt, yt))

    def _neg(self, x):
        xh, xt = self._split(x)
        return _cat(self.head._neg(xh), self.tail._neg(xt))

    def _cmp(self, x, y):
        x, y = np.broadcast_arrays(x, y)
        xh, xt = self._split(x)
        yh, yt = self._split(y)
        ch = self.head._cmp(xh, yh)
        return np.where(ch == Order.EQ, self.tail._cmp(xt, yt), ch)

    def _lattice(self, x, y, meet: bool):
        x, y = np.broadcast_arrays(x, y)
        xh, xt = self._split(x)
        yh, yt = self._split(y)
        if not self.tail.dim:
            h = self.head._meet(xh, yh) if meet else self.head._join(xh, yh)
            return _cat(h, xt)
        ch = self.head._cmp(xh, yh)
        t = self.tail._meet(xt, yt) if meet else self.tail._join(xt, yt)
        first = (ch < 0) if meet else (ch > 0)
        pick = np.where(first[..., None], x, y)
        return np.where((ch == Order.EQ)[..., None], _cat(xh, t), pick)

    def _meet(self, x, y):
        return self._lattice(x, y, True)

    def _join(self, x, y):
        return self._lattice(x, y, False)


@dataclass(frozen=True)
class Direct(GroupExpr):
    """Direct product with the coordinatewise order."""

    factors: tuple[GroupExpr, ...]

    @property
    def dim(self) -> int:
        return sum(f.dim for f in self.factors)

    @property
    def linear(self) -> bool:
        nontrivial = [f for f in self.factors if f.dim]
        return len(nontrivial) <= 1 and all(f.linear for f in nontrivial)

    @property
    def abelian(self) -> bool:
        return all(f.abelian for f in self.factors)

    def _parts(self, x):
        out, k = [], 0
        for f in self.factors:
            out.append(x[..., k:k + f.dim])
            k += f.dim
        return out

    def _map2(self, name, x, y):
        x, y = np.broadcast_arrays(x, y)
        parts = [getattr(f, name)(a, b) for f, a, b in zip(self.factors, self._parts(x), self._parts(y))]
        return _cat(*parts) if parts else x.copy()

    def _add(self, x, y):
        return self._map2("_add", x, y)

    def _neg(self, x):
        parts = [f._neg(a) for f, a in zip(self.factors, self._parts(x))]
        return _cat(*parts) if parts else x.copy()

    def _meet(self, x, y):
        return self._map2("_meet", x, y)

    def _join(self, x, y):
        return self._map2("_join", x, y)

    def _cmp(self, x, y):
        x, y = np.broadcast_arrays(x, y)
        codes = [f._cmp(a, b) for f, a, b in zip(self.factors, self._parts(x), self._parts(y))]
        if not codes:
            return np.zeros(x.shape[:-1], dtype=np.int64)
        c = np.stack(codes, axis=-1)
        inc = (c == Order.INCOMPARABLE).any(-1)
        lt = (c == Order.LT).any(-1)
        gt = (c == Order.GT).any(-1)
        out = np.where(lt, Order.LT, np.where(gt, Order.GT, Order.EQ))
        return np.where(inc | (lt & gt), Order.INCOMPARABLE, out).astype(np.int64)


def _cat(*parts):
    lead = np.broadcast_shapes(*(p.shape[:-1] for p in parts))
    return np.concatenate([np.broadcast_to(p, lead + p.shape[-1:]) for p in parts], axis=-1)


O = Trivial()
Z = ZZ()
HEIS = Heis()


def lex(first: GroupExpr, second: GroupExpr, *more: GroupExpr) -> GroupExpr:
    """Left-associated lexicographic product of two or more groups."""
    out = Lex(first, second)
    for g in more:
        out = Lex(out, g)
    return out


def direct(*factors: GroupExpr) -> GroupExpr:
    """Direct product; the empty product is the trivial group."""
    if not factors:
        return O
    return Direct(tuple(factors))


def flatten(g: GroupExpr) -> GroupExpr:
    """Drop trivial factors and right-nest lexicographic chains.

    The result has the same flat coordinates, operation and order as ``g``.
    """
    if isinstance(g, Lex):
        h, t = flatten(g.head), flatten(g.tail)
        if not h.dim:
            return t
        if not t.dim:
            return h
        if isinstance(h, Lex):
            return flatten(Lex(h.head, Lex(h.tail, t)))
        return Lex(h, t)
    if isinstance(g, Direct):
        fs = [flatten(f) for f in g.factors if f.dim]
        if not fs:
            return O
        if len(fs) == 1:
            return fs[0]
        return Direct(tuple(fs))
    return g


# --- elements -----------------------------------------------------------

def coerce_element(g: GroupExpr, value) -> tuple[int, ...]:
    """Accept an int, a flat tuple, or a tuple tree matching ``g``."""
    if isinstance(value, np.ndarray):
        value = tuple(int(v) for v in value.reshape(-1))
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        if g.dim != 1:
            raise ShapeError(f"scalar {value} given for a group with {g.dim} coordinates")
        return (int(value),)
    if not isinstance(value, (tuple, list)):
        raise ShapeError(f"cannot read {value!r} as an element")
    if all(isinstance(v, (int, np.integer)) and not isinstance(v, bool) for v in value):
        if len(value) == g.dim:
            return tuple(int(v) for v in value)
    tree = _coerce_tree(g, value)
    if tree is None:
        raise ShapeError(f"{value!r} does not match the shape of {g} ({g.dim} coordinates)")
    return tree


def _coerce_tree(g: GroupExpr, value):
    if isinstance(g, Trivial):
        return () if value == () or value == [] or value == 0 else None
    if isinstance(value, (int, np.integer)):
        return (int(value),) if g.dim == 1 else None
    value = tuple(value)
    if all(isinstance(v, (int, np.integer)) for v in value) and len(value) == g.dim:
        return tuple(int(v) for v in value)
    if isinstance(g, Lex) and len(value) == 2:
        h, t = _coerce_tree(g.head, value[0]), _coerce_tree(g.tail, value[1])
        return None if h is None or t is None else h + t
    if isinstance(g, Direct) and len(value) == len(g.factors):
        parts = [_coerce_tree(f, v) for f, v in zip(g.factors, value)]
        return None if any(p is None for p in parts) else sum(parts, ())
    return None


def _arr(g: GroupExpr, x) -> np.ndarray:
    a = np.asarray(coerce_element(g, x), dtype=np.int64)
    _guard(a)
    return a


def _tup(a: np.ndarray) -> tuple[int, ...]:
    return tuple(int(v) for v in a)


def g_add(g: GroupExpr, x, y) -> tuple[int, ...]:
    return _tup(g._add(_arr(g, x), _arr(g, y)))


def g_neg(g: GroupExpr, x) -> tuple[int, ...]:
    return _tup(g._neg(_arr(g, x)))


def g_sub(g: GroupExpr, x, y) -> tuple[int, ...]:
    """Right difference x + (-y)."""
    return _tup(g._sub(_arr(g, x), _arr(g, y)))


def g_compare(g: GroupExpr, x, y) -> Order:
    return Order(int(g._cmp(_arr(g, x), _arr(g, y))))


def g_le(g: GroupExpr, x, y) -> bool:
    return g_compare(g, x, y) in (Order.LT, Order.EQ)


def g_meet(g: GroupExpr, x, y) -> tuple[int, ...]:
    return _tup(g._meet(_arr(g, x), _arr(g, y)))


def g_join(g: GroupExpr, x, y) -> tuple[int, ...]:
    return _tup(g._join(_arr(g, x), _arr(g, y)))


def is_linear(g: GroupExpr) -> bool:
    return g.linear


def is_strong_unit(g: GroupExpr, u) -> bool:
    """Structural strong-unit test; ``u`` must be positive."""
    u = coerce_element(g, u)
    if not g_le(g, g.zero(), u):
        raise ValueError(f"{u} is not a positive element of {g}")
    return _strong(g, u)


def _strong(g: GroupExpr, u: tuple[int, ...]) -> bool:
    if isinstance(g, Trivial):
        return True
    if isinstance(g, ZZ):
        return u[0] > 0
    if isinstance(g, Heis):
        # a central unit (0,0,c) never dominates (1,0,0)
        return u[0] > 0
    if isinstance(g, Lex):
        k = g.head.dim
        if not k:
            return _strong(g.tail, u[k:])
        return _strong(g.head, u[:k])
    if isinstance(g, Direct):
        k, ok = 0, True
        for f in g.factors:
            ok = ok and _strong(f, u[k:k + f.dim])
            k += f.dim
        return ok
    raise TypeError(g)


def in_center(g: GroupExpr, x) -> bool:
    """True iff ``x`` commutes with every coordinate generator of ``g``."""
    a = _arr(g, x)
    basis = np.eye(g.dim, dtype=np.int64)
    if not g.dim:
        return True
    return bool(np.all(g._add(a, basis) == g._add(basis, a)))


@lru_cache(maxsize=256)
def _window_cached(dim: int, bound: int) -> np.ndarray:
    if not dim:
        return np.zeros((1, 0), dtype=np.int64)
    axes = np.arange(-bound, bound + 1, dtype=np.int64)
    grid = np.stack(np.meshgrid(*([axes] * dim), indexing="ij"), axis=-1)
    out = grid.reshape(-1, dim)
    out.setflags(write=False)
    return out


def window_array(g: GroupExpr, bound: int) -> np.ndarray:
    """All coordinate vectors in [-bound, bound]^dim, lexicographic order."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    return _window_cached(g.dim, bound)


def enumerate_window(g: GroupExpr, lo, hi, bound: int) -> Iterator[tuple[int, ...]]:
    """Elements of the order interval [lo, hi] with coordinates in [-bound, bound]."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    lo, hi = _arr(g, lo), _arr(g, hi)
    w = window_array(g, bound)
    keep = g._le(lo, w) & g._le(w, hi)
    for row in w[keep]:
        yield _tup(row)


# --- structural splitting ------------------------------------------------

def prefix_expr(g: GroupExpr, j: int) -> GroupExpr:
    """Group carried by the first ``j`` flat coordinates.

    Projection onto these coordinates is an order-preserving homomorphism
    onto the returned group; raises :class:`UnsupportedError` otherwise.
    """
    if j == 0:
        return O
    if j == g.dim:
        return g
    if not 0 < j < g.dim:
        raise ValueError(f"depth {j} outside 0..{g.dim}")
    if isinstance(g, Heis):
        return Z if j == 1 else Lex(Z, Z)
    if isinstance(g, Lex):
        k = g.head.dim
        if j <= k:
            return prefix_expr(g.head, j)
        return Lex(g.head, prefix_expr(g.tail, j - k))
    raise UnsupportedError(f"no lexicographic split of {g} after {j} coordinates")


def tail_expr(g: GroupExpr, j: int) -> GroupExpr:
    """Kernel of the projection onto the first ``j`` coordinates."""
    if j == 0:
        return g
    if j == g.dim:
        return O
    if not 0 < j < g.dim:
        raise ValueError(f"depth {j} outside 0..{g.dim}")
    if isinstance(g, Heis):
        return Lex(Z, Z) if j == 1 else Z
    if isinstance(g, Lex):
        k = g.head.dim
        if j < k:
            return Lex(tail_expr(g.head, j), g.tail)
        if j == k:
            return g.tail
        return tail_expr(g.tail, j - k)
    raise UnsupportedError(f"no lexicographic split of {g} after {j} coordinates")


def leading_z(g: GroupExpr) -> bool:
    """True when the order is decided first by a ``Z`` in coordinate 0."""
    if isinstance(g, ZZ):
        return True
    if isinstance(g, Lex):
        return leading_z(g.head) if g.head.dim else leading_z(g.tail)
    return False


# --- printing -----------------------------------------------------------

def _show(g: GroupExpr) -> str:
    if isinstance(g, Trivial):
        return "O"
    if isinstance(g, ZZ):
        return "Z"
    if isinstance(g, Heis):
        return "Heis"
    if isinstance(g, Lex):
        right = _show(g.tail)
        if isinstance(g.tail, Lex):
            right = f"({right})"
        return f"{_show(g.head)} lex {right}"
    if isinstance(g, Direct):
        if not g.factors:
            return "O"
        parts = []
        for f in g.factors:
            s = _show(f)
            parts.append(f"({s})" if isinstance(f, (Lex, Direct)) else s)
        return " x ".join(parts)
    raise TypeError(g)


def show_element(x: Sequence[int]) -> str:
    x = tuple(int(v) for v in x)
    return str(x[0]) if len(x) == 1 else "(" + ",".join(map(str, x)) + ")"


def _sort_simplest(w: np.ndarray) -> np.ndarray:
    """Order rows by L1 norm, ties broken lexicographically."""
    if not len(w) or not w.shape[1]:
        return w
    keys = [w[:, i] for i in reversed(range(w.shape[1]))] + [np.abs(w).sum(1)]
    return w[np.lexsort(keys)]


def all_small_matrices(rows: int, cols: int, k: int) -> Iterator[np.ndarray]:
    """Integer matrices with entries in [-k, k], simplest first."""
    n = rows * cols
    flat = sorted(itertools.product(range(-k, k + 1), repeat=n),
                  key=lambda v: (sum(map(abs, v)), v))
    for v in flat:
        yield np.array(v, dtype=np.int64).reshape(rows, cols)
