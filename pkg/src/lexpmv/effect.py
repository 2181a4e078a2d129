"""The partial sum induced on Γ(G, u) and its pseudo effect algebra structure.

x + y is defined exactly when x ≤ y⁻ (that is y ⊙ x = 0), and then equals
x ⊕ y, which is also the group sum.  Differences are the group ones: ``b ∖li a = b - a`` and
``a ∖re b = -a + b``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .gamma import PmvAlgebra, PmvElement, _same, _tuple, pairs, run_law
from .groups import UnsupportedError, leading_z
from .report import Report

__all__ = [
    "PartialSum", "partial_add", "minus_li", "minus_re", "check_pe_axioms",
    "rdp2_witness", "check_rdp2", "oplus_from_effect", "effect_oplus", "check_oplus_agreement",
    "State", "canonical_state", "check_state",
]


@dataclass(frozen=True)
class PartialSum:
    defined: bool
    value: Optional[PmvElement] = None

    def __bool__(self) -> bool:
        return self.defined


def partial_add(x: PmvElement, y: PmvElement) -> PartialSum:
    m = _same(x, y)
    if not bool(m.sum_defined(x.arr, y.arr)):
        return PartialSum(False)
    return PartialSum(True, x._wrap(m.oplus(x.arr, y.arr)))


def _need_le(a: PmvElement, b: PmvElement):
    m = _same(a, b)
    if not bool(m.le(a.arr, b.arr)):
        raise ValueError(f"{a} is not below {b}")
    return m


def minus_li(b: PmvElement, a: PmvElement) -> PmvElement:
    """b ∖li a = b + (-a), the element d with d + a = b."""
    m = _need_le(a, b)
    return b._wrap(m.sub(b.arr, a.arr))


def minus_re(a: PmvElement, b: PmvElement) -> PmvElement:
    """a ∖re b = (-a) + b, the element c with a + c = b."""
    m = _need_le(a, b)
    return b._wrap(m.add(m.neg(a.arr), b.arr))


# --- PE1–PE4 ------------------------------------------------------------------

def _pe_laws(m: PmvAlgebra):
    e, s, d = m.eq, m.oplus, m.sum_defined
    one, zero = m.u, m.zero_arr

    def pe1(a, b, c):
        left = d(a, b) & d(s(a, b), c)
        right = d(b, c) & d(a, s(b, c))
        return (left == right) & (~left | e(s(s(a, b), c), s(a, s(b, c))))

    def pe2_exists(a):
        dd, ee = m.rneg(a), m.lneg(a)
        return (m.contains(dd) & m.contains(ee) & d(a, dd) & e(s(a, dd), one)
                & d(ee, a) & e(s(ee, a), one))

    def pe2_unique(a, x):
        right = d(a, x) & e(s(a, x), one)
        left = d(x, a) & e(s(x, a), one)
        return (~right | e(x, m.rneg(a))) & (~left | e(x, m.lneg(a)))

    def pe3(a, b):
        ab = s(a, b)
        dd = m.sub(ab, a)
        ee = m.add(m.neg(b), ab)
        ok = (m.contains(dd) & m.contains(ee) & d(dd, a) & e(s(dd, a), ab)
              & d(b, ee) & e(s(b, ee), ab))
        return ~d(a, b) | ok

    def pe4(a):
        return ~(d(a, one) | d(one, a)) | e(a, zero)

    def recomposition(a, b):
        below = m.le(a, b)
        li, re = m.sub(b, a), m.add(m.neg(a), b)
        ok = (m.contains(li) & m.contains(re) & d(li, a) & e(s(li, a), b)
              & d(a, re) & e(s(a, re), b))
        return ~below | ok

    return [
        ("PE1", 3, pe1, ("a", "b", "c")),
        ("PE2-existence", 1, pe2_exists, ("a",)),
        ("PE2-uniqueness", 2, pe2_unique, ("a", "x")),
        ("PE3", 2, pe3, ("a", "b")),
        ("PE4", 1, pe4, ("a",)),
        ("recomposition", 2, recomposition, ("a", "b")),
    ]


def check_pe_axioms(m: PmvAlgebra, bound: int = 3) -> Report:
    """Windowed PE1–PE4 plus the recomposition identities for the differences.

    Definedness always goes through ``m.sum_defined`` so that a structure
    with a different partial sum is checked on its own terms.
    """
    rep = Report("pe-axioms", data={"algebra": str(m)})
    with rep.timed():
        w = m.window(bound)
        bounds = {"bound": bound, "window_size": len(w)}
        for name, arity, law, names in _pe_laws(m):
            bad = run_law(w, arity, law, names)
            rep.add(name, bad is None, bad, bounds)
    return rep


# --- RDP2 ---------------------------------------------------------------------

def _rdp2_search(m: PmvAlgebra, w: np.ndarray, a1, a2, b1, b2) -> Optional[np.ndarray]:
    c11 = w
    c12 = m.add(m.neg(c11), a1)
    c21 = m.add(m.neg(c11), b1)
    c22 = m.add(m.neg(c21), a2)
    d, s, e = m.sum_defined, m.oplus, m.eq
    ok = (m.contains(c12) & m.contains(c21) & m.contains(c22)
          & d(c11, c12) & e(s(c11, c12), a1)
          & d(c21, c22) & e(s(c21, c22), a2)
          & d(c11, c21) & e(s(c11, c21), b1)
          & d(c12, c22) & e(s(c12, c22), b2)
          & e(m.meet(c12, c21), m.zero_arr))
    hit = np.flatnonzero(ok)
    if not len(hit):
        return None
    i = hit[0]
    return np.stack([c11[i], c12[i], c21[i], c22[i]])


def rdp2_witness(a1: PmvElement, a2: PmvElement, b1: PmvElement, b2: PmvElement,
                 bound: int = 3) -> Optional[tuple[PmvElement, ...]]:
    """(c11, c12, c21, c22) refining a1 + a2 = b1 + b2, searched over the window.

    c11 ranges over the window; the other three are then forced by the
    decomposition equations.
    """
    m = a1.algebra
    for v in (a2, b1, b2):
        _same(a1, v)
    l, r = partial_add(a1, a2), partial_add(b1, b2)
    if not (l and r and l.value == r.value):
        raise ValueError("a1 + a2 and b1 + b2 must both be defined and equal")
    found = _rdp2_search(m, m.window(bound), a1.arr, a2.arr, b1.arr, b2.arr)
    return None if found is None else tuple(a1._wrap(c) for c in found)


def check_rdp2(m: PmvAlgebra, bound: int = 3) -> Report:
    """Every windowed instance a1 + a2 = b1 + b2 must have a refinement in the window."""
    rep = Report("rdp2", data={"algebra": str(m)})
    with rep.timed():
        w = m.window(bound)
        x, y = pairs(w)
        ok = m.sum_defined(x, y)
        x, y = x[ok], y[ok]
        sums = m.oplus(x, y)
        groups: dict[tuple, list[int]] = {}
        for i, s in enumerate(map(_tuple, sums)):
            groups.setdefault(s, []).append(i)
        instances = 0
        missing = None
        for idx in groups.values():
            for i in idx:
                for j in idx:
                    instances += 1
                    if _rdp2_search(m, w, x[i], y[i], x[j], y[j]) is None and missing is None:
                        missing = {"a1": x[i], "a2": y[i], "b1": x[j], "b2": y[j]}
        rep.add("RDP2", missing is None, missing,
                {"bound": bound, "window_size": len(w), "instances": instances},
                note="search space is the window")
        rep.data["instances"] = instances
    return rep


# --- ⊕ recovered from the partial structure -----------------------------------

def effect_oplus(m: PmvAlgebra, a, b):
    """(b⁻ ∖li (a ∧ b⁻))∼ on coordinate arrays."""
    bl = m.lneg(b)
    return m.rneg(m.sub(bl, m.meet(a, bl)))


def oplus_from_effect(a: PmvElement, b: PmvElement) -> PmvElement:
    return a._wrap(effect_oplus(_same(a, b), a.arr, b.arr))


def check_oplus_agreement(m: PmvAlgebra, bound: int = 3) -> Report:
    """⊕ rebuilt from the partial sum agrees with the direct ⊕ on the window."""
    rep = Report("oplus-from-effect", data={"algebra": str(m)})
    with rep.timed():
        w = m.window(bound)
        bad = run_law(w, 2, lambda a, b: m.eq(effect_oplus(m, a, b), m.oplus(a, b)), ("a", "b"))
        rep.add("oplus-agreement", bad is None, bad, {"bound": bound, "window_size": len(w)})
    return rep


# --- states --------------------------------------------------------------------

@dataclass(frozen=True)
class State:
    algebra: PmvAlgebra
    fn: Callable[[tuple], Fraction]
    name: str = "state"

    def __call__(self, x) -> Fraction:
        if isinstance(x, PmvElement):
            x = x.value
        return self.fn(tuple(int(v) for v in x))

    def kernel_contains(self, x) -> bool:
        return self(x) == 0


def canonical_state(m: PmvAlgebra) -> State:
    """s(x) = x[0] / u[0] for algebras whose order is led by a ``Z`` coordinate."""
    if not leading_z(m.expr):
        raise UnsupportedError(f"no constructive state for {m.expr}")
    u0 = m.unit[0]
    if u0 == 0:
        raise ValueError("leading coordinate of the unit is 0")
    return State(m, lambda x: Fraction(x[0], u0), "leading-coordinate")


def check_state(s: State, bound: int = 3, zero_set: Callable | None = None) -> Report:
    """Normalization, exact additivity on defined windowed sums, values in [0, 1].

    ``zero_set`` is an optional array predicate; its windowed members must lie
    in the kernel.
    """
    m = s.algebra
    rep = Report("state", data={"algebra": str(m), "state": s.name})
    with rep.timed():
        w = m.window(bound)
        bounds = {"bound": bound, "window_size": len(w)}
        rep.add("normalized", s(m.unit) == 1, {"s(1)": str(s(m.unit))}, bounds)
        vals = {_tuple(r): s(r) for r in w}
        bad = next(({"x": list(k), "s(x)": str(v)} for k, v in vals.items()
                    if not 0 <= v <= 1), None)
        rep.add("range", bad is None, bad, bounds)
        x, y = pairs(w)
        ok = m.sum_defined(x, y)
        bad = None
        for a, b, c in zip(x[ok], y[ok], m.oplus(x[ok], y[ok])):
            if s(c) != s(a) + s(b):
                bad = {"x": a, "y": b}
                break
        rep.add("additive", bad is None, bad, bounds)
        if zero_set is not None:
            members = w[np.asarray(zero_set(w), dtype=bool)]
            i = next((k for k, r in enumerate(members) if s(r) != 0), None)
            rep.add("kernel-contains", i is None, None if i is None else {"x": members[i]},
                    bounds)
        kernel = w[[vals[_tuple(r)] == 0 for r in w]] if len(w) else w
        rep.data["kernel_window_size"] = len(kernel)
    return rep

