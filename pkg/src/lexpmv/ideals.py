"""Ideals of Γ(G, u): structural tail ideals, explicit ideals, quotients,
retraction searches and the lexicographic classification.

A tail ideal of depth ``j`` consists of the members whose first ``j`` flat
coordinates vanish.  Its quotient is realized structurally as
Γ(prefix group, prefix of u) with the coordinate projection as π.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

import numpy as np

from .gamma import PmvAlgebra, UnitalGroup, _tuple, first_false, pairs, run_law
from .groups import UnsupportedError, all_small_matrices, prefix_expr, show_element
from .report import Report

__all__ = [
    "IdealDesc", "tail_ideal", "explicit_ideal", "zero_ideal", "whole_ideal",
    "is_ideal", "is_normal", "normal_sets_literal", "is_prime", "is_strict",
    "QuotientAlgebra", "quotient", "check_quotient", "Section", "find_retraction",
    "find_weak_retraction", "all_retractions", "section_offset", "check_lex_conditions_iv_v",
    "Classification", "classify_ideal", "LEXICOGRAPHIC", "WEAKLY_LEXICOGRAPHIC", "NEITHER",
    "generated_subalgebra", "lex_ideal_comparability", "maximal_among_tails",
    "check_uniqueness_transfer", "ProperIdealError",
]

LEXICOGRAPHIC = "Lexicographic"
WEAKLY_LEXICOGRAPHIC = "WeaklyLexicographic"
NEITHER = "Neither"


class ProperIdealError(ValueError):
    """Classification requires {0} ≠ I ≠ M."""


@dataclass(frozen=True)
class IdealDesc:
    algebra: PmvAlgebra
    kind: str
    depth: int = 0
    predicate: Optional[Callable] = field(default=None, compare=False)
    name: str = ""

    def contains(self, x) -> np.ndarray:
        """Membership on coordinate arrays of shape (..., dim)."""
        m = self.algebra
        x = np.asarray(x, dtype=np.int64)
        inside = m.contains(x)
        if self.kind == "tail":
            return inside & np.all(x[..., :self.depth] == 0, axis=-1)
        return inside & np.asarray(self.predicate(x), dtype=bool)

    def __contains__(self, x) -> bool:
        return bool(self.contains(np.asarray(getattr(x, "value", x), dtype=np.int64)))

    @property
    def structural(self) -> bool:
        return self.kind == "tail"

    def __str__(self) -> str:
        return self.name or (f"tail:{self.depth}" if self.structural else "explicit")


def tail_ideal(m: PmvAlgebra, depth: int) -> IdealDesc:
    if not 1 <= depth < m.dim:
        raise ValueError(f"tail depth must lie in 1..{m.dim - 1}, got {depth}")
    prefix_expr(m.expr, depth)  # raises UnsupportedError when there is no split
    return IdealDesc(m, "tail", depth, name=f"tail:{depth}")


def explicit_ideal(m: PmvAlgebra, predicate: Callable, name: str = "explicit",
                   vectorized: bool = True) -> IdealDesc:
    """An ideal given by a membership predicate.

    With ``vectorized=False`` the predicate receives one flat tuple at a time.
    """
    if not vectorized:
        scalar = predicate

        def predicate(x):
            flat = x.reshape(-1, x.shape[-1])
            out = np.fromiter((bool(scalar(_tuple(r))) for r in flat), bool, len(flat))
            return out.reshape(x.shape[:-1])
    return IdealDesc(m, "explicit", 0, predicate, name)


def zero_ideal(m: PmvAlgebra) -> IdealDesc:
    return explicit_ideal(m, lambda x: np.all(x == 0, axis=-1), "{0}")


def whole_ideal(m: PmvAlgebra) -> IdealDesc:
    return explicit_ideal(m, lambda x: np.ones(x.shape[:-1], bool), "M")


def _bounds(w, bound, **extra):
    return {"bound": bound, "window_size": len(w), **extra}


# --- ideal properties -------------------------------------------------------------

def is_ideal(ideal: IdealDesc, bound: int = 3) -> Report:
    """Contains 0, downward closed and closed under ⊕ on the window."""
    m, inI = ideal.algebra, ideal.contains
    rep = Report("is-ideal", data={"algebra": str(m), "ideal": str(ideal)})
    with rep.timed():
        w = m.window(bound)
        b = _bounds(w, bound)
        rep.add("contains-zero", bool(inI(m.zero_arr)), {"x": m.zero_arr}, b)
        bad = run_law(w, 2, lambda a, c: ~(m.le(a, c) & inI(c)) | inI(a), ("a", "b"))
        rep.add("downward-closed", bad is None, bad, b)
        bad = run_law(w, 2, lambda a, c: ~(inI(a) & inI(c)) | inI(m.oplus(a, c)), ("a", "b"))
        rep.add("oplus-closed", bad is None, bad, b)
    return rep


def _left_coset(ideal, x, y):
    """y ∈ x ⊕ I, decided exactly: x ≤ y and -x + y ∈ I."""
    m = ideal.algebra
    return m.le(x, y) & ideal.contains(m.add(m.neg(x), y))


def _right_coset(ideal, x, y):
    """y ∈ I ⊕ x, decided exactly: x ≤ y and y - x ∈ I."""
    m = ideal.algebra
    return m.le(x, y) & ideal.contains(m.sub(y, x))


def is_normal(ideal: IdealDesc, bound: int = 3) -> Report:
    """x ⊕ I = I ⊕ x, both sides intersected with the window.

    Because I is downward closed, x ⊕ i = x + (x∼ ∧ i), so x ⊕ I is exactly
    {y ≥ x : -x + y ∈ I}; symmetrically I ⊕ x = {y ≥ x : y - x ∈ I}.  Each
    windowed y is therefore tested for membership in both sets without
    truncation effects from elements i outside the window.
    """
    m = ideal.algebra
    rep = Report("is-normal", data={"algebra": str(m), "ideal": str(ideal)})
    with rep.timed():
        w = m.window(bound)
        bad = run_law(w, 2, lambda x, y: _left_coset(ideal, x, y) == _right_coset(ideal, x, y),
                      ("x", "y"))
        rep.add("cosets-agree", bad is None, bad, _bounds(w, bound))
    return rep


def normal_sets_literal(ideal: IdealDesc, x, bound: int = 3) -> tuple[set, set]:
    """The sets {x ⊕ i} and {i ⊕ x} for windowed i ∈ I, cut down to the window."""
    m = ideal.algebra
    w = m.window(bound)
    members = w[ideal.contains(w)]
    x = np.asarray(x, dtype=np.int64)
    keep = {_tuple(r) for r in w}
    left = {_tuple(r) for r in m.oplus(x, members)} & keep
    right = {_tuple(r) for r in m.oplus(members, x)} & keep
    return left, right


def is_prime(ideal: IdealDesc, bound: int = 3) -> Report:
    m, inI = ideal.algebra, ideal.contains
    rep = Report("is-prime", data={"algebra": str(m), "ideal": str(ideal)})
    with rep.timed():
        w = m.window(bound)
        bad = run_law(w, 2, lambda x, y: ~inI(m.meet(x, y)) | inI(x) | inI(y), ("x", "y"))
        rep.add("prime", bad is None, bad, _bounds(w, bound))
    return rep


def quotient_le(ideal: IdealDesc, x, y):
    """x/I ≤ y/I iff x ⊙ y⁻ ∈ I."""
    m = ideal.algebra
    return ideal.contains(m.odot(x, m.lneg(y)))


def is_strict(ideal: IdealDesc, bound: int = 3) -> Report:
    """x/I < y/I forces x < y."""
    m = ideal.algebra
    rep = Report("is-strict", data={"algebra": str(m), "ideal": str(ideal)})
    with rep.timed():
        w = m.window(bound)

        def law(x, y):
            q_lt = quotient_le(ideal, x, y) & ~quotient_le(ideal, y, x)
            return ~q_lt | m.lt(x, y)
        bad = run_law(w, 2, law, ("x", "y"))
        rep.add("strict", bad is None, bad, _bounds(w, bound))
    return rep


# --- quotients ------------------------------------------------------------------

@dataclass(frozen=True)
class QuotientAlgebra:
    ideal: IdealDesc
    algebra: PmvAlgebra

    @property
    def depth(self) -> int:
        return self.ideal.depth

    def project(self, x) -> np.ndarray:
        return np.asarray(x, dtype=np.int64)[..., :self.depth]

    def lift_shape(self) -> int:
        return self.ideal.algebra.dim - self.depth

    def __str__(self) -> str:
        return str(self.algebra)


def quotient(ideal: IdealDesc) -> QuotientAlgebra:
    if not ideal.structural:
        raise UnsupportedError("explicit ideals have no structural quotient")
    m, j = ideal.algebra, ideal.depth
    head = prefix_expr(m.expr, j)
    return QuotientAlgebra(ideal, PmvAlgebra(UnitalGroup(head, m.unit[:j])))


def _preimage_window(m: PmvAlgebra, bound: int) -> np.ndarray:
    return m.window(max(bound, max(map(abs, m.unit), default=0)))


def check_quotient(ideal: IdealDesc, bound: int = 3) -> Report:
    """π is a surjective homomorphism whose kernel classes are the congruence classes."""
    m = ideal.algebra
    rep = Report("quotient", data={"algebra": str(m), "ideal": str(ideal)})
    with rep.timed():
        if not ideal.structural:
            rep.unsupported("structural-quotient", "explicit ideals have no structural quotient")
            return rep
        q = quotient(ideal)
        qa, p = q.algebra, q.project
        rep.data["quotient"] = str(qa)
        w = m.window(bound)
        b = _bounds(w, bound)
        bad = run_law(w, 1, lambda x: qa.contains(p(x)), ("x",))
        rep.add("projection-lands", bad is None, bad, b)
        rep.add("unit", bool(qa.eq(p(m.u), qa.u)), {"pi(1)": p(m.u)}, b)
        for name, f, g in [("lneg", m.lneg, qa.lneg), ("rneg", m.rneg, qa.rneg)]:
            bad = run_law(w, 1, lambda x: qa.eq(p(f(x)), g(p(x))), ("x",))
            rep.add(f"preserves-{name}", bad is None, bad, b)
        for name, f, g in [("oplus", m.oplus, qa.oplus), ("odot", m.odot, qa.odot),
                           ("meet", m.meet, qa.meet), ("join", m.join, qa.join)]:
            bad = run_law(w, 2, lambda x, y: qa.eq(p(f(x, y)), g(p(x), p(y))), ("x", "y"))
            rep.add(f"preserves-{name}", bad is None, bad, b)
        images = {_tuple(r) for r in p(_preimage_window(m, bound))}
        missing = next((t for t in map(_tuple, qa.window(bound)) if t not in images), None)
        rep.add("surjective", missing is None, {"t": missing}, b)

        def congruence(x, y):
            d = m.oplus(m.odot(x, m.lneg(y)), m.odot(y, m.lneg(x)))
            return ideal.contains(d) == qa.eq(p(x), p(y))
        bad = run_law(w, 2, congruence, ("x", "y"))
        rep.add("congruence-classes", bad is None, bad, b)
        bad = run_law(w, 1, lambda x: ideal.contains(x) == qa.eq(p(x), qa.zero_arr), ("x",))
        rep.add("kernel", bad is None, bad, b)
    return rep


# --- sections --------------------------------------------------------------------

@dataclass(frozen=True)
class Section:
    """δ(t) = (t, A·t), with optional per-point overrides of the full value."""
    depth: int
    matrix: tuple
    overrides: tuple = ()

    @classmethod
    def linear(cls, a) -> "Section":
        a = np.asarray(a, dtype=np.int64)
        return cls(a.shape[1], tuple(tuple(int(v) for v in row) for row in a))

    @classmethod
    def canonical(cls, depth: int, tail_dim: int) -> "Section":
        return cls(depth, tuple((0,) * depth for _ in range(tail_dim)))

    @classmethod
    def from_family(cls, depth: int, tail_dim: int, family: dict) -> "Section":
        """Explicit c_t values; points not listed fall back to (t, 0)."""
        over = tuple(sorted((tuple(_as_tuple(t)), tuple(_as_tuple(c)))
                            for t, c in family.items()))
        return cls(depth, tuple((0,) * depth for _ in range(tail_dim)), over)

    @property
    def a(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64).reshape(len(self.matrix), self.depth)

    def __call__(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=np.int64)
        tail = t @ self.a.T
        out = np.concatenate([t, tail], axis=-1)
        if self.overrides:
            out = out.copy()
            for key, val in self.overrides:
                hit = np.all(t == np.asarray(key), axis=-1)
                out[hit] = val
        return out

    def to_dict(self) -> dict:
        return {"depth": self.depth, "matrix": [list(r) for r in self.matrix],
                "overrides": [[list(k), list(v)] for k, v in self.overrides]}

    def describe(self) -> str:
        if self.overrides:
            return ", ".join(f"c{show_element(k)}={show_element(v)}" for k, v in self.overrides)
        return f"delta(t) = (t, A t), A = {[list(r) for r in self.matrix]}"


def _as_tuple(v) -> tuple:
    if isinstance(v, (int, np.integer)):
        return (int(v),)
    return tuple(int(x) for x in v)


def _section_probes(q: QuotientAlgebra, bound: int) -> np.ndarray:
    return q.algebra.window(max(bound, max(map(abs, q.algebra.unit), default=0)))


def _section_basics(q: QuotientAlgebra, d: Section, probes) -> Optional[dict]:
    m = q.ideal.algebra
    c = d(probes)
    ok = m.contains(c) & q.algebra.eq(q.project(c), probes)
    i = first_false(ok)
    return None if i is None else {"t": probes[i], "delta(t)": c[i]}


def _homomorphism_failure(q: QuotientAlgebra, d: Section, probes) -> Optional[dict]:
    m, qa = q.ideal.algebra, q.algebra
    bad = _section_basics(q, d, probes)
    if bad is not None:
        return {"law": "section", **bad}
    if not bool(m.eq(d(qa.u), m.u)):
        return {"law": "unit", "delta(1)": d(qa.u)}
    for name, f, g in [("lneg", qa.lneg, m.lneg), ("rneg", qa.rneg, m.rneg)]:
        i = first_false(m.eq(d(f(probes)), g(d(probes))))
        if i is not None:
            return {"law": name, "t": probes[i]}
    s, t = pairs(probes)
    i = first_false(m.eq(d(qa.oplus(s, t)), m.oplus(d(s), d(t))))
    if i is not None:
        return {"law": "oplus", "s": s[i], "t": t[i]}
    return None


def _weak_failure(q: QuotientAlgebra, d: Section, probes) -> Optional[dict]:
    m, qa = q.ideal.algebra, q.algebra
    bad = _section_basics(q, d, probes)
    if bad is not None:
        return {"law": "section", **bad}
    s, t = pairs(probes)
    defined = qa.sum_defined(s, t)
    ds, dt = d(s), d(t)
    ok = ~defined | (m.sum_defined(ds, dt) & m.eq(d(qa.add(s, t)), m.add(ds, dt)))
    i = first_false(ok)
    if i is not None:
        return {"law": "additive", "s": s[i], "t": t[i]}
    return None


def _candidates(q: QuotientAlgebra, k: int) -> Iterator[Section]:
    rows = q.ideal.algebra.dim - q.depth
    for a in all_small_matrices(rows, q.depth, k):
        yield Section.linear(a)


def all_retractions(ideal: IdealDesc, search: int = 5, bound: int = 3,
                    weak: bool = False, lex_conditions: bool = False) -> Iterator[Section]:
    """Every linear section with |A| ≤ search passing the requested tests, simplest first."""
    q = quotient(ideal)
    probes = _section_probes(q, bound)
    fail = _weak_failure if weak else _homomorphism_failure
    for d in _candidates(q, search):
        if fail(q, d, probes) is None:
            if lex_conditions and not check_lex_conditions_iv_v(ideal, d, bound).passed:
                continue
            yield d


def find_retraction(ideal: IdealDesc, search: int = 5, bound: int = 3,
                    lex_conditions: bool = False) -> Optional[Section]:
    """First section δ(t) = (t, A·t), |A| ≤ search, that is a homomorphism on probes."""
    return next(all_retractions(ideal, search, bound, False, lex_conditions), None)


def section_offset(ideal: IdealDesc, d: Section) -> tuple:
    """b = 1 - δ(u), a group element whose prefix is 0."""
    m = ideal.algebra
    uq = m.u[:ideal.depth]
    return _tuple(m.sub(m.u, d(uq)))


def find_weak_retraction(ideal: IdealDesc, search: int = 5, bound: int = 3,
                         lex_conditions: bool = False) -> Optional[tuple[Section, tuple]]:
    """First section additive on defined quotient sums, with its offset b."""
    d = next(all_retractions(ideal, search, bound, True, lex_conditions), None)
    return None if d is None else (d, section_offset(ideal, d))


def check_section(ideal: IdealDesc, d: Section, bound: int = 3, weak: bool = False) -> Report:
    q = quotient(ideal)
    probes = _section_probes(q, bound)
    bad = (_weak_failure if weak else _homomorphism_failure)(q, d, probes)
    rep = Report("section", data={"section": d.to_dict()})
    rep.add("weakly-retractive" if weak else "retractive", bad is None, bad,
            {"bound": bound, "probes": len(probes)})
    return rep


def check_lex_conditions_iv_v(ideal: IdealDesc, d: Section, bound: int = 3) -> Report:
    """The two group identities tying the section to the ambient group.

    (iv) (x + y) - δ(s+t) = (x - δ(s)) + (y - δ(t)) whenever s + t ≤ u
    (v)  x - δ(t) = -δ(t) + x
    with s = π(x), t = π(y) and all operations in the group.
    """
    m = ideal.algebra
    q = quotient(ideal)
    qa, p = q.algebra, q.project
    rep = Report("lex-conditions", data={"ideal": str(ideal), "section": d.to_dict()})
    with rep.timed():
        w = m.window(bound)
        b = _bounds(w, bound)
        bad = _section_basics(q, d, _section_probes(q, bound))
        rep.add("section-projects", bad is None, bad, b)
        if bad is not None:
            return rep

        def iv(x, y):
            s, t = p(x), p(y)
            st = qa.add(s, t)
            relevant = qa.le(st, qa.u)
            lhs = m.sub(m.add(x, y), d(st))
            rhs = m.add(m.sub(x, d(s)), m.sub(y, d(t)))
            return ~relevant | m.eq(lhs, rhs)

        def v(x):
            c = d(p(x))
            return m.eq(m.sub(x, c), m.add(m.neg(c), x))
        bad = run_law(w, 2, iv, ("x", "y"))
        rep.add("condition-iv", bad is None, bad, b)
        bad = run_law(w, 1, v, ("x",))
        rep.add("condition-v", bad is None, bad, b)
    return rep


# --- classification ----------------------------------------------------------------

@dataclass
class Classification:
    label: str
    report: Report
    section: Optional[Section] = None
    weak_section: Optional[Section] = None
    offset: Optional[tuple] = None


def _require_proper(ideal: IdealDesc, bound: int):
    m = ideal.algebra
    if bool(ideal.contains(m.u)):
        raise ProperIdealError("classification needs I ≠ M")
    w = m.window(bound)
    if not np.any(ideal.contains(w) & ~m.eq(w, m.zero_arr)):
        raise ProperIdealError("classification needs I ≠ {0}")


def classify_ideal(ideal: IdealDesc, search: int = 5, bound: int = 3) -> Classification:
    """Strongest of Lexicographic / WeaklyLexicographic / Neither, with evidence.

    A missing section within the search bound is recorded as "unsupported"
    (not found, not disproved); a failed ideal property is a real witness.
    """
    _require_proper(ideal, bound)
    m = ideal.algebra
    rep = Report("classify", data={"algebra": str(m), "ideal": str(ideal)})
    with rep.timed():
        for sub in (is_ideal, is_normal, is_strict, is_prime):
            r = sub(ideal, bound)
            rep.merge(r, prefix=r.command + ":")
        basics = all(c.passed for c in rep.checks)
        label = NEITHER
        strong = weak = offset = None
        if not ideal.structural:
            rep.unsupported("retractive", "section search needs a structural quotient")
            rep.unsupported("weakly-retractive", "section search needs a structural quotient")
        else:
            rep.data["quotient"] = str(quotient(ideal).algebra)
            bnds = {"bound": bound, "search": search}
            strong = find_retraction(ideal, search, bound, lex_conditions=True)
            if strong is not None:
                rep.add("retractive", True, bounds=bnds, note=strong.describe())
                weak = strong
            else:
                rep.unsupported("retractive",
                                f"no section with |A| <= {search} is a homomorphism "
                                "satisfying conditions (iv)-(v)", bnds)
                found = find_weak_retraction(ideal, search, bound, lex_conditions=True)
                weak = found[0] if found else None
                if weak is not None:
                    rep.add("weakly-retractive", True, bounds=bnds, note=weak.describe())
                else:
                    rep.unsupported("weakly-retractive",
                                    f"no additive section with |A| <= {search} satisfying "
                                    "conditions (iv)-(v)", bnds)
            chosen = strong or weak
            if chosen is None:
                # show why the nearest candidate is rejected
                chosen = find_retraction(ideal, search, bound)
                if chosen is None:
                    found = find_weak_retraction(ideal, search, bound)
                    chosen = found[0] if found else None
            if chosen is not None:
                rep.merge(check_lex_conditions_iv_v(ideal, chosen, bound), prefix="section:")
                offset = section_offset(ideal, chosen)
                rep.data["section"] = chosen.to_dict()
                rep.data["b"] = list(offset)
            if basics and strong is not None:
                label = LEXICOGRAPHIC
            elif basics and weak is not None:
                label = WEAKLY_LEXICOGRAPHIC
        rep.data["label"] = label
    return Classification(label, rep, strong, weak, offset)


# --- ⟨I⟩, comparability, maximality ----------------------------------------------

def generated_subalgebra(ideal: IdealDesc, bound: int = 3):
    """⟨I⟩ = I ∪ I⁻ with its checks.

    Returns ``(membership, report)``; raises ValueError when I⁻ ≠ I∼ on the window.
    """
    m, inI = ideal.algebra, ideal.contains
    w = m.window(bound)
    b = _bounds(w, bound)
    members = w[inI(w)]
    # i⁻ ∈ I∼ iff (i⁻)⁻ ∈ I, and i∼ ∈ I⁻ iff (i∼)∼ ∈ I
    ok = inI(m.lneg(m.lneg(members))) & inI(m.rneg(m.rneg(members)))
    i = first_false(ok)
    if i is not None:
        raise ValueError(f"I⁻ ≠ I∼: witness {show_element(members[i])}")

    def member(x):
        x = np.asarray(x, dtype=np.int64)
        return inI(x) | inI(m.rneg(x))

    def upper(x):
        return ~inI(x) & inI(m.rneg(x))

    rep = Report("generated-subalgebra", data={"algebra": str(m), "ideal": str(ideal)})
    with rep.timed():
        rep.add("contains-0-and-1", bool(member(m.zero_arr) & member(m.u)), {"x": m.u}, b)
        sub = w[member(w)]
        rep.data["window_members"] = len(sub)
        for name, f in [("lneg", m.lneg), ("rneg", m.rneg)]:
            bad = run_law(sub, 1, lambda x: member(f(x)), ("x",))
            rep.add(f"closed-{name}", bad is None, bad, b)
        bad = run_law(sub, 2, lambda x, y: member(m.oplus(x, y)), ("x", "y"))
        rep.add("closed-oplus", bad is None, bad, b)
        # two-slice decomposition M0 = I, M1 = I⁻ over Γ(Z, 1)
        bad = run_law(sub, 1, lambda x: ~(inI(x) & inI(m.rneg(x))), ("x",))
        rep.add("slices-disjoint", bad is None, bad, b)
        bad = run_law(sub, 2, lambda x, y: ~(inI(x) & upper(y)) | m.lt(x, y), ("x", "y"))
        rep.add("slices-ordered", bad is None, bad, b)

        def negations(x):
            lo = inI(x)
            return np.where(lo, upper(m.lneg(x)) & upper(m.rneg(x)),
                            inI(m.lneg(x)) & inI(m.rneg(x)))
        bad = run_law(sub, 1, negations, ("x",))
        rep.add("slice-negations", bad is None, bad, b)

        def sums(x, y):
            both_low = inI(x) & inI(y)
            r = m.oplus(x, y)
            return np.where(both_low, inI(r), upper(r))
        bad = run_law(sub, 2, sums, ("x", "y"))
        rep.add("slice-sums", bad is None, bad, b)
    return member, rep


def lex_ideal_comparability(i1: IdealDesc, i2: IdealDesc, bound: int = 3) -> Report:
    m = i1.algebra
    if i2.algebra != m:
        raise ValueError("ideals of different algebras")
    rep = Report("comparability", data={"algebra": str(m), "I": str(i1), "J": str(i2)})
    with rep.timed():
        w = m.window(bound)
        a, b = i1.contains(w), i2.contains(w)
        i_in_j, j_in_i = bool(np.all(~a | b)), bool(np.all(~b | a))
        rep.data["I<=J"], rep.data["J<=I"] = i_in_j, j_in_i
        rep.data["relation"] = ("equal" if i_in_j and j_in_i else "I<=J" if i_in_j
                                else "J<=I" if j_in_i else "incomparable")
        wit = None
        if not (i_in_j or j_in_i):
            wit = {"in_I_not_J": w[np.flatnonzero(a & ~b)[0]],
                   "in_J_not_I": w[np.flatnonzero(b & ~a)[0]]}
        rep.add("comparable", i_in_j or j_in_i, wit, _bounds(w, bound))
    return rep


def maximal_among_tails(ideal: IdealDesc, bound: int = 3) -> Report:
    """No strictly larger proper tail ideal exists (windowed)."""
    m = ideal.algebra
    rep = Report("maximal-among-tails", data={"ideal": str(ideal)})
    w = m.window(bound)
    larger = None
    for k in range(1, ideal.depth):
        try:
            other = tail_ideal(m, k)
        except UnsupportedError:
            continue
        a, b = ideal.contains(w), other.contains(w)
        if np.all(~a | b) and np.any(b & ~a):
            larger = {"depth": k}
            break
    rep.add("maximal", larger is None, larger, _bounds(w, bound))
    return rep


def check_uniqueness_transfer(ideal: IdealDesc, search: int = 3, bound: int = 3,
                              limit: int = 8) -> Report:
    """All (weak) retractions found induce the same slices.

    A section δ induces the family M'_t = {x : x ≡ δ(t) mod I}, read off
    through the congruence x ⊙ y⁻ ⊕ y ⊙ x⁻ ∈ I rather than through π.  Every
    windowed x must sit in M'_t exactly for t = π(x), whichever section is used.
    """
    m = ideal.algebra
    q = quotient(ideal)
    rep = Report("uniqueness-transfer", data={"ideal": str(ideal)})
    with rep.timed():
        w = m.window(bound)
        probes = _section_probes(q, bound)
        secs = list(itertools.islice(all_retractions(ideal, search, bound, weak=True), limit))
        rep.data["sections"] = len(secs)
        bad = None
        for d in secs:
            for t, c in zip(probes, d(probes)):
                cong = ideal.contains(m.oplus(m.odot(w, m.lneg(c)), m.odot(c, m.lneg(w))))
                same = q.algebra.eq(q.project(w), t)
                i = first_false(cong == same)
                if i is not None:
                    bad = {"x": w[i], "t": t, "section": d.to_dict()}
                    break
            if bad:
                break
        if not secs:
            rep.unsupported("slices-agree", f"no weak retraction with |A| <= {search}")
        else:
            rep.add("slices-agree", bad is None, bad, _bounds(w, bound, search=search))
    return rep
