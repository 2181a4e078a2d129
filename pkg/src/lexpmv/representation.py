"""(H,u)-decompositions and the representation x ↦ (t, x - c_t).

Given a tail ideal I of depth j, the slices are M_t = π⁻¹(t) for t in the
structural quotient Γ(H, u_H).  A section t ↦ c_t turns the decomposition
into an isomorphism onto Γ(H lex G, (u_H, b)) with b = 1 - c_u.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Union

import numpy as np

from .effect import canonical_state, check_state
from .gamma import (PmvAlgebra, PmvElement, UnitalGroup, _tuple, first_false,
                    multiples_defined, pairs, run_law)
from .groups import (GroupExpr, Lex, UnsupportedError, coerce_element, is_linear, leading_z,
                     prefix_expr, show_element, tail_expr)
from .ideals import (IdealDesc, QuotientAlgebra, Section, _section_basics, _section_probes,
                     check_lex_conditions_iv_v, check_quotient, check_uniqueness_transfer,
                     find_retraction, find_weak_retraction, is_ideal, is_normal, is_prime,
                     quotient, section_offset, tail_ideal)
from .report import Report

__all__ = [
    "DecompositionError", "Decomposition", "build_decomposition", "check_theorem_3_2",
    "check_strong_perfect", "check_weak_perfect", "check_b_commutation",
    "RepresentationResult", "build_representation", "represent",
    "FunctorObject", "functor_object", "FunctorMorphism", "functor_morphism",
    "MorphismError", "check_isomorphism", "linear_map",
]


class DecompositionError(ValueError):
    def __init__(self, message: str, report: Report):
        super().__init__(message)
        self.report = report


class MorphismError(ValueError):
    def __init__(self, message: str, report: Report):
        super().__init__(message)
        self.report = report


@dataclass
class Decomposition:
    algebra: PmvAlgebra
    ideal: IdealDesc
    quotient: QuotientAlgebra
    section: Optional[Section] = None
    report: Report = field(default_factory=lambda: Report("decomposition"))

    @property
    def depth(self) -> int:
        return self.ideal.depth

    @property
    def index(self) -> PmvAlgebra:
        """Γ(H, u) indexing the slices."""
        return self.quotient.algebra

    def slice_of(self, x) -> np.ndarray:
        return self.quotient.project(getattr(x, "arr", x))

    def in_slice(self, x, t) -> np.ndarray:
        return self.index.eq(self.slice_of(x), np.asarray(t, dtype=np.int64))

    def c(self, t) -> np.ndarray:
        if self.section is None:
            raise ValueError("decomposition has no section")
        return self.section(np.asarray(t, dtype=np.int64))


def build_decomposition(m: PmvAlgebra, ideal: Union[IdealDesc, int], bound: int = 3,
                        section: Optional[Section] = None) -> Decomposition:
    """Slices M_t = π⁻¹(t); raises DecompositionError when an invariant fails."""
    if isinstance(ideal, int):
        ideal = tail_ideal(m, ideal)
    if ideal.algebra != m:
        raise ValueError("ideal belongs to another algebra")
    q = quotient(ideal)
    d = Decomposition(m, ideal, q, section)
    qa = q.algebra
    rep = Report("decomposition", data={"algebra": str(m), "ideal": str(ideal),
                                        "index": str(qa)})
    with rep.timed():
        w = m.window(bound)
        b = {"bound": bound, "window_size": len(w)}
        s = d.slice_of
        bad = run_law(w, 1, lambda x: qa.contains(s(x)), ("x",))
        rep.add("slice-total", bad is None, bad, b)
        pre = m.window(max(bound, max(map(abs, m.unit))))
        hit = {_tuple(r) for r in s(pre)}
        empty = next((t for t in map(_tuple, qa.window(bound)) if t not in hit), None)
        rep.add("slices-nonempty", empty is None, {"t": empty}, b)
        bad = run_law(w, 2, lambda x, y: ~qa.lt(s(x), s(y)) | m.lt(x, y), ("x", "y"))
        rep.add("a-ordered", bad is None, bad, b)
        bad = run_law(w, 1, lambda x: qa.eq(s(m.lneg(x)), qa.lneg(s(x)))
                      & qa.eq(s(m.rneg(x)), qa.rneg(s(x))), ("x",))
        rep.add("b-negations", bad is None, bad, b)
        bad = run_law(w, 2, lambda x, y: qa.eq(s(m.oplus(x, y)), qa.oplus(s(x), s(y))),
                      ("x", "y"))
        rep.add("c-oplus", bad is None, bad, b)
    d.report = rep
    if not rep.passed:
        raise DecompositionError(f"not an (H,u)-decomposition: {rep.first_failure().name}", rep)
    return d


# --- slice arithmetic -------------------------------------------------------------

def check_theorem_3_2(d: Decomposition, bound: int = 3, infinitesimal_n: int = 12,
                      search: int = 3) -> Report:
    """Windowed suite for the slice arithmetic of an (H,u)-decomposition.

    Items: (i) partial sums across slices, (ii) M_v + M_t = M_{v+t},
    (iii) undefined sums above u, (iv) join/meet slices, (v) a state killing M_0,
    (vi) M_0 normal, idempotent under +, infinitesimal, (vii) the quotient,
    (viii) slice uniqueness across sections, (ix) M_0 prime.
    """
    m, qa, s, inI = d.algebra, d.index, d.slice_of, d.ideal.contains
    rep = Report("slice-suite", data={"algebra": str(m), "ideal": str(d.ideal),
                                      "index": str(qa)})
    with rep.timed():
        w = m.window(bound)
        b = {"bound": bound, "window_size": len(w)}
        uq = qa.u

        def item_i(x, y):
            v, t = s(x), s(y)
            vt = qa.add(v, t)
            defined = m.sum_defined(x, y)
            below = qa.lt(vt, uq)
            in_vt = qa.eq(s(m.oplus(x, y)), vt)
            ok_below = ~below | (defined & in_vt)
            ok_defined = ~defined | qa.le(vt, uq)
            ok_top = ~(defined & qa.eq(vt, uq)) | in_vt
            return ok_below & ok_defined & ok_top
        bad = run_law(w, 2, item_i, ("a", "b"))
        rep.add("i", bad is None, bad, b)

        def item_ii(x, z):
            # every z in M_{v+t} splits as x + b with x in M_v and b in M_t
            v, w_ = s(x), s(z)
            relevant = qa.lt(v, w_) & qa.lt(w_, uq)
            bb = m.add(m.neg(x), z)
            ok = (m.contains(bb) & m.sum_defined(x, bb) & m.eq(m.oplus(x, bb), z)
                  & qa.eq(s(bb), qa.add(qa.neg(v), w_)))
            return ~relevant | ok
        bad = run_law(w, 2, item_ii, ("x", "z"))
        rep.add("ii", bad is None, bad, b, note="same-slice case z = z + 0 is immediate")

        def item_iii(x, y):
            return ~qa.lt(uq, qa.add(s(x), s(y))) | ~m.sum_defined(x, y)
        bad = run_law(w, 2, item_iii, ("a", "b"))
        rep.add("iii", bad is None, bad, b)

        def item_iv(x, y):
            return (qa.eq(s(m.join(x, y)), qa.join(s(x), s(y)))
                    & qa.eq(s(m.meet(x, y)), qa.meet(s(x), s(y))))
        bad = run_law(w, 2, item_iv, ("a", "b"))
        rep.add("iv", bad is None, bad, b)

        if leading_z(m.expr):
            st = check_state(canonical_state(m), bound, zero_set=inI)
            rep.add("v", st.passed, (st.first_failure() or None) and st.first_failure().witness,
                    b, note="leading-coordinate state")
        else:
            rep.unsupported("v", f"no constructive state for {m.expr}", b)

        vi = [is_ideal(d.ideal, bound), is_normal(d.ideal, bound)]
        m0 = w[inI(w)]
        x, y = pairs(m0)
        sums_ok = m.sum_defined(x, y) & inI(m.oplus(x, y))
        i = first_false(sums_ok)
        inf = multiples_defined(m, m0, infinitesimal_n)
        j = first_false(inf)
        wit = (vi[0].first_failure() or vi[1].first_failure())
        wit = wit.witness if wit else ({"a": x[i], "b": y[i]} if i is not None
                                       else {"x": m0[j]} if j is not None else None)
        rep.add("vi", all(r.passed for r in vi) and i is None and j is None, wit,
                {**b, "n_max": infinitesimal_n})

        qr = check_quotient(d.ideal, bound)
        f = qr.first_failure()
        rep.add("vii", qr.passed, f and {f.name: f.witness}, b)

        secs = check_uniqueness_transfer(d.ideal, search, bound)
        c = secs.checks[0]
        if c.verdict == "unsupported":
            rep.unsupported("viii", c.note, b)
        else:
            rep.add("viii", c.passed, c.witness, {**b, "search": search})

        pr = is_prime(d.ideal, bound)
        f = pr.first_failure()
        rep.add("ix", pr.passed, f and f.witness, b)
    return rep


# --- families (c_t) ------------------------------------------------------------------

def _family_report(d: Decomposition, c: Section, bound: int, strong: bool) -> Report:
    m, qa = d.algebra, d.index
    name = "strong-perfect" if strong else "weak-perfect"
    rep = Report(name, data={"algebra": str(m), "ideal": str(d.ideal), "family": c.to_dict()})
    with rep.timed():
        probes = _section_probes(d.quotient, bound)
        pb = {"bound": bound, "probes": len(probes)}
        bad = _section_basics(d.quotient, c, probes)
        rep.add("c_t-in-M_t", bad is None, bad, pb)
        c0 = c(qa.zero_arr)
        rep.add("c_0-zero", bool(m.eq(c0, m.zero_arr)), {"c_0": c0}, pb)
        s, t = pairs(probes)
        st = qa.add(s, t)
        rel = qa.le(st, qa.u) & qa.contains(st)
        cs, ct = c(s), c(t)
        ok = ~rel | (m.sum_defined(cs, ct) & m.eq(c(st), m.add(cs, ct)))
        i = first_false(ok)
        rep.add("additive", i is None, None if i is None else {"s": s[i], "t": t[i]}, pb)
        if strong:
            cu = c(qa.u)
            rep.add("c_u-is-1", bool(m.eq(cu, m.u)), {"c_u": cu}, pb)
        lex = check_lex_conditions_iv_v(d.ideal, c, bound)
        for ch in lex.checks:
            if ch.name != "section-projects":
                rep.checks.append(ch)
    return rep


def check_strong_perfect(d: Decomposition, c: Section, bound: int = 3) -> Report:
    return _family_report(d, c, bound, strong=True)


def check_weak_perfect(d: Decomposition, c: Section, bound: int = 3) -> Report:
    return _family_report(d, c, bound, strong=False)


def check_b_commutation(d: Decomposition, c: Section, bound: int = 3) -> Report:
    """b = 1 - c_u lies in G⁺ and commutes with every c_t."""
    m, qa = d.algebra, d.index
    rep = Report("b-commutation", data={"algebra": str(m)})
    with rep.timed():
        b = m.sub(m.u, c(qa.u))
        rep.data["b"] = b
        probes = _section_probes(d.quotient, bound)
        pb = {"bound": bound, "probes": len(probes)}
        rep.add("b-in-tail", bool(np.all(b[:d.depth] == 0)), {"b": b}, pb)
        rep.add("b-positive", bool(m.le(m.zero_arr, b)), {"b": b}, pb)
        ct = c(probes)
        i = first_false(m.eq(m.add(b, ct), m.add(ct, b)))
        rep.add("commutes", i is None, None if i is None else {"t": probes[i], "c_t": ct[i]}, pb)
    return rep


# --- representation -------------------------------------------------------------------

@dataclass
class RepresentationResult:
    source: PmvAlgebra
    target: PmvAlgebra
    depth: int
    section: Section
    offset: tuple
    strong: bool
    report: Report

    def phi_arr(self, x) -> np.ndarray:
        m, j = self.source, self.depth
        x = np.asarray(x, dtype=np.int64)
        t = x[..., :j]
        diff = m.sub(x, self.section(t))
        return np.concatenate([t, diff[..., j:]], axis=-1)

    def phi_inv_arr(self, y) -> np.ndarray:
        m, j = self.source, self.depth
        y = np.asarray(y, dtype=np.int64)
        t, g = y[..., :j], y[..., j:]
        zero_t = np.zeros_like(t)
        return m.add(np.concatenate([zero_t, g], axis=-1), self.section(t))

    def phi(self, x) -> PmvElement:
        v = getattr(x, "value", x)
        return self.target.element(_tuple(self.phi_arr(coerce_element(self.source.expr, v))))

    def phi_inv(self, y) -> PmvElement:
        v = getattr(y, "value", y)
        return self.source.element(_tuple(self.phi_inv_arr(coerce_element(self.target.expr, v))))

    @property
    def b_tail(self) -> tuple:
        return tuple(self.offset[self.depth:])

    def to_dict(self) -> dict:
        return {"source": str(self.source), "target": str(self.target),
                "target_group": str(self.target.expr), "target_unit": list(self.target.unit),
                "depth": self.depth, "b": list(self.b_tail), "strong": self.strong,
                "section": self.section.to_dict()}


def build_representation(d: Decomposition, c: Optional[Section] = None, bound: int = 2,
                         strong: Optional[bool] = None) -> RepresentationResult:
    """φ(x) = (t, x - c_t) onto Γ(H lex G, (u, b)); verified on windows.

    Raises DecompositionError if any verification fails.
    """
    c = c or d.section
    if c is None:
        raise ValueError("a family (c_t) is required")
    m, j, qa = d.algebra, d.depth, d.index
    h, g = prefix_expr(m.expr, j), tail_expr(m.expr, j)
    if not is_linear(h):
        raise UnsupportedError(f"index group {h} is not linear")
    offset = section_offset(d.ideal, c)
    target = PmvAlgebra(UnitalGroup(Lex(h, g) if g.dim else h, tuple(qa.unit) + tuple(offset[j:])))
    if strong is None:
        strong = bool(m.eq(c(qa.u), m.u))
    rep = Report("represent", data={"source": str(m), "target": str(target),
                                    "b": list(offset[j:]), "strong": strong,
                                    "section": c.to_dict()})
    res = RepresentationResult(m, target, j, c, offset, strong, rep)
    fam = (check_strong_perfect if strong else check_weak_perfect)(d, c, max(bound, 2))
    rep.merge(fam, prefix="family:")
    with rep.timed():
        _verify_phi(res, bound, rep)
    if not rep.passed:
        raise DecompositionError(f"representation check failed: {rep.first_failure().name}", rep)
    return res


def _verify_phi(res: RepresentationResult, bound: int, rep: Report):
    m, tg, j = res.source, res.target, res.depth
    phi, inv = res.phi_arr, res.phi_inv_arr
    w = m.window(bound)
    b = {"bound": bound, "window_size": len(w)}
    diff_prefix = m.sub(w, res.section(w[:, :j]))[:, :j]
    i = first_false(np.all(diff_prefix == 0, axis=-1))
    rep.add("well-defined", i is None, None if i is None else {"x": w[i]}, b)
    rep.add("zero", bool(tg.eq(phi(m.zero_arr), tg.zero_arr)), {"phi(0)": phi(m.zero_arr)}, b)
    rep.add("unit", bool(tg.eq(phi(m.u), tg.u)), {"phi(1)": phi(m.u)}, b)
    bad = run_law(w, 1, lambda x: tg.contains(phi(x)), ("x",))
    rep.add("lands-in-target", bad is None, bad, b)
    bad = run_law(w, 1, lambda x: m.eq(inv(phi(x)), x), ("x",))
    rep.add("inverse-left", bad is None, bad, b)
    for name, f, g in [("lneg", m.lneg, tg.lneg), ("rneg", m.rneg, tg.rneg)]:
        bad = run_law(w, 1, lambda x: tg.eq(phi(f(x)), g(phi(x))), ("x",))
        rep.add(f"preserves-{name}", bad is None, bad, b)
    for name, f, g in [("oplus", m.oplus, tg.oplus), ("odot", m.odot, tg.odot),
                       ("join", m.join, tg.join), ("meet", m.meet, tg.meet)]:
        bad = run_law(w, 2, lambda x, y: tg.eq(phi(f(x, y)), g(phi(x), phi(y))), ("x", "y"))
        rep.add(f"preserves-{name}", bad is None, bad, b)

    def partial(x, y):
        dm, dt = m.sum_defined(x, y), tg.sum_defined(phi(x), phi(y))
        return (dm == dt) & (~dm | tg.eq(phi(m.oplus(x, y)), tg.add(phi(x), phi(y))))
    bad = run_law(w, 2, partial, ("x", "y"))
    rep.add("preserves-partial-sum", bad is None, bad, b)
    images = {_tuple(r) for r in phi(w)}
    rep.add("injective", len(images) == len(w), {"collisions": len(w) - len(images)}, b)
    tw = tg.window(bound)
    back = inv(tw)
    ok = m.contains(back) & tg.eq(phi(back), tw)
    i = first_false(ok)
    rep.add("surjective", i is None, None if i is None else {"y": tw[i]},
            {**b, "target_window_size": len(tw)})
    bad = run_law(w, 1, lambda x: tg.eq(phi(x)[..., :j], x[..., :j]), ("x",))
    rep.add("slice-preserved", bad is None, bad, b)


def represent(m: PmvAlgebra, depth: int, search: int = 5, bound: int = 2) -> RepresentationResult:
    """Strong family if one exists within the search bound, else a weak one."""
    ideal = tail_ideal(m, depth)
    d = build_decomposition(m, ideal, bound)
    c = find_retraction(ideal, search, bound, lex_conditions=True)
    strong = c is not None
    if c is None:
        found = find_weak_retraction(ideal, search, bound, lex_conditions=True)
        if found is None:
            raise UnsupportedError(f"no family (c_t) with |A| <= {search}")
        c = found[0]
    return build_representation(d, c, bound, strong)


# --- functors ----------------------------------------------------------------------

@dataclass
class FunctorObject:
    algebra: PmvAlgebra
    ideal: IdealDesc
    section: Section
    h: UnitalGroup
    g: GroupExpr
    b: tuple


def functor_object(h: UnitalGroup, g: GroupExpr, b=None) -> FunctorObject:
    """Γ(H lex G, (u, b)) with its canonical ideal and section δ(t) = (t, 0)."""
    if not is_linear(h.expr):
        raise ValueError(f"{h.expr} is not linearly ordered")
    b = coerce_element(g, 0 if b is None and g.dim == 1 else (b or tuple([0] * g.dim)))
    from .groups import g_le
    if not g_le(g, g.zero(), b):
        raise ValueError(f"b = {show_element(b)} is not positive in {g}")
    m = PmvAlgebra(UnitalGroup(Lex(h.expr, g), tuple(h.unit) + tuple(b)))
    j = h.expr.dim
    ideal = IdealDesc(m, "tail", j, name=f"tail:{j}")
    return FunctorObject(m, ideal, Section.canonical(j, g.dim), h, g, b)


def linear_map(matrix) -> Callable:
    a = np.asarray(matrix, dtype=np.int64)

    def f(x):
        return np.asarray(x, dtype=np.int64) @ a.T
    f.matrix = a
    return f


@dataclass
class FunctorMorphism:
    source: FunctorObject
    target: FunctorObject
    matrix: np.ndarray
    report: Report

    def lift_arr(self, x) -> np.ndarray:
        j = self.source.h.expr.dim
        x = np.asarray(x, dtype=np.int64)
        return np.concatenate([x[..., :j], x[..., j:] @ self.matrix.T], axis=-1)

    def __call__(self, x) -> PmvElement:
        v = getattr(x, "value", x)
        return self.target.algebra.element(_tuple(self.lift_arr(v)))


def functor_morphism(h: UnitalGroup, g: GroupExpr, g2: GroupExpr, matrix, b=None,
                     bound: int = 2) -> FunctorMorphism:
    """Lift an ℓ-homomorphism G → G′ (integer matrix) to (t, g) ↦ (t, h(g))."""
    a = np.asarray(matrix, dtype=np.int64).reshape(g2.dim, g.dim)
    src = functor_object(h, g, b)
    hb = _tuple(np.asarray(src.b, dtype=np.int64) @ a.T)
    rep = Report("functor-morphism", data={"matrix": a, "G": str(g), "G2": str(g2)})
    with rep.timed():
        gw = _group_window(g, bound)
        hw = gw @ a.T
        zero = g.zero()
        pb = {"bound": bound, "window_size": len(gw)}
        x, y = pairs(gw)
        checks = [
            ("additive", lambda x, y: np.all(((g._add(x, y)) @ a.T) == g2._add(x @ a.T, y @ a.T),
                                             axis=-1)),
            ("meet", lambda x, y: np.all(g._meet(x, y) @ a.T == g2._meet(x @ a.T, y @ a.T),
                                         axis=-1)),
            ("join", lambda x, y: np.all(g._join(x, y) @ a.T == g2._join(x @ a.T, y @ a.T),
                                         axis=-1)),
        ]
        pos = g._le(zero, gw)
        i = first_false(~pos | g2._le(g2.zero(), hw))
        rep.add("order-preserving", i is None, None if i is None else {"g": gw[i]}, pb)
        for name, law in checks:
            i = first_false(law(x, y))
            rep.add(name, i is None, None if i is None else {"g": x[i], "h": y[i]}, pb)
        if not rep.passed:
            raise MorphismError(f"not an l-homomorphism: {rep.first_failure().name}", rep)
        dst = functor_object(h, g2, hb)
        mor = FunctorMorphism(src, dst, a, rep)
        m, t = src.algebra, dst.algebra
        w = m.window(bound)
        b2 = {"bound": bound, "window_size": len(w)}
        f = mor.lift_arr
        bad = run_law(w, 1, lambda x: t.contains(f(x)), ("x",))
        rep.add("lift-lands", bad is None, bad, b2)
        rep.add("lift-unit", bool(t.eq(f(m.u), t.u)), {"image": f(m.u)}, b2)
        for name, p, q in [("lneg", m.lneg, t.lneg), ("rneg", m.rneg, t.rneg)]:
            bad = run_law(w, 1, lambda x: t.eq(f(p(x)), q(f(x))), ("x",))
            rep.add(f"lift-{name}", bad is None, bad, b2)
        bad = run_law(w, 2, lambda x, y: t.eq(f(m.oplus(x, y)), t.oplus(f(x), f(y))), ("x", "y"))
        rep.add("lift-oplus", bad is None, bad, b2)
    return mor


def _group_window(g: GroupExpr, bound: int) -> np.ndarray:
    from .groups import window_array
    return window_array(g, bound)


# --- isomorphism checking -------------------------------------------------------------

def check_isomorphism(m1: PmvAlgebra, m2: PmvAlgebra, psi: Callable, bound: int = 3,
                      widen: Optional[int] = None) -> Report:
    """ψ: M1 → M2 is a bijection on windows preserving 0, 1, ⊕, ⁻, ∼.

    ``psi`` maps coordinate arrays of shape (..., dim1) to (..., dim2); plain
    tuple→tuple functions are accepted too.  Surjectivity looks for preimages
    in a window widened by the unit sizes.
    """
    f = _vectorize(psi, m2.dim)
    rep = Report("isocheck", data={"source": str(m1), "target": str(m2)})
    with rep.timed():
        w = m1.window(bound)
        b = {"bound": bound, "window_size": len(w)}
        bad = run_law(w, 1, lambda x: m2.contains(f(x)), ("x",))
        rep.add("lands", bad is None, bad, b)
        rep.add("zero", bool(m2.eq(f(m1.zero_arr), m2.zero_arr)), {"psi(0)": f(m1.zero_arr)}, b)
        rep.add("unit", bool(m2.eq(f(m1.u), m2.u)), {"psi(1)": f(m1.u)}, b)
        for name, p, q in [("lneg", m1.lneg, m2.lneg), ("rneg", m1.rneg, m2.rneg)]:
            bad = run_law(w, 1, lambda x: m2.eq(f(p(x)), q(f(x))), ("x",))
            rep.add(f"preserves-{name}", bad is None, bad, b)
        bad = run_law(w, 2, lambda x, y: m2.eq(f(m1.oplus(x, y)), m2.oplus(f(x), f(y))),
                      ("x", "y"))
        rep.add("preserves-oplus", bad is None, bad, b)
        images = [_tuple(r) for r in f(w)]
        dup = len(images) - len(set(images))
        rep.add("injective", dup == 0, {"collisions": dup}, b)
        if widen is None:
            widen = bound + max(map(abs, m1.unit)) + max(map(abs, m2.unit))
        big = m1.window(widen)
        reach = {_tuple(r) for r in f(big)}
        tw = m2.window(bound)
        miss = next((t for t in map(_tuple, tw) if t not in reach), None)
        rep.add("surjective", miss is None, {"y": miss},
                {**b, "preimage_bound": widen, "target_window_size": len(tw)})
    return rep


def _vectorize(psi: Callable, dim2: int) -> Callable:
    def f(x):
        x = np.asarray(x, dtype=np.int64)
        try:
            out = np.asarray(psi(x), dtype=np.int64)
            if out.shape == x.shape[:-1] + (dim2,):
                return out
        except Exception:
            pass
        flat = x.reshape(-1, x.shape[-1])
        rows = [coerce_tuple(psi(_tuple(r))) for r in flat]
        return np.asarray(rows, dtype=np.int64).reshape(x.shape[:-1] + (dim2,))
    return f


def coerce_tuple(v) -> tuple:
    if isinstance(v, PmvElement):
        return v.value
    if isinstance(v, (int, np.integer)):
        return (int(v),)
    return tuple(int(a) for a in np.asarray(v).reshape(-1))
