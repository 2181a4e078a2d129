"""Acceptance criteria 1-10, one test each, with a summary line per criterion.

Run ``pytest tests/test_acceptance.py`` (the summary appears at the end) or
``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import os
import sys
import time
from fractions import Fraction

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from lexpmv import (HEIS, LEXICOGRAPHIC, WEAKLY_LEXICOGRAPHIC, Z, Section, UnitalGroup,  # noqa: E402
                    build_decomposition, build_representation, canonical_state, check_axioms,
                    check_oplus_agreement, check_identity, check_isomorphism, check_pe_axioms, check_rdp2,
                    check_state, check_theorem_3_2, classify_ideal, direct, functor_object,
                    gamma, in_center, lex, lex_ideal_comparability, symmetry_witness,
                    tail_ideal)
from lexpmv.catalog import LEX_SHIPPED, SHIPPED  # noqa: E402

CRITERIA = {}
TIME_LIMIT = 60.0


def criterion(n: int, title: str):
    def wrap(fn):
        CRITERIA[n] = (title, fn)
        return fn
    return wrap


@criterion(1, "axiom suite on the six named algebras")
def c1():
    algebras = [gamma(Z, 2), gamma(lex(Z, Z), (1, 0)), gamma(lex(Z, Z), (2, 1)),
                gamma(lex(Z, lex(Z, Z)), (1, 0, 0)), gamma(HEIS, (1, 0, 0)),
                gamma(lex(Z, HEIS), (1, 0, 0, 0))]
    for m in algebras:
        rep = check_axioms(m, 2)
        assert rep.passed, rep.to_text()
        for name in ("A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8",
                     "distributive-meet", "distributive-join"):
            assert rep[name].passed
    return f"{len(algebras)} algebras, bound 2"


@criterion(2, "non-symmetry witness on Heis")
def c2():
    m = gamma(HEIS, (1, 0, 0))
    s = symmetry_witness(m, 3)
    x = np.array(s.witness)
    assert s.witness == (0, 1, 0)
    assert tuple(m.lneg(x)) == (1, -1, -1) and tuple(m.rneg(x)) == (1, -1, 0)
    assert not in_center(m.expr, m.unit) and s.agrees
    return "x=(0,1,0), u not central"


@criterion(3, "Gamma(Z lex Z,(2,1)) tail:1 is weakly lexicographic, not lexicographic")
def c3():
    m = gamma(lex(Z, Z), (2, 1))
    for k in range(0, 11):
        c = classify_ideal(tail_ideal(m, 1), search=k)
        assert c.label == WEAKLY_LEXICOGRAPHIC and c.section is None, (k, c.label)
        assert c.offset == (0, 1)
    return "K=0..10, b=1"


@criterion(4, "three-level tower has tail ideals I2 < I1, both lexicographic")
def c4():
    m = gamma(lex(Z, lex(Z, Z)), (1, 0, 0))
    i1, i2 = tail_ideal(m, 1), tail_ideal(m, 2)
    assert classify_ideal(i1).label == LEXICOGRAPHIC
    assert classify_ideal(i2).label == LEXICOGRAPHIC
    rep = lex_ideal_comparability(i1, i2)
    assert rep.data["J<=I"] and not rep.data["I<=J"]
    return "I2 strictly inside I1"


@criterion(5, "functor object -> decomposition -> representation round trip")
def c5():
    hs = [UnitalGroup(Z, (1,)), UnitalGroup(Z, (2,)), UnitalGroup(lex(Z, Z), (1, 0))]
    gs = [(Z, [(0,), (1,)]), (direct(Z, Z), [(0, 0), (1, 1)]), (HEIS, [(0, 0, 0), (0, 0, 1)])]
    n = 0
    for h in hs:
        for g, bs in gs:
            for b in bs:
                fo = functor_object(h, g, b)
                d = build_decomposition(fo.algebra, fo.ideal, 2)
                r = build_representation(d, fo.section, 2)
                assert r.target.unit == tuple(h.unit) + tuple(b)
                assert r.report.passed
                n += 1
    return f"{n} cases, bound 2"


@criterion(6, "theta_1 and theta_2 are isomorphisms; offsets 0 and 2 differ")
def c6():
    m = gamma(lex(Z, Z), (2, 0))
    m1, m2 = gamma(lex(Z, Z), (2, 2)), gamma(lex(Z, Z), (2, -2))

    def theta1(x):
        t, n = x
        return {0: (0, n), 1: (1, n + 1), 2: (2, n + 2)}[t]

    def theta2(x):
        t, n = x
        return {0: (0, n), 1: (1, n - 1), 2: (2, n - 2)}[t]

    assert check_isomorphism(m, m1, theta1, 3).passed
    assert check_isomorphism(m, m2, theta2, 3).passed
    b0 = build_representation(build_decomposition(m, 1), Section.canonical(1, 1)).b_tail
    b2 = build_representation(build_decomposition(m1, 1), Section.canonical(1, 1)).b_tail
    assert b0 == (0,) and b2 == (2,)
    return "b=0 vs b=2"


@criterion(7, "effect layer: oplus agreement, PE1-PE4, RDP2")
def c7():
    for m in SHIPPED.values():
        assert check_oplus_agreement(m, 2).passed
        assert check_pe_axioms(m, 2).passed
    total = 0
    for m in (gamma(Z, 2), gamma(lex(Z, Z), (1, 0))):
        rep = check_rdp2(m, 2)
        assert rep.passed
        total += rep.data["instances"]
    return f"{len(SHIPPED)} algebras, {total} RDP2 instances"


@criterion(8, "canonical state on Gamma(Z lex Z,(2,1))")
def c8():
    m = gamma(lex(Z, Z), (2, 1))
    s = canonical_state(m)
    for x in map(tuple, m.window(3)):
        assert s(x) == Fraction(x[0], 2)
    assert s((1, 5)) == Fraction(1, 2) and s((0, 3)) == 0 and s((2, -3)) == 1
    rep = check_state(s, 3, zero_set=tail_ideal(m, 1).contains)
    assert rep.passed and rep["kernel-contains"].passed
    return "exact rationals, bound 3"


@criterion(9, "basis identity 2.x^2 = (2.x)^2")
def c9():
    assert check_identity(gamma(lex(Z, Z), (1, 0)), "2.x^2 = (2.x)^2", bound=3).passed
    assert check_identity(gamma(lex(Z, HEIS), (1, 0, 0, 0)), "2.x^2 = (2.x)^2", bound=3).passed
    rep = check_identity(gamma(lex(Z, Z), (2, 1)), "2.x^2 = (2.x)^2", bound=3)
    assert rep.verdict == "fail" and rep["identity"].witness["x"] == [1, 0]
    return "counterexample x=(1,0)"


@criterion(10, "slice-decomposition suite on every shipped lex algebra")
def c10():
    n = 0
    for name, depths in LEX_SHIPPED.items():
        for j in depths:
            rep = check_theorem_3_2(build_decomposition(SHIPPED[name], j, 2), 2)
            for item in ("i", "ii", "iii", "iv", "vi", "vii", "viii", "ix"):
                assert rep[item].passed, (name, j, item, rep[item])
            assert rep["v"].verdict in ("pass", "unsupported")
            n += 1
    return f"{n} decompositions, bound 2"


@pytest.mark.parametrize("n", sorted(CRITERIA), ids=lambda n: f"{n}")
def test_criterion(n):
    import conftest
    title, fn = CRITERIA[n]
    t = time.perf_counter()
    try:
        detail = fn()
        elapsed = time.perf_counter() - t
        assert elapsed < TIME_LIMIT, f"took {elapsed:.1f}s"
    except BaseException as e:
        conftest.ACCEPTANCE[n] = ("FAIL", title, f"{type(e).__name__}: {str(e)[:120]}")
        raise
    conftest.ACCEPTANCE[n] = ("PASS", title, f"{detail}; {elapsed:.2f}s")


if __name__ == "__main__":
    failed = 0
    for n in sorted(CRITERIA):
        title, fn = CRITERIA[n]
        t = time.perf_counter()
        try:
            detail = fn()
            verdict = "PASS"
        except Exception as e:  # report and continue
            detail, verdict = f"{type(e).__name__}: {e}", "FAIL"
            failed += 1
        print(f"criterion {n:>2}: {verdict}  {title}  [{detail}; {time.perf_counter() - t:.2f}s]")
    sys.exit(1 if failed else 0)
