from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lexpmv import (HEIS, Z, PmvAlgebra, UnitalGroup, UnsupportedError, canonical_state,
                    check_oplus_agreement, check_pe_axioms, check_rdp2, check_state, direct, gamma, lex,
                    minus_li, minus_re, oplus_from_effect, partial_add, rdp2_witness,
                    tail_ideal)
from lexpmv.catalog import SHIPPED

Z2 = gamma(Z, 2)
Z10 = gamma(lex(Z, Z), (1, 0))
Z21 = gamma(lex(Z, Z), (2, 1))
H = gamma(HEIS, (1, 0, 0))


def test_partial_sum_values():
    s = partial_add(Z2(1), Z2(1))
    assert s.defined and s.value == Z2(2)
    assert not partial_add(Z2(2), Z2(1))
    for x in map(tuple, H.window(2)):
        s = partial_add(H(x), H.zero)
        assert s.defined and s.value == H(x)


def test_partial_sum_orientation_on_heis():
    # x + y is defined exactly when the group sum stays below u
    a, b = H((0, 1, 0)), H((1, -1, 0))
    assert bool(H.le(H.add(a.arr, b.arr), H.u)) == partial_add(a, b).defined


def test_differences():
    x = H((0, 1, 0))
    assert minus_li(H.one, x).value == (1, -1, -1)
    assert minus_re(x, H.one).value == (1, -1, 0)
    assert minus_li(Z21((1, 3)), Z21.zero) == Z21((1, 3))
    with pytest.raises(ValueError):
        minus_li(Z21.zero, Z21((1, 3)))


@pytest.mark.parametrize("name", list(SHIPPED))
def test_pe_axioms(name):
    rep = check_pe_axioms(SHIPPED[name], 2)
    assert rep.passed, rep.to_text()


def test_forced_total_sum_fails():
    class Total(PmvAlgebra):
        def sum_defined(self, x, y):
            return np.ones(np.broadcast_shapes(np.shape(x)[:-1], np.shape(y)[:-1]), dtype=bool)

    rep = check_pe_axioms(Total(UnitalGroup(Z, (2,))), 2)
    assert rep["PE4"].verdict == "fail"


def test_rdp2_values():
    c = rdp2_witness(Z2(1), Z2(1), Z2(2), Z2(0))
    assert [e.value[0] for e in c] == [1, 0, 1, 0]
    a = Z21((1, 3))
    c = rdp2_witness(a, Z21.zero, a, Z21.zero)
    assert c == (a, Z21.zero, Z21.zero, Z21.zero)
    with pytest.raises(ValueError):
        rdp2_witness(Z2(2), Z2(1), Z2(2), Z2(1))


@pytest.mark.parametrize("m", [Z2, Z10, Z21, H], ids=str)
def test_rdp2_all_instances(m):
    rep = check_rdp2(m, 2)
    assert rep.passed and rep.data["instances"] > 0


def test_oplus_from_effect_values():
    assert oplus_from_effect(Z2(1), Z2(2)) == Z2(2)
    assert oplus_from_effect(H((0, 1, 0)), H((0, 0, 5))).value == (0, 1, 5)
    for b in map(tuple, Z21.window(2)):
        assert oplus_from_effect(Z21.zero, Z21(b)) == Z21(b)


@pytest.mark.parametrize("name", list(SHIPPED))
def test_oplus_agreement(name):
    assert check_oplus_agreement(SHIPPED[name], 2).passed


@pytest.mark.parametrize("name", list(SHIPPED))
@given(data=st.data())
def test_recomposition(name, data):
    m = SHIPPED[name]
    w = [m(tuple(r)) for r in m.window(2)]
    a, b = data.draw(st.sampled_from(w)), data.draw(st.sampled_from(w))
    if bool(m.le(a.arr, b.arr)):
        s = partial_add(minus_li(b, a), a)
        t = partial_add(a, minus_re(a, b))
        assert s.defined and s.value == b
        assert t.defined and t.value == b


def test_canonical_state():
    s = canonical_state(Z21)
    assert s((1, 5)) == Fraction(1, 2)
    assert s((0, 3)) == 0 and s((2, -7)) == 1
    assert s(Z21.one) == 1
    rep = check_state(s, 3, zero_set=tail_ideal(Z21, 1).contains)
    assert rep.passed, rep.to_text()


def test_state_unsupported_without_leading_z():
    with pytest.raises(UnsupportedError):
        canonical_state(gamma(direct(Z, Z), (1, 1)))


def test_state_detects_non_additive():
    from lexpmv.effect import State
    bad = State(Z2, lambda x: Fraction(x[0] * x[0], 4))
    assert check_state(bad, 2)["additive"].verdict == "fail"
