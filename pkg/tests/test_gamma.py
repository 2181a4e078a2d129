
import numpy as np
import pytest
from hypothesis import given, strategies as st

from lexpmv import (HEIS, Z, PmvAlgebra, UnitalGroup, check_axioms, gamma, in_center,
                    is_infinitesimal, lex, mv_join, mv_lneg, mv_meet, mv_odot, mv_oplus,
                    mv_rneg, nat_multiple, symmetry_witness, AlgebraMismatch)
from lexpmv.catalog import SHIPPED
from lexpmv.groups import GroupError
from oracle import GammaOracle, LinearOracle

Z21 = gamma(lex(Z, Z), (2, 1))
Z10 = gamma(lex(Z, Z), (1, 0))
H = gamma(HEIS, (1, 0, 0))
Z2 = gamma(Z, 2)


def test_operation_values():
    assert mv_oplus(Z21((1, 5)), Z21((1, -3))).value == (2, 1)
    assert mv_oplus(H((0, 1, 0)), H((0, 0, 5))).value == (0, 1, 5)
    assert mv_odot(Z21((1, 0)), Z21((1, 0))).value == (0, 0)
    assert mv_odot(Z2(2), Z2(1)).value == (1,)
    assert mv_lneg(H((0, 1, 0))).value == (1, -1, -1)
    assert mv_rneg(H((0, 1, 0))).value == (1, -1, 0)
    assert mv_lneg(Z21((0, 3))).value == (2, -2)
    assert mv_join(Z21((0, 9)), Z21((1, -4))).value == (1, -4)


@pytest.mark.parametrize("name", SHIPPED)
def test_units_and_zero(name):
    m = SHIPPED[name]
    for x in map(tuple, m.window(2)[:20]):
        e = m(x)
        assert mv_oplus(e, m.zero) == e
        assert mv_odot(e, m.one) == e
        assert mv_meet(e, m.one) == e


def test_mismatch_and_membership():
    with pytest.raises(AlgebraMismatch):
        mv_oplus(Z21((0, 0)), Z10((0, 0)))
    with pytest.raises(ValueError):
        Z21((3, 0))
    with pytest.raises(GroupError):
        gamma(lex(Z, Z), (0, 1))


@pytest.mark.parametrize("name", list(SHIPPED))
def test_axioms_exhaustive(name):
    rep = check_axioms(SHIPPED[name], 2)
    assert rep.passed, rep.to_text()
    assert {"A1", "A8", "A8-dual", "distributive-meet", "group-difference"} <= {
        c.name for c in rep.checks}


def test_truncation_matters():
    class Untruncated(PmvAlgebra):
        def oplus(self, x, y):
            return self.add(x, y)

    rep = check_axioms(Untruncated(UnitalGroup(Z, (2,))), 2)
    assert rep["A3"].verdict == "fail"


def test_symmetry():
    s = symmetry_witness(H, 3)
    assert s.witness == (0, 1, 0) and not s.unit_central and s.agrees
    assert symmetry_witness(Z21, 3).witness is None


@pytest.mark.parametrize("name", list(SHIPPED))
def test_symmetry_matches_center(name):
    m = SHIPPED[name]
    s = symmetry_witness(m, 2)
    assert (s.witness is None) == in_center(m.expr, m.unit)


def test_multiples():
    assert nat_multiple(3, Z10((0, 5))).value == (0, 15)
    assert nat_multiple(2, Z10((1, -3))) is None
    assert nat_multiple(0, Z10((1, -3))) == Z10.zero
    assert is_infinitesimal(Z10((0, 5)), 10)
    assert not is_infinitesimal(Z10((1, -3)))
    assert is_infinitesimal(H.zero)


# --- agreement with the pure-Python oracle ------------------------------------------

ORACLES = [
    (Z21, GammaOracle(LinearOracle("ZZ"), (2, 1))),
    (H, GammaOracle(LinearOracle("H"), (1, 0, 0))),
    (gamma(lex(Z, HEIS), (1, 0, 0, 0)), GammaOracle(LinearOracle("ZH"), (1, 0, 0, 0))),
    (gamma(lex(Z, lex(Z, Z)), (1, 0, 0)), GammaOracle(LinearOracle("ZZZ"), (1, 0, 0))),
]


@pytest.mark.parametrize("m,o", ORACLES, ids=[str(m) for m, _ in ORACLES])
def test_window_matches_oracle(m, o):
    assert {tuple(map(int, r)) for r in m.window(2)} == set(o.members(2))


@pytest.mark.parametrize("m,o", ORACLES, ids=[str(m) for m, _ in ORACLES])
@given(data=st.data())
def test_operations_match_oracle(m, o, data):
    w = [tuple(map(int, r)) for r in m.window(2)]
    x, y = data.draw(st.sampled_from(w)), data.draw(st.sampled_from(w))
    a, b = np.array(x), np.array(y)
    assert tuple(m.oplus(a, b)) == o.oplus(x, y)
    assert tuple(m.odot(a, b)) == o.odot(x, y)
    assert tuple(m.lneg(a)) == o.lneg(x)
    assert tuple(m.rneg(a)) == o.rneg(x)


@pytest.mark.parametrize("name", list(SHIPPED))
@given(data=st.data())
def test_double_negation_and_differences(name, data):
    m = SHIPPED[name]
    w = m.window(2)
    x = w[data.draw(st.integers(0, len(w) - 1))]
    y = w[data.draw(st.integers(0, len(w) - 1))]
    assert np.array_equal(m.rneg(m.lneg(x)), x)
    assert np.array_equal(m.lneg(m.rneg(x)), x)
    if m.le(y, x):
        assert np.array_equal(m.odot(x, m.lneg(y)), m.sub(x, y))
        assert np.array_equal(m.odot(m.rneg(y), x), m.add(m.neg(y), x))
