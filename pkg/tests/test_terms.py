import pytest
from hypothesis import given, strategies as st

from lexpmv import (HEIS, Z, Const, LNeg, Oplus, Odot, ParseError, Power, RNeg, Times, Var,
                    UnboundVariable, check_identity, eval_term, gamma, lex, parse_identity,
                    parse_term)

Z10 = gamma(lex(Z, Z), (1, 0))
Z21 = gamma(lex(Z, Z), (2, 1))
H = gamma(HEIS, (1, 0, 0))
ZH = gamma(lex(Z, HEIS), (1, 0, 0, 0))


def test_precedence():
    x, y, z = Var("x"), Var("y"), Var("z")
    assert parse_term("x (+) y (.) z") == Oplus(x, Odot(y, z))
    assert parse_term("2.x^2") == Times(2, Power(x, 2))
    assert parse_term("(2.x)^2") == Power(Times(2, x), 2)
    assert parse_term("x^-^~") == RNeg(LNeg(x))
    assert parse_term("x ⊕ 0") == Oplus(x, Const(0))
    assert parse_identity("x (+) y = y (+) x") == (Oplus(x, y), Oplus(y, x))


def test_parse_errors():
    with pytest.raises(ParseError) as e:
        parse_term("x (+)")
    assert e.value.start == 5
    with pytest.raises(ParseError) as e:
        parse_term("x (+) 7")
    assert e.value.start == 6
    with pytest.raises(ParseError):
        parse_term("x^")


def test_eval_values():
    x = Z10((1, -3))
    assert eval_term("2.x^2", {"x": x}).value == (1, 0)
    assert eval_term("(2.x)^2", {"x": x}).value == (1, 0)
    x = Z21((1, 0))
    assert eval_term("2.x^2", {"x": x}).value == (0, 0)
    assert eval_term("(2.x)^2", {"x": x}).value == (2, -1)
    assert eval_term("2.x^2", {"x": Z21.zero}) == eval_term("(2.x)^2", {"x": Z21.zero})
    assert eval_term("1 (.) 0", {}, Z21) == Z21.zero
    with pytest.raises(UnboundVariable):
        eval_term("x (+) y", {"x": Z21.zero})


def test_basis_identity():
    assert check_identity(Z10, "2.x^2 = (2.x)^2", bound=3).passed
    assert check_identity(ZH, "2.x^2 = (2.x)^2", bound=3).passed
    rep = check_identity(Z21, "2.x^2", "(2.x)^2", bound=3)
    w = rep["identity"].witness
    assert rep.verdict == "fail"
    assert (w["x"], w["lhs"], w["rhs"]) == ([1, 0], [0, 0], [2, -1])


def test_commutativity_on_heis():
    rep = check_identity(H, "x (+) y = y (+) x", bound=2)
    w = rep["identity"].witness
    x, y = H(tuple(w["x"])), H(tuple(w["y"]))
    # independent confirmation of the reported counterexample
    assert eval_term("x (+) y", {"x": x, "y": y}) != eval_term("y (+) x", {"x": x, "y": y})
    assert check_identity(Z21, "x (+) y = y (+) x", bound=2).passed


def test_closed_identity():
    assert check_identity(H, "1^~ = 0").passed
    assert not check_identity(H, "1 = 0").passed


def terms():
    leaves = st.one_of(st.sampled_from([Var("x"), Var("y"), Const(0), Const(1)]))
    return st.recursive(leaves, lambda t: st.one_of(
        st.builds(Oplus, t, t), st.builds(Odot, t, t), st.builds(LNeg, t), st.builds(RNeg, t),
        st.builds(Times, st.integers(0, 3), t), st.builds(Power, t, st.integers(0, 3))),
        max_leaves=6)


@given(terms())
def test_print_parse_round_trip(t):
    assert parse_term(str(t)) == t
