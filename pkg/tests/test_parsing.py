import pytest
from hypothesis import given, strategies as st

from lexpmv import HEIS, O, Z, Direct, Lex, ParseError, lex, parse_element, parse_group, parse_spec


def test_examples():
    s = parse_spec("Gamma(Z lex Z, (2,1))")
    assert s.expr == Lex(Z, Z) and s.unit == (2, 1)
    s = parse_spec("Gamma(Heis, (1,0,0))")
    assert s.expr == HEIS and s.unit == (1, 0, 0)
    assert parse_spec("Γ(Z, 2)").unit == (2,)


def test_not_a_strong_unit():
    with pytest.raises(ParseError) as e:
        parse_spec("Gamma(Z lex Z, (0,1))")
    err = e.value
    assert "strong unit" in err.message
    assert err.text[err.start:err.end] == "(0,1)"


def test_syntax_error_span_and_expectations():
    with pytest.raises(ParseError) as e:
        parse_spec("Gamma(Z lex , 1)")
    assert e.value.start == 12
    assert "'Z'" in e.value.expected
    with pytest.raises(ParseError) as e:
        parse_spec("Gamma(Z, 2")
    assert e.value.start == 10 and "end of input" in str(e.value)
    with pytest.raises(ParseError) as e:
        parse_spec("Gamma(Z lex Z, (1,2,3))")
    assert e.value.text[e.value.start:e.value.end] == "(1,2,3)"
    with pytest.raises(ParseError):
        parse_spec("Gamma(Z # Z, 1)")


def test_precedence():
    assert parse_group("Z lex Z x Z") == Lex(Z, Direct((Z, Z)))
    assert parse_group("Z lex Z lex Z") == Lex(Lex(Z, Z), Z)
    assert parse_group("(Z lex Z) x Z") == Direct((Lex(Z, Z), Z))
    assert parse_group("Z x Z x Z") == Direct((Z, Z, Z))
    assert parse_group("Z lex O") == Lex(Z, O)


def test_nested_element():
    assert parse_element("(1,(0,0,0))", lex(Z, HEIS)) == (1, 0, 0, 0)


# --- round trip ------------------------------------------------------------------------

def group_exprs():
    atoms = st.sampled_from([Z, HEIS, O])
    return st.recursive(
        atoms,
        lambda kids: st.one_of(
            st.tuples(kids, kids).filter(lambda p: p[0].linear or not p[1].dim)
            .map(lambda p: Lex(*p)),
            st.lists(kids, min_size=2, max_size=3).map(lambda fs: Direct(tuple(fs)))),
        max_leaves=5)


@given(group_exprs())
def test_group_round_trip(g):
    text = str(g)
    assert parse_group(text) == g
    assert str(parse_group(text)) == text


@given(st.sampled_from(["Gamma(Z lex Z, (2,1))", "Gamma(Heis, (1,0,0))",
                        "Gamma(Z lex (Z lex Z), (1,0,0))", "Gamma((Z lex Z) x Z, ((1,0),1))",
                        "Gamma(Z lex Heis, (1,(0,0,0)))", "Gamma(Z, 2)"]))
def test_spec_round_trip(text):
    s = parse_spec(text)
    again = parse_spec(str(s))
    assert (again.expr, again.unit) == (s.expr, s.unit)
    assert str(again) == str(s)
