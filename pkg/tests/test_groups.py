import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from lexpmv.groups import (HEIS, O, Z, Order, ShapeError, coerce_element,
                           enumerate_window, g_add, g_compare, g_join, g_le, g_meet, g_neg,
                           g_sub, in_center, is_linear, is_strong_unit, lex, direct,
                           prefix_expr, tail_expr)
from oracle import heis_add, heis_neg

ZZ_LEX = lex(Z, Z)
ZZ_DIR = direct(Z, Z)
GROUPS = [Z, ZZ_LEX, ZZ_DIR, HEIS, lex(Z, HEIS), lex(Z, lex(Z, Z)), lex(Z, direct(Z, Z))]


def elements(g, lo=-6, hi=6):
    return st.tuples(*[st.integers(lo, hi)] * g.dim)


# --- worked values ---------------------------------------------------------------

def test_heis_add_and_neg():
    assert g_add(HEIS, (0, 1, 0), (0, 0, 5)) == (0, 1, 5)
    assert g_neg(HEIS, (0, 1, 0)) == (0, -1, 0)
    assert g_neg(HEIS, (1, 1, 0)) == (-1, -1, 1)


def test_small_values():
    assert g_add(ZZ_LEX, (1, 2), (0, -3)) == (1, -1)
    assert g_neg(Z, 5) == (-5,)
    assert g_compare(ZZ_LEX, (0, 7), (1, -100)) is Order.LT
    assert g_compare(ZZ_DIR, (1, 3), (2, 0)) is Order.INCOMPARABLE
    assert g_compare(HEIS, (0, 1, 0), (1, 0, 0)) is Order.LT
    assert g_meet(ZZ_DIR, (1, 3), (2, 0)) == (1, 0)
    assert g_meet(ZZ_LEX, (1, 5), (2, 1)) == (1, 5)
    assert g_join(HEIS, (0, 1, 0), (0, 0, 9)) == (0, 1, 0)


def test_linearity():
    assert is_linear(lex(Z, lex(Z, Z)))
    assert not is_linear(ZZ_DIR)
    assert is_linear(HEIS)


def test_strong_units():
    assert is_strong_unit(ZZ_LEX, (1, -5))
    assert not is_strong_unit(ZZ_LEX, (0, 1))
    assert is_strong_unit(Z, 2)
    assert is_strong_unit(ZZ_DIR, (1, 1))
    assert not is_strong_unit(ZZ_DIR, (1, 0))


def test_strong_unit_needs_positive():
    with pytest.raises(ValueError):
        is_strong_unit(Z, -1)


def test_center():
    assert in_center(HEIS, (0, 0, 7))
    assert not in_center(HEIS, (1, 0, 0))
    assert in_center(Z, 5)


def test_enumerate_window():
    assert list(enumerate_window(Z, 0, 2, 2)) == [(0,), (1,), (2,)]
    got = set(enumerate_window(ZZ_LEX, (0, 0), (1, 0), 1))
    assert got == {(0, 0), (0, 1), (1, -1), (1, 0)}
    assert list(enumerate_window(O, (), (), 3)) == [()]


def test_shape_errors():
    with pytest.raises(ShapeError):
        coerce_element(ZZ_LEX, (1, 2, 3))
    with pytest.raises(ShapeError):
        coerce_element(HEIS, 4)


def test_nested_literal_is_flattened():
    assert coerce_element(lex(Z, HEIS), (1, (0, 0, 0))) == (1, 0, 0, 0)


def test_split_expressions():
    g = lex(Z, lex(Z, Z))
    assert str(prefix_expr(g, 2)) == "Z lex Z"
    assert str(tail_expr(g, 2)) == "Z"
    assert prefix_expr(lex(Z, HEIS), 1) == Z


# --- oracle comparisons -----------------------------------------------------------

@given(elements(HEIS, -20, 20), elements(HEIS, -20, 20))
def test_heis_matches_matrix_product(x, y):
    assert g_add(HEIS, x, y) == heis_add(x, y)
    assert g_neg(HEIS, x) == heis_neg(x)


@given(elements(ZZ_LEX), elements(ZZ_LEX))
def test_lex_order_is_tuple_order(x, y):
    assert g_le(ZZ_LEX, x, y) == (x <= y)
    assert g_meet(ZZ_LEX, x, y) == min(x, y)


# --- group and order laws ------------------------------------------------------------

@pytest.mark.parametrize("g", GROUPS, ids=str)
@given(data=st.data())
def test_group_laws(g, data):
    x, y, z = (data.draw(elements(g)) for _ in range(3))
    zero = (0,) * g.dim
    assert g_add(g, g_add(g, x, y), z) == g_add(g, x, g_add(g, y, z))
    assert g_add(g, x, zero) == x == g_add(g, zero, x)
    assert g_add(g, x, g_neg(g, x)) == zero == g_add(g, g_neg(g, x), x)
    assert g_sub(g, x, y) == g_add(g, x, g_neg(g, y))


@pytest.mark.parametrize("g", GROUPS, ids=str)
@given(data=st.data())
def test_bi_invariance(g, data):
    a, b, x, y = (data.draw(elements(g)) for _ in range(4))
    if g_le(g, a, b):
        assert g_le(g, g_add(g, g_add(g, x, a), y), g_add(g, g_add(g, x, b), y))


@pytest.mark.parametrize("g", GROUPS, ids=str)
@given(data=st.data())
def test_lattice_laws(g, data):
    x, y, z = (data.draw(elements(g)) for _ in range(3))
    m, j = g_meet(g, x, y), g_join(g, x, y)
    assert g_le(g, m, x) and g_le(g, m, y)
    assert g_le(g, x, j) and g_le(g, y, j)
    if g_le(g, z, x) and g_le(g, z, y):
        assert g_le(g, z, m)
    if g_le(g, x, z) and g_le(g, y, z):
        assert g_le(g, j, z)


def _brute_strong(g, u, bound=3, n_max=40):
    # every windowed g lies in [-n u, n u] for some n
    zero = (0,) * g.dim
    for x in np.ndindex(*([2 * bound + 1] * g.dim)):
        x = tuple(int(v) - bound for v in x)
        nu = zero
        for _ in range(n_max):
            nu = g_add(g, nu, u)
            if g_le(g, g_neg(g, nu), x) and g_le(g, x, nu):
                break
        else:
            return False
    return True


@pytest.mark.parametrize("g", [Z, ZZ_LEX, ZZ_DIR, HEIS], ids=str)
@given(data=st.data())
def test_strong_unit_brute_force(g, data):
    u = data.draw(elements(g, -2, 2))
    assume(g_le(g, (0,) * g.dim, u))
    assert is_strong_unit(g, u) == _brute_strong(g, u)
