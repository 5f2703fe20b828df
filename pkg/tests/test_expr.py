import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_element
from ramac.errors import ExprSyntaxError, NonRepresentableInverse, UnknownVariable
from ramac.expr import BinOp, Neg, Num, Pow, Var, format_expr, parse_element, parse_expr, parse_laurent
from ramac.ff import GF
from ramac.laurent import LaurentPoly
from ramac.tower import Tower

NAMES = ["t", "g", "x1", "x2"]

leaves = st.one_of(st.builds(Num, st.integers(0, 30)), st.builds(Var, st.sampled_from(NAMES)))
asts = st.recursive(
    leaves,
    lambda kids: st.one_of(
        st.builds(Neg, kids),
        st.builds(BinOp, st.sampled_from("+-*"), kids, kids),
        st.builds(Pow, kids, st.integers(-4, 6)),
    ),
    max_leaves=12,
)


@settings(max_examples=400, deadline=None)
@given(asts)
def test_print_parse_round_trip(ast):
    assert parse_expr(format_expr(ast)) == ast


def test_left_association_and_whitespace():
    assert parse_expr("t - g - 1") == BinOp("-", BinOp("-", Var("t"), Var("g")), Num(1))
    assert parse_expr(" t ^ ( -2 ) * g ") == parse_expr("t^-2*g")


def test_syntax_error_offset():
    with pytest.raises(ExprSyntaxError) as err:
        parse_expr("t^")
    assert err.value.position == 2
    assert "offset 2" in str(err.value)
    with pytest.raises(ExprSyntaxError) as err:
        parse_expr("t + $")
    assert err.value.position == 4


def test_unknown_variable():
    T = Tower.from_rhs(2, ["t^-1"])
    with pytest.raises(UnknownVariable):
        parse_element("x2", T)
    with pytest.raises(UnknownVariable):
        parse_laurent("s", GF(2))


def test_tower_examples():
    T = Tower.from_rhs(2, ["t^-1"])
    a = parse_element("t^-1 + x1", T)
    assert a == T.element(LaurentPoly.parse("t^-1", GF(2))) + T.y(1)
    F4 = GF(2, 2)
    m = parse_laurent("g*t^2", F4)
    assert m == LaurentPoly.monomial(F4, 2, F4.gen)


def test_x_uses_original_roots():
    T = Tower.from_rhs(2, ["t^-2"])
    x = parse_element("x1", T)
    assert x == T.y(1) + T.shift(1).top()
    assert x ** 2 - x == T.element(LaurentPoly.parse("t^-2", GF(2)))


def test_inverse_in_tower():
    T = Tower.from_rhs(2, ["t^-1"])
    assert parse_element("x1^-1", T) == (T.y(1) + 1) * T.t()
    with pytest.raises(NonRepresentableInverse):
        parse_element("(1+t)^-1", T)
    with pytest.raises(NonRepresentableInverse):
        parse_laurent("(t+1)^-1", GF(3))


def test_printed_elements_reparse(tower):
    rng = random.Random(f"print-{tower.name}")
    for _ in range(25):
        a = random_element(tower, rng)
        assert parse_element(str(a), tower) == a
