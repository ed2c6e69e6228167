import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import close, leval
from ritteq.cheb import U, V, cheb_T
from ritteq.cyclo import zeta
from ritteq.errors import DomainError, ParseError, UsageError
from ritteq.expr import (
    BinOp,
    Cheb,
    Comp,
    Imag,
    Neg,
    Num,
    Pow,
    Trig,
    Var,
    Zeta,
    evaluate,
    parse,
    parse_poly,
    tokenize,
    unparse,
)
from ritteq.laurent import LaurentPoly, Z

z = Z


def test_examples():
    assert evaluate(parse("comp(T(2), T(3))")) == cheb_T(6)
    L = parse_poly("z^-2 + z^2")
    assert set(L.terms) == {-2, 2}
    assert parse_poly("zeta(4)*z") == zeta(4) * z
    assert parse_poly("i*z") == zeta(4) * z


def test_precedence_and_unary_minus():
    assert parse_poly("-z^2") == -(z ** 2)
    assert parse_poly("2*-z") == -2 * z
    assert parse_poly("1 - 2 - 3") == LaurentPoly.const(-4)
    assert parse_poly("(z+1)^2") == z ** 2 + 2 * z + 1
    assert parse_poly("3/4*z") == Fraction(3, 4) * z
    assert parse_poly("(2*z)^-1") == LaurentPoly({-1: Fraction(1, 2)})


def test_builtins():
    assert parse_poly("U(3)") == U(3)
    assert parse_poly("V(2)") == V(2)
    assert parse_poly("cos(1)") == U(1)
    assert parse_poly("cos(1, 1, 2)") == -V(1)
    assert parse_poly("exp(-3)") == z ** -3
    assert parse_poly("w + 1") == z + 1


@pytest.mark.parametrize(
    "src,fn",
    [
        ("cos(3, 1, 4)", lambda t: cmath.cos(3 * t + cmath.pi / 4)),
        ("sin(2) - 2*cos(1, -1, 3)", lambda t: cmath.sin(2 * t) - 2 * cmath.cos(t - cmath.pi / 3)),
        ("comp(T(3), cos(1))", lambda t: cmath.cos(3 * t)),
    ],
)
def test_trig_values(src, fn):
    L = parse_poly(src)
    for t in (0.4, -1.7):
        assert close(leval(L, cmath.exp(1j * t)), fn(t))


@pytest.mark.parametrize(
    "src,line,column",
    [
        ("z +", 1, 4),
        ("z ^ z", 1, 5),
        ("foo(2)", 1, 1),
        ("z\n  + $", 2, 5),
        ("T(2", 1, 4),
        ("(z + 1))", 1, 8),
        ("3/0", 1, 1),
        ("comp(z z)", 1, 8),
    ],
)
def test_parse_errors_carry_position(src, line, column):
    with pytest.raises(ParseError) as info:
        parse(src)
    assert (info.value.line, info.value.column) == (line, column)


def test_parse_error_lists_expected():
    with pytest.raises(ParseError) as info:
        parse("comp(z z)")
    assert "','" in info.value.expected


def test_semantic_errors():
    with pytest.raises(UsageError):
        parse_poly("z^-1", polynomial=True)
    with pytest.raises(DomainError):
        parse_poly("comp(U(1), z + 1)")


def test_tokenize_positions():
    toks = tokenize("T(12)\n + z")
    assert [(t.text, t.line, t.column) for t in toks[:5]] == [("T", 1, 1), ("(", 1, 2), ("12", 1, 3), (")", 1, 5), ("+", 2, 2)]


def test_unparse_examples():
    assert unparse(parse("-(z + 1)^2")) == "-(z + 1)^2"
    assert unparse(parse("(1/2)^3")) == "(1/2)^3"
    assert unparse(parse("z - (z - 1)")) == "z - (z - 1)"
    assert unparse(parse("cos(2,1,3)")) == "cos(2, 1, 3)"


# -- round trip over random trees ------------------------------------------

leaves = st.one_of(
    st.builds(Num, st.fractions(min_value=0, max_value=50, max_denominator=9)),
    st.just(Imag()),
    st.builds(Zeta, st.integers(1, 24)),
    st.builds(Var, st.sampled_from(["z", "w"])),
    st.builds(Cheb, st.sampled_from(["T", "U", "V"]), st.integers(0, 8)),
    st.builds(lambda k: Trig("exp", k), st.integers(-4, 4)),
    st.builds(Trig, st.sampled_from(["cos", "sin"]), st.integers(-4, 4), st.integers(-6, 6), st.integers(1, 6)),
)


def _extend(children):
    return st.one_of(
        st.builds(BinOp, st.sampled_from(["+", "-", "*"]), children, children),
        st.builds(Neg, children),
        st.builds(Pow, children, st.integers(-3, 4)),
        st.builds(Comp, children, children),
    )


trees = st.recursive(leaves, _extend, max_leaves=12)


@settings(max_examples=1200, deadline=None)
@given(trees)
def test_print_parse_round_trip(tree):
    text = unparse(tree)
    again = parse(text)
    assert again == tree
    assert unparse(again) == text
