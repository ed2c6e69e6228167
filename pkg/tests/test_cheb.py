import cmath
import math
from fractions import Fraction

import pytest
import sympy

from helpers import close, leval
from ritteq.cheb import TrigExpr, U, V, cheb_T, encode_trig, laurent_UV, phase
from ritteq.cyclo import zeta
from ritteq.errors import UsageError
from ritteq.laurent import LaurentPoly, Z, compose

X = sympy.Symbol("x")


@pytest.mark.parametrize("n", range(0, 25))
def test_cheb_T_matches_sympy(n):
    poly = sympy.Poly(sympy.chebyshevt(n, X), X)
    expected = {k[0]: Fraction(int(c)) for k, c in poly.terms()}
    assert cheb_T(n).terms == expected


def test_defining_property_numerically():
    for n in (1, 2, 5, 9):
        for t in (0.1, 0.7, 2.3):
            assert close(complex(sum(float(c) * math.cos(t) ** k for k, c in cheb_T(n).terms.items())), math.cos(n * t))


def test_small_laws():
    assert compose(cheb_T(2), cheb_T(3)) == compose(cheb_T(3), cheb_T(2)) == cheb_T(6)
    assert compose(cheb_T(3), U(2)) == U(6)
    assert U(3) * U(3) + V(3) * V(3) == 1
    assert compose(U(4), LaurentPoly({-1: 1})) == U(4)


def test_encode_cos_sin_exp():
    assert encode_trig(TrigExpr.cos(1)) == U(1)
    assert encode_trig(TrigExpr.cos(1, phase(1, 2))) == -V(1)
    assert encode_trig(TrigExpr.exp(3)) == Z ** 3
    assert encode_trig(TrigExpr.exp(2, variable="z")) == Z ** 2


@pytest.mark.parametrize(
    "expr,fn",
    [
        (TrigExpr.cos(3, phase(1, 4)), lambda t: cmath.cos(3 * t + math.pi / 4)),
        (TrigExpr.sin(2, phase(-2, 3)), lambda t: cmath.sin(2 * t - 2 * math.pi / 3)),
        (TrigExpr.cos(1) + TrigExpr.sin(5, amplitude=3), lambda t: cmath.cos(t) + 3 * cmath.sin(5 * t)),
        (TrigExpr.exp(-2, phase(1, 3)), lambda t: cmath.exp(1j * (-2 * t + math.pi / 3))),
    ],
)
def test_encoding_matches_numeric(expr, fn):
    L = encode_trig(expr)
    for t in (0.3, 1.1, -2.4):
        assert close(leval(L, cmath.exp(1j * t)), fn(t))


def test_conductor_too_small_names_needed():
    with pytest.raises(UsageError, match="multiple of 8"):
        encode_trig(TrigExpr.cos(1, phase(1, 4)), 4)
    with pytest.raises(UsageError, match="multiple of 4"):
        encode_trig(TrigExpr.sin(1), 2)


def test_phase_values():
    assert phase(1, 2) == zeta(4)
    assert phase(2, 3) == zeta(3)
    assert phase(1, 1) == -1


def test_bad_arguments():
    with pytest.raises(UsageError):
        laurent_UV("W", 2)
    with pytest.raises(UsageError):
        cheb_T(-1)
    with pytest.raises(UsageError):
        TrigExpr.cos(1, phase=2)
    with pytest.raises(UsageError):
        TrigExpr.cos(1) + TrigExpr.exp(1, variable="z")
    with pytest.raises(UsageError):
        encode_trig(TrigExpr(TrigExpr.cos(1).terms, variable="z"))
