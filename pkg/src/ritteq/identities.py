"""Generators and an exact verifier for the explicit double-decomposition families.

Each generator returns an :class:`IdentityInstance` ``lhs_outer o lhs_inner =
rhs_outer o rhs_inner`` with trigonometric inner functions already encoded
as Laurent polynomials (``w = e^{iz}``, or ``w = e^z`` for ``B1``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

from .certs import Certificate
from .cheb import TrigExpr, U, V, cheb_T, encode_trig, phase
from .cyclo import embed, zeta
from .decomp import affine_right_equivalence, laurent_left_quotient
from .errors import UsageError, VerificationError
from .laurent import AffineMap, BivarPoly, LaurentPoly, Z, affine_apply, bivar_eval, compose

__all__ = [
    "FAMILIES",
    "FamilyParams",
    "IdentityInstance",
    "generate",
    "verify",
    "sporadic_pair",
    "lemma_zc_recover",
    "curve_check",
    "tamper",
]

FAMILIES = ("r1", "r2", "r3", "opi", "r4", "A5", "B1", "B2", "hy", "yh", "zc")

ONE = LaurentPoly.const(1)


@dataclass(frozen=True)
class FamilyParams:
    family: str
    n: int | None = None
    m: int | None = None
    r: int | None = None
    l: int | None = None
    k: int | None = None
    d1: int | None = None
    d2: int | None = None
    R: LaurentPoly | None = None
    S: LaurentPoly | None = None
    L: LaurentPoly | None = None
    N: LaurentPoly | None = None

    def as_dict(self) -> dict:
        out = {"family": self.family}
        for key in ("n", "m", "r", "l", "k", "d1", "d2"):
            if getattr(self, key) is not None:
                out[key] = getattr(self, key)
        for key in ("R", "S", "L", "N"):
            if getattr(self, key) is not None:
                out[key] = str(getattr(self, key))
        return out


@dataclass(frozen=True)
class IdentityInstance:
    lhs_outer: LaurentPoly
    lhs_inner: LaurentPoly
    rhs_outer: LaurentPoly
    rhs_inner: LaurentPoly
    conductor: int
    params: FamilyParams
    variable: str = "w = e^{iz}"
    notes: tuple[str, ...] = ()

    @property
    def lhs(self) -> LaurentPoly:
        return compose(self.lhs_outer, self.lhs_inner)

    @property
    def rhs(self) -> LaurentPoly:
        return compose(self.rhs_outer, self.rhs_inner)


def _need(p: FamilyParams, *names):
    for name in names:
        if getattr(p, name) is None:
            raise UsageError(f"family {p.family} needs parameter {name}")


def _positive(p: FamilyParams, *names, minimum=1):
    for name in names:
        if getattr(p, name) < minimum:
            raise UsageError(f"family {p.family} needs {name} >= {minimum}")


def _coprime(p: FamilyParams, a: str, b: str):
    if math.gcd(getattr(p, a), getattr(p, b)) != 1:
        raise UsageError(f"family {p.family} needs GCD({a}, {b}) = 1, got {getattr(p, a)}, {getattr(p, b)}")


def _poly_param(p: FamilyParams, name: str):
    v = getattr(p, name)
    if not v.is_polynomial():
        raise UsageError(f"family {p.family} needs {name} to be a polynomial")


def _mono(k: int) -> LaurentPoly:
    return LaurentPoly({k: 1})


def _cyclic_pair(p: FamilyParams, inner: LaurentPoly):
    """z^n o z^r X(z^n) = z^r X^n o z^n."""
    n, r = p.n, p.r
    return _mono(n), _mono(r) * compose(inner, _mono(n)), _mono(r) * inner ** n, _mono(n)


def sporadic_pair():
    """The two sides of the sporadic solution, encoded over Q(zeta_24)."""
    i = embed(zeta(4), 24)
    s2 = embed(zeta(8) + zeta(8, 7), 24)  # 2 cos(pi/4)
    s3 = embed(zeta(12) + zeta(12, 11), 24)  # 2 cos(pi/6)
    A = (Z ** 2 - 1) ** 3
    L1 = V(2).scale(i / s3) + U(1).scale(2 * s2 / s3)
    B = Z ** 4 * 3 - Z ** 3 * 4
    L2 = V(3).scale(i / (3 * s2)) + U(2) + V(1).scale(i / s2) + Fraction(2, 3)
    return A, L1, B, L2


def generate(p: FamilyParams) -> IdentityInstance:
    """Build both sides of one family member after checking its side conditions."""
    f = p.family
    if f not in FAMILIES:
        raise UsageError(f"unknown family {f!r}; expected one of {', '.join(FAMILIES)}")
    notes = ()
    variable = "w = e^{iz}"
    if f in ("r1", "hy", "B1"):
        key = "R" if f == "r1" else "L"
        _need(p, "n", "r", key)
        _positive(p, "n")
        _positive(p, "r", minimum=0)
        _coprime(p, "n", "r")
        if f == "r1":
            _poly_param(p, "R")
            variable = "z"
        if f == "B1":
            variable = "w = e^z"
        parts, cond = _cyclic_pair(p, getattr(p, key)), getattr(p, key).conductor
    elif f in ("r2", "opi", "B2", "yh"):
        _need(p, "n", "m")
        _positive(p, "n", "m")
        _coprime(p, "n", "m")
        n, m = p.n, p.m
        if f == "r2":
            parts, cond, variable = (cheb_T(n), cheb_T(m), cheb_T(m), cheb_T(n)), 1, "z"
        elif f == "opi":
            parts, cond = (cheb_T(n), encode_trig(TrigExpr.cos(m), 4), cheb_T(m), encode_trig(TrigExpr.cos(n), 4)), 4
        elif f == "B2":
            parts, cond = (cheb_T(n), encode_trig(TrigExpr.cos(m), 4), U(m), encode_trig(TrigExpr.exp(n), 4)), 4
        else:
            parts, cond = (cheb_T(n), U(m), U(m), _mono(n)), 1
    elif f == "r3":
        _need(p, "S")
        _poly_param(p, "S")
        S = p.S
        parts = (Z ** 2, U(1) * compose(S, V(1)), (ONE - Z ** 2) * S ** 2, V(1))
        cond = math.lcm(4, S.conductor)
    elif f == "r4":
        _need(p, "n", "m", "l", "k")
        _positive(p, "n", "m")
        _coprime(p, "n", "m")
        n, m, l, k = p.n, p.m, p.l, p.k
        if l <= 1:
            raise UsageError(f"family r4 needs l > 1, got {l}")
        if not 0 <= k < n * l:
            raise UsageError(f"family r4 needs 0 <= k < nl = {n * l}, got {k}")
        cond = 2 * n * l
        inner = encode_trig(TrigExpr.cos(m, phase(2 * k + 1, n * l)), cond)
        parts = (-cheb_T(n * l), inner, cheb_T(m * l), encode_trig(TrigExpr.cos(n), cond))
    elif f == "A5":
        parts, cond = sporadic_pair(), 24
    else:  # zc
        _need(p, "d1", "d2", "N")
        _positive(p, "d1", "d2")
        D = math.lcm(p.d1, p.d2)
        N = p.N
        parts = (compose(N, _mono(D // p.d1)), _mono(p.d1), compose(N, _mono(D // p.d2)), _mono(p.d2))
        cond, variable = N.conductor, "z"
        notes = (f"D = {D}",)
    lo, li, ro, ri = parts
    return IdentityInstance(lo, li, ro, ri, cond, p, variable, notes)


def _correct_inner(outer: LaurentPoly, inner: LaurentPoly, target: LaurentPoly, conductor: int):
    """An affine m with outer o (m o inner) = target, found by base expansion of target in inner."""
    alt = laurent_left_quotient(target, inner)
    if alt is None:
        return None
    m = affine_right_equivalence(outer, alt, conductor)
    return m if isinstance(m, AffineMap) else None


def verify(inst: IdentityInstance) -> Certificate:
    """Certificate for lhs_outer o lhs_inner = rhs_outer o rhs_inner.

    For the sporadic family a failed literal check falls back to an affine
    correction on one inner function; the corrected identity is certified
    and the correction recorded in the note.
    """
    name = f"{inst.params.family}: lhs_outer o lhs_inner = rhs_outer o rhs_inner"
    var = "z" if inst.variable == "z" else "w"
    cert = Certificate(name, inst.lhs, inst.rhs, "", var)
    if cert.exact or inst.params.family != "A5":
        return cert
    lhs, rhs = inst.lhs, inst.rhs
    m = _correct_inner(inst.lhs_outer, inst.lhs_inner, rhs, inst.conductor)
    if m is not None:
        fixed = affine_apply("post", m, inst.lhs_inner)
        return Certificate(name, compose(inst.lhs_outer, fixed), rhs, f"affine correction on lhs inner: {m}", var)
    m = _correct_inner(inst.rhs_outer, inst.rhs_inner, lhs, inst.conductor)
    if m is not None:
        fixed = affine_apply("post", m, inst.rhs_inner)
        return Certificate(name, lhs, compose(inst.rhs_outer, fixed), f"affine correction on rhs inner: {m}", var)
    return Certificate(name, lhs, rhs, "no affine correction found", var)


def tamper(inst: IdentityInstance, delta=1) -> IdentityInstance:
    """Copy of ``inst`` with ``delta`` added to the constant of the lhs outer function.

    The two sides then differ exactly at exponent 0.
    """
    return replace(inst, lhs_outer=inst.lhs_outer + delta)


def lemma_zc_recover(L1: LaurentPoly, d1: int, L2: LaurentPoly, d2: int) -> LaurentPoly:
    """N with L1 = N o z^(D/d1) and L2 = N o z^(D/d2), D = lcm(d1, d2)."""
    if d1 < 1 or d2 < 1:
        raise UsageError("d1 and d2 must be positive")
    lhs, rhs = compose(L1, _mono(d1)), compose(L2, _mono(d2))
    if lhs != rhs:
        k, a, b = Certificate("", lhs, rhs).first_difference()
        raise VerificationError(f"L1 o z^{d1} != L2 o z^{d2} at exponent {k}: {a} != {b}", k, a, b)
    D = math.lcm(d1, d2)
    s1 = D // d1
    if any(e % s1 for e in L1.terms):
        raise VerificationError(f"contradiction: support of L1 is not divisible by {s1}")
    N = LaurentPoly({e // s1: c for e, c in L1.terms.items()})
    if compose(N, _mono(D // d2)) != L2:
        raise VerificationError("contradiction: recovered N does not reproduce L2")
    return N


def curve_check(S: LaurentPoly, squared: bool = True) -> Certificate:
    """Evaluate x^2 - (1 - y^2) S(y)^k at (U1 S(V1), V1), k = 2 or 1."""
    if not S.is_polynomial():
        raise UsageError("S must be a polynomial")
    Sk = S ** 2 if squared else S
    curve = {(2, 0): 1}
    for j, c in ((ONE - Z ** 2) * Sk).terms.items():
        curve[(0, j)] = curve.get((0, j), 0) - c
    fx = U(1) * compose(S, V(1))
    residual = bivar_eval(BivarPoly(curve), fx, V(1))
    label = "S^2" if squared else "S"
    return Certificate(f"x^2 - (1 - y^2)*{label}(y) at (U1*S(V1), V1)", residual, LaurentPoly(), var="w")
