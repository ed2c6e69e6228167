"""Chebyshev polynomials and the trig-to-Laurent dictionary.

Under ``w = e^{iz}`` we have cos(nz) = U_n(w) and sin(nz) = V_n(w) with

    U_n(w) = (w^n + w^-n) / 2,    V_n(w) = (w^n - w^-n) / (2i),

so every finite trigonometric sum with root-of-unity phases becomes a Laurent
polynomial over a cyclotomic field, and identities between such sums can be
checked exactly.  For real exponentials ``e^{kz}`` the substitution is
``w = e^z`` instead; a :class:`TrigExpr` records which one it uses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclo import CycloElem, as_elem, embed, root_order, zeta
from .errors import UsageError, VerificationError
from .laurent import LaurentPoly, Z, compose
from .limits import check_degree

__all__ = [
    "cheb_T",
    "laurent_UV",
    "U",
    "V",
    "TrigTerm",
    "TrigExpr",
    "phase",
    "encode_trig",
]

I = zeta(4)


@lru_cache(maxsize=None)
def _cheb(n: int) -> LaurentPoly:
    if n == 0:
        return LaurentPoly.const(1)
    prev, cur = LaurentPoly.const(1), Z
    for _ in range(n - 1):
        prev, cur = cur, Z * cur * 2 - prev
    # the recurrence is only accepted once T_n(cos) = cos(n .) is confirmed
    if compose(cur, _uv("U", 1)) != _uv("U", n):
        raise VerificationError(f"T_{n} fails T_n(U_1) = U_n")
    return cur


def cheb_T(n: int) -> LaurentPoly:
    """The Chebyshev polynomial T_n, characterised by T_n(cos z) = cos(nz)."""
    if n < 0:
        raise UsageError("Chebyshev index must be nonnegative")
    check_degree(n)
    return _cheb(n)


@lru_cache(maxsize=None)
def _uv(kind: str, n: int) -> LaurentPoly:
    half = Fraction(1, 2)
    if n == 0:
        return LaurentPoly.const(1 if kind == "U" else 0)
    if kind == "U":
        return LaurentPoly({n: half, -n: half})
    c = 1 / (2 * I)
    return LaurentPoly({n: c, -n: -c})


def laurent_UV(kind: str, n: int) -> LaurentPoly:
    if kind not in ("U", "V"):
        raise UsageError(f"kind must be 'U' or 'V', not {kind!r}")
    if n < 0:
        raise UsageError("index must be nonnegative")
    check_degree(n)
    return _uv(kind, n)


def U(n: int) -> LaurentPoly:
    return laurent_UV("U", n)


def V(n: int) -> LaurentPoly:
    return laurent_UV("V", n)


def phase(num: int, den: int) -> CycloElem:
    """e^{i*pi*num/den} as a root of unity."""
    if den <= 0:
        raise UsageError("phase denominator must be positive")
    g = math.gcd(num, 2 * den)
    return zeta(2 * den // g, num // g)


@dataclass(frozen=True)
class TrigTerm:
    """amplitude * kind(frequency*z + arg(phase)).

    ``kind`` is ``cos``, ``sin`` or ``exp``; ``exp`` means e^{i(kz+phi)} in
    the ``iz`` variable and e^{kz} * phase in the ``z`` variable.
    """

    kind: str
    frequency: int
    phase: object = 1
    amplitude: object = 1

    def __post_init__(self):
        if self.kind not in ("cos", "sin", "exp"):
            raise UsageError(f"unknown trig kind {self.kind!r}")
        if root_order(self.phase) is None:
            raise UsageError(f"phase {self.phase} is not a root of unity")


@dataclass(frozen=True)
class TrigExpr:
    terms: tuple[TrigTerm, ...] = ()
    constant: object = 0
    variable: str = "iz"

    def __post_init__(self):
        if self.variable not in ("iz", "z"):
            raise UsageError("variable must be 'iz' (w = e^{iz}) or 'z' (w = e^z)")
        object.__setattr__(self, "terms", tuple(self.terms))

    def __add__(self, other):
        if isinstance(other, TrigExpr):
            if other.variable != self.variable:
                raise UsageError("cannot add trig expressions in different substitution variables")
            return TrigExpr(self.terms + other.terms, self.constant + other.constant, self.variable)
        return TrigExpr(self.terms, self.constant + other, self.variable)

    __radd__ = __add__

    def scale(self, c) -> "TrigExpr":
        return TrigExpr(
            tuple(TrigTerm(t.kind, t.frequency, t.phase, t.amplitude * c) for t in self.terms),
            self.constant * c,
            self.variable,
        )

    def needed_conductor(self) -> int:
        m = 1
        for c in [self.constant] + [t.amplitude for t in self.terms] + [t.phase for t in self.terms]:
            m = math.lcm(m, as_elem(c).conductor)
        if any(t.kind == "sin" for t in self.terms):
            m = math.lcm(m, 4)
        return m

    @classmethod
    def cos(cls, k=1, phase=1, amplitude=1):
        return cls((TrigTerm("cos", k, phase, amplitude),))

    @classmethod
    def sin(cls, k=1, phase=1, amplitude=1):
        return cls((TrigTerm("sin", k, phase, amplitude),))

    @classmethod
    def exp(cls, k=1, phase=1, amplitude=1, variable="iz"):
        return cls((TrigTerm("exp", k, phase, amplitude),), variable=variable)


def encode_trig(e: TrigExpr, conductor: int | None = None) -> LaurentPoly:
    """Exact Laurent image of a trig expression under w = e^{iz} (or w = e^z)."""
    need = e.needed_conductor()
    if conductor is None:
        conductor = need
    if conductor % need:
        raise UsageError(
            f"conductor {conductor} cannot hold the phases and amplitudes; need a multiple of {need}"
        )
    half = Fraction(1, 2)
    out = LaurentPoly.const(embed(as_elem(e.constant), conductor))
    for t in e.terms:
        eta = embed(as_elem(t.phase), conductor)
        amp = embed(as_elem(t.amplitude), conductor)
        k = t.frequency
        if e.variable == "z" and t.kind != "exp":
            raise UsageError("cos/sin have no Laurent image under w = e^z")
        if t.kind == "exp":
            piece = LaurentPoly({k: eta})
        elif t.kind == "cos":
            piece = LaurentPoly({k: eta * half}) + LaurentPoly({-k: eta.inverse() * half})
        else:
            c = (2 * embed(I, conductor)).inverse()
            piece = LaurentPoly({k: eta * c}) + LaurentPoly({-k: -eta.inverse() * c})
        out = out + piece.scale(amp)
    return out
