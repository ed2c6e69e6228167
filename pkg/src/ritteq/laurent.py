"""Sparse Laurent polynomials over cyclotomic fields.

A :class:`LaurentPoly` maps integer exponents to nonzero coefficients.
Rational coefficients are stored as :class:`~fractions.Fraction` and everything
else as :class:`~ritteq.cyclo.CycloElem`; the two mix freely in arithmetic.
Polynomials are simply the Laurent polynomials with no negative exponents.

Composition ``outer(inner)`` is only defined when ``outer`` is a polynomial or
``inner`` is a monomial ``c*z^d`` with ``d != 0``.  Any decomposition of a
Laurent polynomial into rational factors is equivalent to one of those two
shapes, so nothing else is ever needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .cyclo import CycloElem, as_elem
from .errors import DomainError, UsageError
from .limits import check_degree

__all__ = [
    "LaurentPoly",
    "Z",
    "ONE",
    "compose",
    "AffineMap",
    "affine_apply",
    "BivarPoly",
    "bivar_eval",
    "SupportStats",
    "support_stats",
    "poly_divmod",
    "first_difference",
]


def _norm(c):
    """Canonical scalar: Fraction when rational, CycloElem otherwise."""
    if isinstance(c, CycloElem):
        return c.coeffs[0] if c.is_rational() else c
    if isinstance(c, Fraction):
        return c
    return Fraction(c)


def _scalar(x) -> bool:
    return isinstance(x, (int, Fraction, CycloElem)) and not isinstance(x, bool)


class LaurentPoly:
    """Immutable finite sum of c_k z^k with k in Z."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for k, c in (terms or {}).items():
            c = _norm(c)
            if c:
                clean[int(k)] = c
        self.terms: dict[int, object] = clean
        self._hash = None

    # -- constructors ----------------------------------------------------
    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, c, k: int) -> "LaurentPoly":
        return cls({k: c})

    @classmethod
    def from_coeffs(cls, coeffs, shift: int = 0) -> "LaurentPoly":
        """coeffs[j] is the coefficient of z^(j+shift)."""
        return cls({j + shift: c for j, c in enumerate(coeffs)})

    # -- structure -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def deg_plus(self) -> int:
        if not self.terms:
            raise DomainError("degree of the zero Laurent polynomial")
        return max(self.terms)

    @property
    def deg_minus(self) -> int:
        if not self.terms:
            raise DomainError("degree of the zero Laurent polynomial")
        return -min(self.terms)

    @property
    def degree(self) -> int:
        """Polynomial degree; raises for genuine Laurent polynomials."""
        if not self.is_polynomial():
            raise DomainError(f"{self} is not a polynomial")
        return max(self.terms) if self.terms else -1

    def is_polynomial(self) -> bool:
        return not self.terms or min(self.terms) >= 0

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def support(self) -> list[int]:
        return sorted(self.terms)

    def coeff(self, k: int):
        return self.terms.get(k, Fraction(0))

    @property
    def lead(self):
        return self.terms[self.deg_plus]

    @property
    def trail(self):
        return self.terms[-self.deg_minus]

    @property
    def conductor(self) -> int:
        m = 1
        for c in self.terms.values():
            if isinstance(c, CycloElem):
                m = m * c.conductor // math.gcd(m, c.conductor)
        return m

    def dense(self) -> list:
        """Coefficient list c_0..c_deg of a polynomial."""
        d = self.degree
        return [self.coeff(k) for k in range(d + 1)]

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if _scalar(other):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c) -> "LaurentPoly":
        c = _norm(c)
        return LaurentPoly({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if _scalar(other):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.terms and other.terms:
            check_degree(max(self.deg_plus + other.deg_plus, self.deg_minus + other.deg_minus))
        acc: dict[int, object] = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                k = i + j
                acc[k] = acc[k] + a * b if k in acc else a * b
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial():
                raise DomainError("negative power of a non-monomial Laurent polynomial")
            (k, c), = self.terms.items()
            check_degree(abs(k * n))
            return LaurentPoly({k * n: as_elem(c) ** n})
        if self.terms:
            check_degree(n * max(self.deg_plus, self.deg_minus))
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, inner) -> "LaurentPoly":
        return compose(self, inner)

    def scale_arg(self, c) -> "LaurentPoly":
        """p(c*z)."""
        c = as_elem(c)
        return LaurentPoly({k: v * c ** k for k, v in self.terms.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """z^k * p."""
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def map_coeffs(self, fn) -> "LaurentPoly":
        return LaurentPoly({k: fn(c) for k, c in self.terms.items()})

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- display ---------------------------------------------------------
    def to_str(self, var: str = "z", conductor: int | None = None) -> str:
        """Canonical text; pass ``conductor`` to print every coefficient in one field."""
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            if conductor is not None and isinstance(c, CycloElem):
                c = c.embed(conductor)
            sign, body = _coeff_str(c)
            if k == 0:
                mono = body
            else:
                x = var if k == 1 else f"{var}^{k}"
                mono = x if body == "1" else f"{body}*{x}"
            parts.append((sign, mono))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"LaurentPoly({self.to_str()!r})"


def _coeff_str(c) -> tuple[str, str]:
    if isinstance(c, Fraction):
        q = abs(c)
        body = str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
        return ("-" if c < 0 else "+"), body
    terms = list(c.terms())
    if len(terms) == 1:
        q, j = terms[0]
        sign = "-" if q < 0 else "+"
        return sign, str(-c if q < 0 else c)
    return "+", f"({c})"


Z = LaurentPoly({1: 1})
ONE = LaurentPoly({0: 1})


def compose(outer: LaurentPoly, inner: LaurentPoly) -> LaurentPoly:
    """outer(inner), for polynomial outer or monomial inner."""
    if _scalar(inner):
        inner = LaurentPoly.const(inner)
    if not outer.terms:
        return outer
    if outer.is_polynomial():
        deg = outer.deg_plus
        if inner.terms:
            check_degree(deg * max(inner.deg_plus, inner.deg_minus, 0))
        result = LaurentPoly.const(outer.coeff(deg))
        for k in range(deg - 1, -1, -1):
            result = result * inner
            c = outer.terms.get(k)
            if c is not None:
                result = result + c
        return result
    if inner.is_monomial():
        (d, c), = inner.terms.items()
        if d == 0:
            raise DomainError("Laurent outer composed with a constant inner")
        check_degree(abs(d) * max(outer.deg_plus, outer.deg_minus))
        c = as_elem(c)
        return LaurentPoly({k * d: v * c ** k for k, v in outer.terms.items()})
    raise DomainError(
        "composition with a Laurent outer is defined only for monomial inners c*z^d; "
        "restructure as A o L1 (polynomial A) or L2 o c*z^d"
    )


@dataclass(frozen=True)
class AffineMap:
    """z -> a*z + b with a != 0."""

    a: object
    b: object = 0

    def __post_init__(self):
        object.__setattr__(self, "a", _norm(self.a))
        object.__setattr__(self, "b", _norm(self.b))
        if not self.a:
            raise UsageError("affine map needs a nonzero linear coefficient")

    def as_poly(self) -> LaurentPoly:
        return LaurentPoly({1: self.a, 0: self.b})

    def __call__(self, p):
        return p * self.a + self.b

    def then(self, other: "AffineMap") -> "AffineMap":
        """other o self."""
        return AffineMap(other.a * self.a, other.a * self.b + other.b)

    def inverse(self) -> "AffineMap":
        inv = 1 / as_elem(self.a)
        return AffineMap(inv, -self.b * inv)

    def is_identity(self) -> bool:
        return self.a == 1 and self.b == 0

    def __str__(self):
        return self.as_poly().to_str()


def affine_apply(side: str, m: AffineMap, p: LaurentPoly) -> LaurentPoly:
    """``side='pre'`` gives p o m, ``side='post'`` gives m o p."""
    if side == "post":
        return p * m.a + m.b
    if side != "pre":
        raise UsageError(f"side must be 'pre' or 'post', not {side!r}")
    if p.is_polynomial():
        return compose(p, m.as_poly())
    if m.b == 0:
        return compose(p, LaurentPoly.monomial(m.a, 1))
    raise DomainError("pre-composing a Laurent polynomial with a translation")


class BivarPoly:
    """Polynomial in x, y with nonnegative exponents."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise UsageError("bivariate exponents must be nonnegative")
            c = _norm(c)
            if c:
                self.terms[(i, j)] = c

    @classmethod
    def from_parts(cls, fx: LaurentPoly, fy: LaurentPoly) -> "BivarPoly":
        """fx(x) + fy(y) as a bivariate polynomial (both polynomials)."""
        out: dict = {}
        for k, c in fx.terms.items():
            out[(k, 0)] = out.get((k, 0), 0) + c
        for k, c in fy.terms.items():
            out[(0, k)] = out.get((0, k), 0) + c
        return cls(out)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return BivarPoly(out)

    def __mul__(self, other):
        if _scalar(other):
            return BivarPoly({k: c * _norm(other) for k, c in self.terms.items()})
        acc: dict = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                k = (i1 + i2, j1 + j2)
                acc[k] = acc[k] + a * b if k in acc else a * b
        return BivarPoly(acc)

    def __neg__(self):
        return BivarPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for (i, j), c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                s for s in ((f"x^{i}" if i > 1 else "x" if i else ""), (f"y^{j}" if j > 1 else "y" if j else "")) if s
            )
            out.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(out)


def bivar_eval(u: BivarPoly, fx: LaurentPoly, fy: LaurentPoly) -> LaurentPoly:
    """u(fx, fy), expanded exactly."""
    if not u.terms:
        return LaurentPoly()
    max_i = max(i for i, _ in u.terms)
    max_j = max(j for _, j in u.terms)
    px = [ONE]
    for _ in range(max_i):
        px.append(px[-1] * fx)
    py = [ONE]
    for _ in range(max_j):
        py.append(py[-1] * fy)
    result = LaurentPoly()
    for (i, j), c in u.terms.items():
        result = result + (px[i] * py[j]).scale(c)
    return result


@dataclass(frozen=True)
class SupportStats:
    deg_plus: int
    deg_minus: int
    support: tuple[int, ...]
    support_gcd: int
    diff_gcd: int


def support_stats(p: LaurentPoly) -> SupportStats:
    if p.is_zero():
        raise DomainError("support statistics of the zero polynomial")
    sup = tuple(p.support())
    sgcd = reduce(math.gcd, (abs(k) for k in sup), 0)
    dgcd = reduce(math.gcd, (k - sup[0] for k in sup[1:]), 0)
    return SupportStats(p.deg_plus, p.deg_minus, sup, sgcd, dgcd)


def poly_divmod(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Euclidean division of polynomials: a = q*b + r with deg r < deg b."""
    if not b.terms:
        raise ZeroDivisionError("polynomial division by zero")
    if not (a.is_polynomial() and b.is_polynomial()):
        raise DomainError("poly_divmod needs polynomials")
    db = b.degree
    inv_lead = 1 / as_elem(b.lead)
    inv_lead = _norm(inv_lead)
    rem = dict(a.terms)
    quot = {}
    top = max(rem) if rem else -1
    for k in range(top, db - 1, -1):
        c = rem.get(k)
        if c is None:
            continue
        c = _norm(c)
        if not c:
            del rem[k]
            continue
        q = _norm(c * inv_lead)
        quot[k - db] = q
        for j, bc in b.terms.items():
            e = k - db + j
            v = rem.get(e, 0) - q * bc
            rem[e] = v
        rem.pop(k, None)
    return LaurentPoly(quot), LaurentPoly(rem)


def first_difference(lhs: LaurentPoly, rhs: LaurentPoly):
    """Smallest exponent where the two differ, with both coefficients; None if equal."""
    diff = lhs - rhs
    if diff.is_zero():
        return None
    k = min(diff.terms)
    return k, lhs.coeff(k), rhs.coeff(k)
