"""Functional decomposition of polynomials and Laurent polynomials.

Every routine here proposes a candidate cheaply (approximate roots of power
series) and returns it only after exact recomposition.  Right factors are
normalized to be monic with value 0 at 0, which pins down the affine freedom
``F o H = (F o m^-1) o (m o H)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

from .cyclo import as_elem, nth_roots
from .errors import UsageError, VerificationError
from .laurent import AffineMap, LaurentPoly, Z, compose, poly_divmod

__all__ = [
    "divisors",
    "right_factor_poly",
    "left_quotient",
    "ExtensionRoot",
    "affine_right_equivalence",
    "SolveRight",
    "solve_right",
    "Decomposition",
    "complete_decomposition",
    "all_complete_decompositions",
    "laurent_monomial_right_factor",
    "laurent_left_poly_factor",
    "laurent_left_poly_factors",
    "laurent_left_quotient",
    "CommonLeftFactor",
    "common_left_factor",
    "centered",
]


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _series_root(p: list, k: int, terms: int) -> list:
    """First ``terms`` coefficients of (1 + p[1] t + p[2] t^2 + ...)^(1/k)."""
    q = [Fraction(1)]
    for n in range(1, terms):
        acc = 0
        for j in range(1, n + 1):
            pj = p[j] if j < len(p) else 0
            if pj:
                acc = acc + pj * q[n - j] * (Fraction(j, k) - n + j)
        q.append(acc * Fraction(1, n))
    return q


def _require_poly(p: LaurentPoly, name: str):
    if not p.is_polynomial():
        raise UsageError(f"{name} must be a polynomial, got {p}")


def right_factor_poly(P: LaurentPoly, l: int) -> LaurentPoly | None:
    """The normalized degree-``l`` right factor H of P (P = F o H), or None."""
    _require_poly(P, "P")
    n = P.degree
    if n < 1:
        raise UsageError("right factors need deg P >= 1")
    if l < 1 or n % l:
        raise UsageError(f"{l} does not divide deg P = {n}")
    if l == 1:
        return Z
    k = n // l
    inv = 1 / as_elem(P.lead)
    p = [P.coeff(n - j) * inv for j in range(l)]
    q = _series_root(p, k, l)
    H = LaurentPoly({l - j: q[j] for j in range(l)})
    return H if left_quotient(P, H) is not None else None


def left_quotient(P: LaurentPoly, H: LaurentPoly) -> LaurentPoly | None:
    """F with F o H = P, found by expanding P in base H; None if no such F."""
    _require_poly(P, "P")
    _require_poly(H, "H")
    if H.degree < 1:
        raise UsageError("left_quotient needs deg H >= 1")
    if P.is_zero():
        return P
    if P.degree % H.degree:
        return None
    digits = {}
    rest = P
    i = 0
    while rest:
        rest, r = poly_divmod(rest, H)
        if not r.is_constant():
            return None
        digits[i] = r.coeff(0)
        i += 1
    F = LaurentPoly(digits)
    if compose(F, H) != P:
        raise VerificationError("base expansion did not recompose")  # pragma: no cover
    return F


def centered(P: LaurentPoly) -> tuple[object, LaurentPoly]:
    """(b, P o (z - b)) with the z^(N-1) coefficient removed."""
    n = P.degree
    b = as_elem(P.coeff(n - 1)) / (n * as_elem(P.lead))
    b = b.coeffs[0] if b.is_rational() else b
    return b, compose(P, LaurentPoly({1: 1, 0: -b}))


@dataclass(frozen=True)
class ExtensionRoot:
    """A solution exists once some a with a**index == value is adjoined."""

    index: int
    value: object

    def __str__(self):
        return f"a^{self.index} = {self.value}"


def _bezout(nums: list[int]) -> tuple[int, list[int]]:
    g, coeffs = 0, []
    for n in nums:
        # extended gcd of (g, n)
        old_r, r, old_s, s, old_t, t = g, n, 1, 0, 0, 1
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        coeffs = [c * old_s for c in coeffs] + [old_t]
        g = old_r
    return g, coeffs


def affine_right_equivalence(E: LaurentPoly, F: LaurentPoly, conductor: int = 1):
    """Find m = az+b with E o m = F.

    Returns an :class:`AffineMap`, an :class:`ExtensionRoot` when m exists
    only after adjoining a root, or None when no affine m exists at all.
    """
    _require_poly(E, "E")
    _require_poly(F, "F")
    e = E.degree
    if e < 1 or F.degree != e:
        return None
    conductor = math.lcm(conductor, E.conductor, F.conductor)
    if e == 1:
        e1, f1 = as_elem(E.lead), as_elem(F.lead)
        m = AffineMap(f1 / e1, (as_elem(F.coeff(0)) - E.coeff(0)) / e1)
        return m
    bE, Ec = centered(E)
    bF, Fc = centered(F)
    if Ec.coeff(0) != Fc.coeff(0):
        return None
    exps, ratios = [], []
    for j in range(1, e + 1):
        ec, fc = Ec.coeff(j), Fc.coeff(j)
        if not ec:
            if fc:
                return None
            continue
        if not fc:
            return None
        exps.append(j)
        ratios.append(as_elem(fc) / ec)
    g, bez = _bezout(exps)
    rho = reduce(lambda acc, t: acc * t[0] ** t[1], zip(ratios, bez), as_elem(1))
    if any(r != rho ** (j // g) for j, r in zip(exps, ratios)):
        return None
    roots = nth_roots(rho, g, conductor)
    roots.sort(key=lambda a: a != 1)
    for a in roots:
        m = AffineMap(a, a * as_elem(bF) - bE)
        if compose(E, m.as_poly()) == F:
            return m
    if roots:  # pragma: no cover - every root satisfies the relations
        raise VerificationError("affine candidate failed recomposition")
    return ExtensionRoot(g, rho)


@dataclass(frozen=True)
class SolveRight:
    status: str  # "found", "absent" or "extension"
    value: LaurentPoly | None = None
    relation: ExtensionRoot | None = None

    @property
    def found(self) -> bool:
        return self.status == "found"


def solve_right(E: LaurentPoly, Q: LaurentPoly) -> SolveRight:
    """X with E o X = Q.

    Q = F o H with H its normalized right factor of degree deg Q / deg E; any
    solution is m o H with E o m = F for an affine m, found root-free.
    """
    _require_poly(E, "E")
    _require_poly(Q, "Q")
    e, n = E.degree, Q.degree
    if e < 1 or n % e:
        raise UsageError(f"deg E = {e} must divide deg Q = {n}")
    H = right_factor_poly(Q, n // e)
    if H is None:
        return SolveRight("absent")
    F = left_quotient(Q, H)
    m = affine_right_equivalence(E, F)
    if m is None:
        return SolveRight("absent")
    if isinstance(m, ExtensionRoot):
        return SolveRight("extension", relation=m)
    X = H * m.a + m.b
    if compose(E, X) != Q:  # pragma: no cover
        raise VerificationError("solve_right candidate failed recomposition")
    return SolveRight("found", X)


@dataclass
class Decomposition:
    """Factors listed outermost first; composing them reproduces ``target``."""

    target: LaurentPoly
    factors: list[LaurentPoly]
    normalization: list[dict] = field(default_factory=list)

    def recompose(self) -> LaurentPoly:
        result = self.factors[-1]
        for f in reversed(self.factors[:-1]):
            result = compose(f, result)
        return result

    @property
    def certified(self) -> bool:
        return self.recompose() == self.target

    @property
    def degrees(self) -> list[int]:
        return [f.degree for f in self.factors]


def _normalization(factors):
    out = []
    for i, f in enumerate(factors):
        out.append({"monic": f.lead == 1, "value_at_0": str(f.coeff(0)), "innermost": i == len(factors) - 1})
    return out


def _chain(P: LaurentPoly) -> list[LaurentPoly]:
    n = P.degree
    for l in divisors(n)[1:-1]:
        H = right_factor_poly(P, l)
        if H is not None:
            return _chain(left_quotient(P, H)) + [H]
    return [P]


def complete_decomposition(P: LaurentPoly) -> Decomposition:
    """A maximal chain of indecomposable factors, smallest right factors first."""
    _require_poly(P, "P")
    if P.degree < 1:
        raise UsageError("decomposition needs deg P >= 1")
    factors = _chain(P)
    d = Decomposition(P, factors, _normalization(factors))
    if not d.certified:  # pragma: no cover
        raise VerificationError("decomposition failed to recompose")
    return d


def _indecomposable(H: LaurentPoly) -> bool:
    return all(right_factor_poly(H, l) is None for l in divisors(H.degree)[1:-1])


def _all_chains(P):
    n = P.degree
    chains = []
    for l in divisors(n)[1:-1]:
        H = right_factor_poly(P, l)
        if H is None or not _indecomposable(H):
            continue
        for left in _all_chains(left_quotient(P, H)):
            chains.append(left + [H])
    return chains or [[P]]


def all_complete_decompositions(P: LaurentPoly) -> list[Decomposition]:
    """Every maximal chain, one per choice of indecomposable right factor at each step."""
    _require_poly(P, "P")
    if P.degree < 1:
        raise UsageError("decomposition needs deg P >= 1")
    return [Decomposition(P, c, _normalization(c)) for c in _all_chains(P)]


def laurent_monomial_right_factor(L: LaurentPoly, d: int) -> LaurentPoly | None:
    """L2 with L = L2 o z^d, which exists iff every exponent of L is divisible by d."""
    if L.is_zero():
        raise UsageError("monomial factor of the zero polynomial")
    if d < 1:
        raise UsageError("monomial degree must be positive")
    if any(k % d for k in L.terms):
        return None
    return LaurentPoly({k // d: c for k, c in L.terms.items()})


def laurent_left_poly_factor(L: LaurentPoly, a: int):
    """(A, W) with A a degree-``a`` polynomial and L = A o W, or None.

    W is normalized to have top coefficient 1 and no constant term, so no
    root of the top coefficient is ever needed.  Its upper half comes from
    the a-th root of L at infinity, its lower half from the a-th root at 0.
    The lower half depends on which a-th root of the trailing coefficient is
    taken; :func:`laurent_left_poly_factors` returns every choice that works.
    """
    found = laurent_left_poly_factors(L, a)
    return found[0] if found else None


def laurent_left_poly_factors(L: LaurentPoly, a: int) -> list:
    """Every normalized (A, W) with L = A o W and deg A = a, over the working field."""
    if L.is_zero():
        raise UsageError("left factor of the zero polynomial")
    if L.is_polynomial():
        n = L.degree
        if a < 1 or n % a:
            raise UsageError(f"{a} does not divide deg L = {n}")
        H = right_factor_poly(L, n // a)
        return [] if H is None else [(left_quotient(L, H), H)]
    p, q = L.deg_plus, L.deg_minus
    if a < 1 or p % a or q % a:
        raise UsageError(f"{a} must divide both deg+ L = {p} and deg- L = {q}")
    alpha = as_elem(L.lead)
    M = L.scale(1 / alpha)
    pa, qa = p // a, q // a
    top = _series_root([M.coeff(p - j) for j in range(2 * pa)], a, 2 * pa)
    upper = {pa - j: top[j] for j in range(2 * pa) if pa - j != 0}
    beta = as_elem(M.trail)
    low_series = _series_root([Fraction(1)] + [M.coeff(-q + j) / beta for j in range(1, 2 * qa)], a, 2 * qa)
    out = []
    for c in nth_roots(beta, a, L.conductor):
        lower = {-qa + j: low_series[j] * c for j in range(qa)}
        if any(k in upper and upper[k] != v for k, v in lower.items()):
            continue
        terms = {k: v for k, v in upper.items() if k > 0 or k not in lower}
        terms.update(lower)
        W = LaurentPoly(terms)
        A = _base_expand(L, W, a)
        if A is not None and all(W != w for _, w in out):
            out.append((A, W))
    return out


def _base_expand(L: LaurentPoly, W: LaurentPoly, a: int) -> LaurentPoly | None:
    # the extreme exponents of W^j are distinct, so they pick off A's coefficients
    if W.deg_plus >= 1:
        step, lead = W.deg_plus, as_elem(W.lead)
    else:
        step, lead = -W.deg_minus, as_elem(W.trail)
    powers = [LaurentPoly.const(1)]
    for _ in range(a):
        powers.append(powers[-1] * W)
    rest = L
    coeffs = {}
    for j in range(a, -1, -1):
        c = rest.coeff(j * step)
        if c:
            c = as_elem(c) / lead ** j
            coeffs[j] = c
            rest = rest - powers[j].scale(c)
    if rest:
        return None
    return LaurentPoly(coeffs)


def laurent_left_quotient(L: LaurentPoly, W: LaurentPoly) -> LaurentPoly | None:
    """Polynomial A with A o W = L for Laurent W, or None."""
    if W.is_constant():
        raise UsageError("left quotient by a constant")
    if L.is_zero():
        return L
    span = W.deg_plus if W.deg_plus >= 1 else W.deg_minus
    top = L.deg_plus if W.deg_plus >= 1 else L.deg_minus
    if top < 0 or top % span:
        return None
    return _base_expand(L, W, top // span)


@dataclass(frozen=True)
class CommonLeftFactor:
    E: LaurentPoly
    P_tilde: LaurentPoly
    Q_tilde: LaurentPoly
    skipped: tuple = ()  # (degree, ExtensionRoot) pairs needing an extension

    def __iter__(self):
        return iter((self.E, self.P_tilde, self.Q_tilde))


def common_left_factor(P: LaurentPoly, Q: LaurentPoly) -> CommonLeftFactor:
    """Largest-degree E with P = E o P~ and Q = E o Q~ over the working field."""
    _require_poly(P, "P")
    _require_poly(Q, "Q")
    g = math.gcd(P.degree, Q.degree)
    skipped = []
    for d in reversed(divisors(g)):
        Pt = right_factor_poly(P, P.degree // d)
        if Pt is None:
            continue
        E = left_quotient(P, Pt)
        sol = solve_right(E, Q)
        if sol.found:
            return CommonLeftFactor(E, Pt, sol.value, tuple(skipped))
        if sol.status == "extension":
            skipped.append((d, sol.relation))
    raise VerificationError("no common left factor, not even an affine one")  # pragma: no cover
