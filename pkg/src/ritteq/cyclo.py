"""Exact arithmetic in cyclotomic fields Q(zeta_M).

Elements are coefficient vectors over the power basis 1, zeta, ..., zeta^(phi(M)-1),
reduced modulo the M-th cyclotomic polynomial. Rational coefficients are
:class:`fractions.Fraction`. Binary operations join conductors via lcm and
embed both operands first, so ``zeta(4) * zeta(3)`` lands in Q(zeta_12).

Nothing in here uses floating point except ``__complex__``, which exists for
debugging output only.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import gmpy2

from .errors import DomainError, UsageError
from .limits import check_conductor

__all__ = [
    "CycloElem",
    "cyclotomic_poly",
    "totient",
    "zeta",
    "rational",
    "root_order",
    "embed",
    "nth_roots",
    "as_elem",
]


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _mobius(n: int) -> int:
    sign, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            sign = -sign
        p += 1
    if n > 1:
        sign = -sign
    return sign


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple[int, ...]:
    # (x^m - 1) divided exactly by every Phi_d, d | m, d < m.  Low degree first.
    num = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        num = _exact_div_int(num, _cyclotomic(d))
    return tuple(num)


def _exact_div_int(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic with integer coefficients, so the quotient stays integral
    num = list(num)
    dq = len(den) - 1
    quot = [0] * (len(num) - dq)
    for i in range(len(num) - 1, dq - 1, -1):
        c = num[i]
        if c:
            quot[i - dq] = c
            for j, dc in enumerate(den):
                num[i - dq + j] -= c * dc
    if any(num[:dq]):
        raise ArithmeticError("cyclotomic division left a remainder")
    return quot


def cyclotomic_poly(m: int) -> list[int]:
    """Coefficients of Phi_m, constant term first."""
    if m < 1:
        raise UsageError(f"conductor must be positive, got {m}")
    check_conductor(m)
    return list(_cyclotomic(m))


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds zeta_m^k reduced mod Phi_m, for 0 <= k < m."""
    phi = _cyclotomic(m)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by x, then reduce the overflow using the monic Phi_m
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(rows)


@lru_cache(maxsize=None)
def _ramanujan(m: int, j: int) -> int:
    # trace of zeta_m^j from Q(zeta_m) to Q
    g = math.gcd(j, m)
    return _mobius(m // g) * totient(m) // totient(m // g)


_ZERO = Fraction(0)


class CycloElem:
    """An element of Q(zeta_M) in canonical power-basis form."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != len(_cyclotomic(conductor)) - 1:
            raise UsageError(f"Q(zeta_{conductor}) needs {totient(conductor)} coefficients")
        self.conductor = conductor
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def _raw(cls, conductor: int, coeffs) -> "CycloElem":
        # trusted path: coeffs are already Fractions of the right length
        self = object.__new__(cls)
        self.conductor = conductor
        self.coeffs = tuple(coeffs)
        self._hash = None
        return self

    @classmethod
    def from_powers(cls, m: int, powers: dict[int, object]) -> "CycloElem":
        """Build sum(c * zeta_m^k) for an arbitrary (possibly negative) exponent map."""
        check_conductor(m)
        table = _power_table(m)
        out = [_ZERO] * (len(table[0]))
        for k, c in powers.items():
            c = Fraction(c)
            if not c:
                continue
            for t, v in enumerate(table[k % m]):
                if v:
                    out[t] += c * v
        return cls._raw(m, out)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise DomainError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self):
        return not self.is_zero()

    # -- conductor handling ----------------------------------------------
    def embed(self, n: int) -> "CycloElem":
        return embed(self, n)

    def _joined(self, other):
        other = as_elem(other)
        if self.conductor == other.conductor:
            return self, other
        if other.is_rational():
            return self, _rational_at(other.coeffs[0], self.conductor)
        if self.is_rational():
            return _rational_at(self.coeffs[0], other.conductor), other
        m = _lcm(self.conductor, other.conductor)
        return embed(self, m), embed(other, m)

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        if not _coercible(other):
            return NotImplemented
        a, b = self._joined(other)
        return CycloElem._raw(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElem._raw(self.conductor, [-x for x in self.coeffs])

    def __sub__(self, other):
        if not _coercible(other):
            return NotImplemented
        a, b = self._joined(other)
        return CycloElem._raw(a.conductor, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        if not _coercible(other):
            return NotImplemented
        return as_elem(other) - self

    def __mul__(self, other):
        if not _coercible(other):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycloElem._raw(self.conductor, [x * q for x in self.coeffs])
        a, b = self._joined(other)
        if b.is_rational():
            q = b.coeffs[0]
            return CycloElem._raw(a.conductor, [x * q for x in a.coeffs])
        if a.is_rational():
            q = a.coeffs[0]
            return CycloElem._raw(b.conductor, [x * q for x in b.coeffs])
        # integer convolution over a common denominator, then one reduction
        m = a.conductor
        da, na = _integral(a.coeffs)
        db, nb = _integral(b.coeffs)
        acc = [0] * m
        for i, x in enumerate(na):
            if x:
                for j, y in enumerate(nb):
                    if y:
                        acc[(i + j) % m] += x * y
        table = _power_table(m)
        out = [0] * len(na)
        for k, c in enumerate(acc):
            if c:
                for t, v in enumerate(table[k]):
                    if v:
                        out[t] += c * v
        den = da * db
        return CycloElem._raw(m, [Fraction(c, den) for c in out])

    __rmul__ = __mul__

    def inverse(self) -> "CycloElem":
        """Multiplicative inverse via extended Euclid against Phi_M."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycloElem(self.conductor, [1 / self.coeffs[0]] + [_ZERO] * (len(self.coeffs) - 1))
        m = self.conductor
        phi = [Fraction(c) for c in _cyclotomic(m)]
        u = _poly_inverse_mod(list(self.coeffs), phi)
        return CycloElem.from_powers(m, dict(enumerate(u)))

    def __truediv__(self, other):
        if not _coercible(other):
            return NotImplemented
        return self * as_elem(other).inverse()

    def __rtruediv__(self, other):
        if not _coercible(other):
            return NotImplemented
        return as_elem(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base, k = self.inverse(), -k
        result = _rational_at(Fraction(1), self.conductor)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def conj(self) -> "CycloElem":
        """Complex conjugate: zeta -> zeta^-1."""
        return CycloElem.from_powers(self.conductor, {-j: c for j, c in enumerate(self.coeffs) if c})

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if not _coercible(other):
            return NotImplemented
        a, b = self._joined(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # trace / degree is invariant under embedding, so equal elements hash equally
        if self._hash is None:
            m = self.conductor
            t = sum((c * _ramanujan(m, j) for j, c in enumerate(self.coeffs) if c), _ZERO)
            self._hash = hash(t / totient(m))
        return self._hash

    # -- display ---------------------------------------------------------
    def terms(self):
        """Yield (coefficient, power) pairs for the nonzero basis coordinates."""
        for j, c in enumerate(self.coeffs):
            if c:
                yield c, j

    def __str__(self):
        parts = []
        for c, j in self.terms():
            if j == 0:
                body = _frac_str(abs(c))
            else:
                z = f"zeta({self.conductor})" + (f"^{j}" if j != 1 else "")
                body = z if abs(c) == 1 else f"{_frac_str(abs(c))}*{z}"
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"CycloElem({self.conductor}, {str(self)!r})"

    def __complex__(self):
        m = self.conductor
        return sum(
            (float(c) * complex(math.cos(2 * math.pi * j / m), math.sin(2 * math.pi * j / m))
             for c, j in self.terms()),
            0j,
        )


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _coercible(x) -> bool:
    return isinstance(x, (CycloElem, int, Fraction)) or (
        isinstance(x, Rational) and not isinstance(x, bool)
    )


def _rational_at(q, m: int) -> CycloElem:
    coeffs = [_ZERO] * totient(m)
    coeffs[0] = Fraction(q)
    return CycloElem(m, coeffs)


def as_elem(x) -> CycloElem:
    if isinstance(x, CycloElem):
        return x
    if _coercible(x):
        return CycloElem(1, [Fraction(x)])
    raise TypeError(f"cannot interpret {x!r} as a cyclotomic number")


def rational(q) -> CycloElem:
    return CycloElem(1, [Fraction(q)])


def zeta(m: int, k: int = 1) -> CycloElem:
    """zeta_m^k with zeta_m = exp(2 pi i / m)."""
    if m < 1:
        raise UsageError(f"conductor must be positive, got {m}")
    return CycloElem.from_powers(m, {k: 1})


def embed(x: CycloElem, n: int) -> CycloElem:
    """Image of x under zeta_M -> zeta_N^(N/M); requires M | N."""
    x = as_elem(x)
    m = x.conductor
    if n % m:
        raise UsageError(f"cannot embed Q(zeta_{m}) into Q(zeta_{n}): {m} does not divide {n}")
    if n == m:
        return x
    s = n // m
    return CycloElem.from_powers(n, {j * s: c for c, j in x.terms()})


def root_order(x) -> int | None:
    """Least k >= 1 with x^k = 1, or None when x is not a root of unity."""
    x = as_elem(x)
    big = _lcm(2, x.conductor)
    if x ** big != 1:
        return None
    for d in _divisors(big):
        if x ** d == 1:
            return d
    return big  # unreachable: big itself is a divisor


def _integral(coeffs):
    """(d, ints) with coeffs[i] = ints[i] / d."""
    d = 1
    for c in coeffs:
        d = d * c.denominator // math.gcd(d, c.denominator)
    return d, [c.numerator * (d // c.denominator) for c in coeffs]


def nth_roots(c, e: int, conductor: int = 1) -> list[CycloElem]:
    """All a in Q(zeta_conductor) with a^e = c.

    Roots of the shape (rational) * (root of unity) * sqrt(d) are found
    directly.  Anything else goes through :func:`_embedding_roots`, which is
    skipped when the branch search would be too large.  Callers treat an empty
    result as "needs an extension".
    """
    if e < 1:
        raise UsageError("root index must be positive")
    c = as_elem(c)
    if c.is_zero():
        return [as_elem(0)]
    m = _lcm(conductor, c.conductor)
    order = _lcm(2, m)
    units = [zeta(order, j) for j in range(order)]
    found: list[CycloElem] = []
    for v in units:
        q = c / (v ** e)
        if not q.is_rational():
            continue
        r = _rational_root(q.coeffs[0], e)
        if r is not None:
            a = v * r
        elif e % 2 == 0:
            a = _surd_root(q.coeffs[0], e, m)
            if a is None:
                continue
            a = v * a
        else:
            continue
        if a not in found:
            found.append(a)
    if not found and e > 1 and not c.is_rational():
        found = _embedding_roots(c, e, m)
    return found


_BRANCH_CAP = 4096


def _embedding_roots(c: CycloElem, e: int, m: int) -> list[CycloElem]:
    """e-th roots of c in Q(zeta_m) rebuilt from all complex embeddings.

    Each pair of conjugate embeddings contributes e branch choices; every
    combination is mapped back to power-basis coordinates, rounded to nearby
    rationals and kept only if it passes the exact check a^e = c.
    """
    import numpy as np

    m = m if m % 4 != 2 else m // 2
    ks = [k for k in range(1, m) if math.gcd(k, m) == 1] or [1]
    reps = [k for k in ks if k < m - k] or [1]
    if e ** len(reps) > _BRANCH_CAP:
        return []
    c = embed(c, m) if m % c.conductor == 0 else c
    phi = len(ks)
    nodes = np.exp(2j * np.pi * np.array(ks) / m)
    vander = nodes[:, None] ** np.arange(phi)[None, :]
    inv = np.linalg.inv(vander)
    vals = vander @ np.array([float(x) for x in c.coeffs], dtype=complex)
    unit = np.exp(2j * np.pi * np.arange(e) / e)
    branches = []
    for k in reps:
        v = vals[ks.index(k)]
        branches.append(abs(v) ** (1.0 / e) * np.exp(1j * np.angle(v) / e) * unit)
    pos = {k: i for i, k in enumerate(ks)}
    found: list[CycloElem] = []
    for choice in itertools.product(range(e), repeat=len(reps)):
        at = np.empty(phi, dtype=complex)
        for k, j, br in zip(reps, choice, branches):
            at[pos[k]] = br[j]
            if m - k in pos:
                at[pos[m - k]] = np.conj(br[j])
        coords = inv @ at
        if np.max(np.abs(coords.imag)) > 1e-6 * (1 + np.max(np.abs(coords.real))):
            continue
        a = CycloElem(m, [Fraction(float(x)).limit_denominator(10 ** 6) for x in coords.real])
        if a ** e == c and a not in found:
            found.append(a)
    return found


def _squarefree_part(n: int) -> int:
    d, p = 1, 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
        if n % p == 0:
            d *= p
            n //= p
        p += 1
    return d * n


def _sqrt_squarefree(d: int, m: int) -> CycloElem | None:
    """sqrt(d) for squarefree d != 0 via quadratic Gauss sums, when it lies in Q(zeta_m).

    For odd p the Gauss sum squares to p* = (-1)^((p-1)/2) p; a leftover sign
    is fixed with i.
    """
    out = rational(1)
    sign = 1 if d > 0 else -1
    rest, p = abs(d), 2
    while rest > 1:
        if rest % p == 0:
            rest //= p
            if p == 2:
                if m % 8:
                    return None
                out = out * (zeta(8) + zeta(8, 7))
            else:
                if m % p:
                    return None
                out = out * CycloElem.from_powers(p, {a: (1 if pow(a, (p - 1) // 2, p) == 1 else -1) for a in range(1, p)})
                if p % 4 == 3:
                    sign = -sign
        p += 1
    if sign < 0:
        if m % 4:
            return None
        out = out * zeta(4)
    return out


def _surd_root(q: Fraction, e: int, m: int) -> CycloElem | None:
    """r * sqrt(d) with (r sqrt(d))^e = q for even e, rational r and squarefree d != 1."""
    rho = _rational_root(q, e // 2)
    if rho is None:
        return None
    d = _squarefree_part(abs(rho.numerator) * rho.denominator) * (1 if rho > 0 else -1)
    if d == 1:
        return None
    r = _rational_root(rho / d, 2)
    s = _sqrt_squarefree(d, m)
    if r is None or s is None:
        return None
    return s * r


def _rational_root(q: Fraction, e: int) -> Fraction | None:
    if q < 0:
        if e % 2 == 0:
            return None
        r = _rational_root(-q, e)
        return None if r is None else -r
    num, ok1 = gmpy2.iroot(gmpy2.mpz(q.numerator), e)
    den, ok2 = gmpy2.iroot(gmpy2.mpz(q.denominator), e)
    if ok1 and ok2:
        return Fraction(int(num), int(den))
    return None


# -- dense polynomial helpers over Q used only for inversion --------------

def _trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = _trim(list(a))
    b = _trim(list(b))
    if len(a) < len(b):
        return [], a
    q = [_ZERO] * (len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv_lead
        q[i] = c
        if c:
            for j, bc in enumerate(b):
                a[i + j] -= c * bc
    return q, _trim(a[: len(b) - 1])


def _poly_sub_mul(a, q, b):
    # a - q*b
    out = list(a) + [_ZERO] * max(0, len(q) + len(b) - 1 - len(a))
    for i, qc in enumerate(q):
        if qc:
            for j, bc in enumerate(b):
                out[i + j] -= qc * bc
    return _trim(out)


def _poly_inverse_mod(a, modulus):
    # extended Euclid: find u with u*a = 1 mod modulus (modulus irreducible over Q)
    r0, r1 = _trim(list(modulus)), _trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub_mul(s0, q, s1)
    if len(r0) != 1:
        raise ArithmeticError("element not invertible modulo the cyclotomic polynomial")
    inv = 1 / r0[0]
    return [c * inv for c in s0]
