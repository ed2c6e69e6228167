"""Shared helpers and independent oracles.

Oracles avoid the package's own arithmetic: numeric values come from
``cmath`` on the power-basis coordinates, and symbolic cross-checks use
sympy.
"""

from __future__ import annotations

import cmath
import random
from fractions import Fraction

from ritteq.cyclo import rational, zeta
from ritteq.laurent import LaurentPoly


def cnum(x) -> complex:
    """Numeric value of an exact coefficient, computed from its coordinates."""
    if isinstance(x, (int, Fraction)):
        return complex(x)
    m = x.conductor
    return sum(float(c) * cmath.exp(2j * cmath.pi * k / m) for k, c in enumerate(x.coeffs))


def leval(p: LaurentPoly, w: complex) -> complex:
    return sum(cnum(c) * w ** k for k, c in p.terms.items())


def close(a: complex, b: complex, tol: float = 1e-8) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


# coefficients used for randomized instances: rationals and a few small cyclotomic numbers
COEFF_SAMPLE = [
    rational(1),
    rational(-1),
    rational(2),
    rational(Fraction(1, 2)),
    rational(-3),
    zeta(4),
    zeta(3),
    zeta(8),
    zeta(4) + 1,
    zeta(6) * 3,
]


def random_poly(rng: random.Random, degree: int, sample=COEFF_SAMPLE, zero_rate: float = 0.25) -> LaurentPoly:
    terms = {}
    for k in range(degree + 1):
        if k == degree or rng.random() > zero_rate:
            terms[k] = rng.choice(sample)
    return LaurentPoly(terms)


def random_laurent(rng: random.Random, dplus: int, dminus: int, sample=COEFF_SAMPLE) -> LaurentPoly:
    terms = {k: rng.choice(sample) for k in range(-dminus, dplus + 1) if rng.random() > 0.3}
    terms[dplus] = rng.choice(sample)
    terms[-dminus] = rng.choice(sample)
    return LaurentPoly(terms)
