"""Exact algebra for functional equations P o f = Q o g.

Cyclotomic coefficient fields, Laurent polynomials, Chebyshev and trig
encodings, polynomial decomposition, shape recognizers for strong
uniqueness, and generators for the known families of double
decompositions.
"""

from .certs import Certificate
from .cheb import U, V, TrigExpr, cheb_T, encode_trig, phase
from .classify import (
    centering,
    cheb_equiv,
    cheb_shape,
    classify_laurent_pair,
    classify_poly_pair,
    cyclic_shape,
    decomposition_equivalence,
    is_strong_uniqueness,
)
from .cyclo import CycloElem, cyclotomic_poly, nth_roots, rational, root_order, zeta
from .decomp import (
    common_left_factor,
    complete_decomposition,
    laurent_left_poly_factor,
    laurent_left_poly_factors,
    laurent_monomial_right_factor,
    left_quotient,
    right_factor_poly,
    solve_right,
)
from .errors import DomainError, LimitError, ParseError, RittError, UsageError, VerificationError
from .identities import FamilyParams, curve_check, generate, lemma_zc_recover, verify
from .laurent import AffineMap, LaurentPoly, Z, compose
from .limits import limits

__all__ = [
    "Certificate",
    "U",
    "V",
    "TrigExpr",
    "cheb_T",
    "encode_trig",
    "phase",
    "centering",
    "cheb_equiv",
    "cheb_shape",
    "classify_laurent_pair",
    "classify_poly_pair",
    "cyclic_shape",
    "decomposition_equivalence",
    "is_strong_uniqueness",
    "CycloElem",
    "cyclotomic_poly",
    "nth_roots",
    "rational",
    "root_order",
    "zeta",
    "common_left_factor",
    "complete_decomposition",
    "laurent_left_poly_factor",
    "laurent_monomial_right_factor",
    "left_quotient",
    "right_factor_poly",
    "solve_right",
    "DomainError",
    "LimitError",
    "ParseError",
    "RittError",
    "UsageError",
    "VerificationError",
    "FamilyParams",
    "curve_check",
    "generate",
    "lemma_zc_recover",
    "verify",
    "AffineMap",
    "LaurentPoly",
    "Z",
    "compose",
    "limits",
    "laurent_left_poly_factors",
]

__version__ = "0.1.0"
