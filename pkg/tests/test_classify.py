import cmath
import math
import random
from fractions import Fraction

import pytest
import sympy

from generators import L_SAMPLE, R_SAMPLE, case3, case4, family1, family2, random_affine, twist
from helpers import COEFF_SAMPLE, close, leval, random_poly
from ritteq.cheb import U, V, cheb_T
from ritteq.classify import (
    centering,
    cheb_equiv,
    cheb_shape,
    classify_laurent_pair,
    classify_monomial_pair,
    classify_poly_pair,
    cyclic_shape,
    decomposition_equivalence,
    is_strong_uniqueness,
)
from ritteq.cyclo import as_elem, zeta
from ritteq.errors import UsageError, VerificationError
from ritteq.expr import parse_poly
from ritteq.identities import sporadic_pair
from ritteq.laurent import AffineMap, LaurentPoly, Z, compose

z = Z
X = sympy.Symbol("x")


def proportional(a: LaurentPoly, b: LaurentPoly) -> bool:
    if set(a.terms) != set(b.terms):
        return False
    k = min(a.terms)
    return a.scale(as_elem(b.coeff(k)) / a.coeff(k)) == b


# -- centering and shapes -----------------------------------------------------

def test_centering_examples():
    assert centering(z ** 3 + z ** 2 + z) == (Fraction(1, 3), z ** 3 + Fraction(2, 3) * z - Fraction(7, 27))
    assert centering(cheb_T(5)) == (0, cheb_T(5))
    b, Pc = centering((z + 1) ** 4)
    assert b == 1 and Pc == z ** 4
    with pytest.raises(UsageError):
        centering(z + 1)


def test_cyclic_shape_examples():
    rep = cyclic_shape(z ** 6 + 2 * z ** 4 + z ** 2)
    assert rep.g == 2 and [c.n for c in rep.cyclic] == [2]
    assert (rep.cyclic[0].r, rep.cyclic[0].R) == (0, z ** 3 + 2 * z ** 2 + z)
    rep = cyclic_shape(cheb_T(3))
    assert (rep.cyclic[0].n, rep.cyclic[0].r, rep.cyclic[0].R) == (2, 1, 4 * z - 3)
    assert cyclic_shape(z ** 3 + z ** 2 + 1).kind == "none"
    assert [c.n for c in cyclic_shape(z ** 6 + 1).cyclic] == [2, 3, 6]


def test_cyclic_certificates_hold(rng):
    for _ in range(30):
        n, r = rng.randint(2, 5), rng.randint(0, 4)
        R = random_poly(rng, rng.randint(1, 3))
        P = compose(z ** r * compose(R, z ** n), random_affine(rng)(z))
        if P.degree < 2:
            continue
        rep = cyclic_shape(P)
        if not rep.centered.is_monomial():
            assert rep.g % n == 0
        for c in rep.cyclic:
            assert c.certificate.exact
            assert rep.centered.scale_arg(zeta(c.n)) == rep.centered.scale(zeta(c.n) ** c.r)


def test_cheb_equiv_examples():
    rel = cheb_equiv(8 * z ** 3 - 6 * z + 5, 3)
    assert (rel.q, rel.rho_l) == (1, 2)
    assert cheb_equiv(z ** 3, 3) is None
    with pytest.raises(UsageError):
        cheb_equiv(z ** 3, 2)


def test_cheb_equiv_cubic_value_against_sympy():
    # independent oracle: center with sympy, then q = rho_3 / rho_1
    h = X ** 3 + X ** 2 + 1
    hc = sympy.Poly(sympy.expand(h.subs(X, X - sympy.Rational(1, 3))), X)
    t = sympy.Poly(sympy.chebyshevt(3, X), X)
    rho3 = hc.coeff_monomial(X ** 3) / t.coeff_monomial(X ** 3)
    rho1 = hc.coeff_monomial(X) / t.coeff_monomial(X)
    q = rho3 / rho1
    assert q == sympy.Rational(9, 4)
    rel = cheb_equiv(z ** 3 + z ** 2 + 1, 3)
    assert rel.q == Fraction(int(q.p), int(q.q))


def test_cheb_equiv_recovers_maps():
    H = compose(compose(AffineMap(3, -1)(z), cheb_T(4)), AffineMap(2, 1)(z))
    rel = cheb_equiv(H, 4)
    alpha, beta = rel.maps()
    assert compose(compose(beta(z), cheb_T(4)), alpha(z)) == H


def test_cheb_equiv_sound_on_constructed_instances():
    rng = random.Random(7)
    for _ in range(520):
        l = rng.randint(2, 8)
        alpha, beta = random_affine(rng), random_affine(rng)
        H = compose(beta(z), compose(cheb_T(l), alpha(z)))
        rel = cheb_equiv(H, l)
        assert rel is not None, (l, alpha, beta)
        a = as_elem(alpha.a)
        assert l == 2 or as_elem(rel.q) == a * a


def test_cheb_equiv_rejects_wrong_support():
    rng = random.Random(8)
    done = 0
    while done < 520:
        l = rng.randint(3, 8)
        T = cheb_T(l)
        S = {k for k in T.terms if k >= 1}
        terms = {l: rng.choice(COEFF_SAMPLE)}
        for k in range(1, l - 1):
            if rng.random() < 0.5:
                terms[k] = rng.choice(COEFF_SAMPLE)
        terms[0] = rng.choice(COEFF_SAMPLE)
        H = LaurentPoly(terms)
        if {k for k in H.terms if k >= 1} == S:
            continue
        assert cheb_equiv(H, l) is None
        done += 1


def test_cheb_shape_examples(rng):
    assert [h.l for h in cheb_shape(cheb_T(6)).cheb] == [2, 3, 6]
    assert cheb_shape(z ** 5 + z ** 4 + 1).kind == "none"
    for _ in range(5):
        F = random_poly(rng, 2)
        P = compose(F, compose(cheb_T(4), 2 * z + 1))
        assert {2, 4} <= {h.l for h in cheb_shape(P).cheb}


# -- strong uniqueness -------------------------------------------------------

def _check_witness_numerically(P, v):
    """Re-check a rotational witness from its printed form, independent of the certificates."""
    f = parse_poly(v.f_desc)
    g = parse_poly(v.g_desc)
    c = complex(float(v.c)) if isinstance(v.c, (int, Fraction)) else leval(LaurentPoly.const(v.c), 1)
    for w in (0.3 + 0.2j, -1.1 + 0.7j, 2.0):
        assert close(leval(P, leval(f, w)), c * leval(P, leval(g, w)), 1e-7)


def test_sup_examples():
    v = is_strong_uniqueness(z ** 3 + z)
    assert (v.is_sup, v.case, v.c, v.params["n"], v.params["r"]) == (False, 1, -1, 2, 1)
    assert v.verified
    _check_witness_numerically(z ** 3 + z, v)
    v = is_strong_uniqueness(z ** 3 + z ** 2 + 1)
    assert (v.is_sup, v.case, v.c) == (False, 2, 1) and v.verified
    assert is_strong_uniqueness(z ** 5 + z ** 4 + 1).is_sup
    v = is_strong_uniqueness(2 * z + 1)
    assert not v.is_sup and v.verified


def test_trig_witness_matches_cosines():
    # P(f) = P(g) with f, g built from cos(2 pi / l + t) and cos(t)
    P = cheb_T(3) + 2 * cheb_T(3) ** 2
    v = is_strong_uniqueness(P)
    assert v.case in (1, 2) and v.verified
    P = compose(z ** 2 + z, cheb_T(3))
    v = is_strong_uniqueness(compose(P, z + 1))
    assert not v.is_sup and v.verified
    cert = v.certificates[0]
    for t in (0.2, 1.3):
        w = cmath.exp(1j * t)
        assert close(leval(cert.lhs, w), leval(cert.rhs, w))


def test_witness_pairs_are_exposed():
    for P in (z ** 3 + z, z ** 3 + z ** 2 + 1, compose(cheb_T(4), z - 1)):
        v = is_strong_uniqueness(P)
        assert v.f is not None and v.g is not None and v.f != v.g
        assert compose(P, v.f) == compose(P, v.g).scale(as_elem(v.c))
    P = z ** 3 + z ** 2 + 1
    v = is_strong_uniqueness(P)
    assert v.variable == "w"
    for t in (0.3, 2.2):
        w = cmath.exp(1j * t)
        assert close(leval(P, leval(v.f, w)), leval(P, leval(v.g, w)))


def test_every_cubic_is_not_sup(rng):
    for _ in range(60):
        P = random_poly(rng, 3)
        v = is_strong_uniqueness(P)
        assert not v.is_sup and v.verified, P


def test_witnesses_reverify(rng):
    for _ in range(40):
        P = random_poly(rng, rng.randint(2, 5))
        v = is_strong_uniqueness(P)
        assert v.verified
        if not v.is_sup and v.case == 1:
            _check_witness_numerically(P, v)


# -- decomposition equivalence -----------------------------------------------

def test_decomposition_equivalence_examples():
    assert decomposition_equivalence(z ** 2, z + 1, (z + 1) ** 2, z) == AffineMap(1, 1)
    assert decomposition_equivalence(cheb_T(2), cheb_T(3), 2 * z ** 2 - 1, cheb_T(3)).is_identity()
    assert decomposition_equivalence(z ** 2, z, z ** 3, z) is None


# -- polynomial pairs --------------------------------------------------------

def test_classify_poly_examples():
    rep = classify_poly_pair(z ** 2, z ** 3, z ** 3, z ** 2)
    assert rep.case_id == "A1" and rep.verified
    rep = classify_poly_pair(cheb_T(2), cheb_T(3), cheb_T(3), cheb_T(2))
    assert "A2" in rep.cases and rep.parameters == {"n": 2, "m": 3, "q": ["1", "1", "1", "1"]}
    P, f, Q, g = family1(2, 1, z + 1)
    rep = classify_poly_pair(P, f, Q, g)
    assert rep.case_id == "A1" and rep.parameters == {"n": 2, "r": 1, "R": "z + 1"}
    with pytest.raises(VerificationError):
        classify_poly_pair(z ** 2, z + 1, z ** 2, z)


def test_classify_poly_trivial():
    rep = classify_poly_pair(z ** 2 + 1, z + 3, z ** 2 + 1, z + 3)
    assert rep.case_id == "trivial"


def family1_recovered(rep, n, r, R) -> bool:
    want = z ** (r // n) * R
    for m in rep.matches:
        if m.case.endswith("1") and m.params["n"] == n and m.params["r"] == r % n:
            return proportional(parse_poly(m.params["R"]), want)
    return False


def test_classify_poly_family1_twisted():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(2, 5)
        r = rng.choice([x for x in range(1, 7) if math.gcd(x, n) == 1])
        R = rng.choice(R_SAMPLE)
        rep = classify_poly_pair(*twist(rng, *family1(n, r, R), outer_degree=rng.choice([0, 2])))
        assert rep.verified
        if r == 1 and R.degree == 0:
            # z^n o z = z o z^n has a linear side
            assert rep.case_id == "trivial"
            continue
        assert family1_recovered(rep, n, r, R), (n, r, R, rep.matches)


def test_classify_poly_family2_twisted():
    rng = random.Random(12)
    for _ in range(25):
        n = rng.randint(2, 6)
        m = rng.choice([x for x in range(2, 7) if math.gcd(x, n) == 1])
        rep = classify_poly_pair(*twist(rng, *family2(n, m), outer_degree=rng.choice([0, 2])))
        assert rep.verified
        assert any(x.case == "A2" and (x.params["n"], x.params["m"]) == (n, m) for x in rep.matches)


# -- Laurent pairs -----------------------------------------------------------

def test_classify_laurent_case3_example():
    rep = classify_laurent_pair(*case3(z))
    assert rep.case_id == "L3" and rep.parameters["deg_S"] == 1 and rep.verified


@pytest.mark.parametrize("S", [z ** 2 + 1, 2 * z - 1, z ** 3 - zeta(4) * z])
def test_classify_laurent_case3(S):
    rep = classify_laurent_pair(*case3(S))
    assert rep.case_id == "L3" and rep.parameters["deg_S"] == S.degree


def test_classify_laurent_case4_example():
    A, L1, B, L2 = -cheb_T(2), -V(1), cheb_T(2), U(1)
    rep = classify_laurent_pair(A, L1, B, L2)
    assert rep.case_id == "L4"
    assert {k: rep.parameters[k] for k in ("n", "m", "l", "k")} == {"n": 1, "m": 1, "l": 2, "k": 0}


@pytest.mark.parametrize("n,m,l", [(1, 1, 2), (2, 1, 2), (1, 3, 2), (2, 3, 2), (1, 1, 4), (3, 1, 4)])
def test_classify_laurent_case4(n, m, l):
    for k in range(n * l):
        rep = classify_laurent_pair(*case4(n, m, l, k))
        (match,) = [x for x in rep.matches if x.case == "L4"]
        assert (match.params["n"], match.params["m"], match.params["l"]) == (n, m, l)
        assert k in match.params["k_candidates"]


def test_case4_with_odd_l_reduces_to_trivial():
    # -T_l = T_l o (-z) for odd l, so a common left factor absorbs the pair
    rep = classify_laurent_pair(*case4(2, 1, 3, 0))
    assert rep.case_id == "trivial" and rep.reduction["E"].degree == 3


def test_classify_laurent_sporadic():
    rep = classify_laurent_pair(*sporadic_pair())
    assert rep.case_id == "L5" and rep.verified


def test_classify_laurent_twisted_outer():
    rng = random.Random(13)
    for A, L1, B, L2, want in [(*case3(z + 2), "L3"), (*case4(1, 2, 2, 1), "L4"), (*sporadic_pair(), "L5")]:
        mu, lam = random_affine(rng), random_affine(rng)
        A2, L12 = compose(A, mu(z)), compose(mu.inverse()(z), L1)
        B2, L22 = compose(B, lam(z)), compose(lam.inverse()(z), L2)
        assert want in classify_laurent_pair(A2, L12, B2, L22).cases


@pytest.mark.parametrize("W", [z + z ** -1, z ** -2, 2 * z - z ** -1])
def test_classify_laurent_polynomial_cores(W):
    rep = classify_laurent_pair(*[compose(p, W) if i % 2 else p for i, p in enumerate(family1(3, 2, z - 2))])
    assert rep.case_id == "L1" and rep.parameters["n"] == 3
    rep = classify_laurent_pair(*[compose(p, W) if i % 2 else p for i, p in enumerate(family2(3, 2))])
    assert "L2" in rep.cases


def test_classify_laurent_rejects_false_identity():
    with pytest.raises(VerificationError):
        classify_laurent_pair(z ** 2, U(1), z ** 2, V(1))


def test_classify_monomial_pair():
    L = L_SAMPLE[1]
    lhs_inner = z * compose(L, z ** 2)
    rep = classify_monomial_pair(z ** 2, lhs_inner, z * L ** 2, 2)
    assert rep.case_id == "hy" and rep.parameters["n"] == 2 and rep.parameters["r"] == 1
    # T_2 is also z^2 up to affine maps, so both families fit
    rep = classify_monomial_pair(cheb_T(2), U(3), U(3), 2)
    assert rep.cases == ["hy", "yh"]
    rep = classify_monomial_pair(cheb_T(3), U(2), U(2), 3)
    assert rep.case_id == "yh" and rep.parameters == {"n": 3, "m": 2}
