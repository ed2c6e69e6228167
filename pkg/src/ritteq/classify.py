"""Shape recognizers, strong-uniqueness decisions and double-decomposition classification.

Recognizers decide existence over the algebraic closure without extracting
roots.  Whenever a result is claimed, the equality behind it is recomputed
exactly and attached as a :class:`~ritteq.certs.Certificate`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cheb import TrigExpr, cheb_T, encode_trig, phase
from .certs import Certificate
from .cyclo import as_elem, nth_roots, root_order, zeta
from .decomp import (
    centered,
    common_left_factor,
    divisors,
    laurent_left_poly_factors,
    laurent_left_quotient,
    left_quotient,
    right_factor_poly,
    solve_right,
)
from .errors import DomainError, UsageError, VerificationError
from .laurent import AffineMap, LaurentPoly, Z, affine_apply, compose, support_stats

__all__ = [
    "centering",
    "CyclicCandidate",
    "ChebRelation",
    "ShapeReport",
    "cyclic_shape",
    "cheb_equiv",
    "cheb_shape",
    "SupVerdict",
    "is_strong_uniqueness",
    "decomposition_equivalence",
    "Match",
    "ClassificationReport",
    "classify_poly_pair",
    "classify_laurent_pair",
    "classify_monomial_pair",
]


def _poly(p: LaurentPoly, name: str, min_degree: int = 1):
    if not p.is_polynomial():
        raise UsageError(f"{name} must be a polynomial")
    if p.degree < min_degree:
        raise UsageError(f"{name} must have degree >= {min_degree}, got {p.degree}")


def _shift(b) -> LaurentPoly:
    """The polynomial z - b."""
    return LaurentPoly({1: 1, 0: -as_elem(b)})


def centering(P: LaurentPoly):
    """(b, P o (z - b)) where b = c_{N-1} / (N c_N) kills the z^(N-1) term."""
    _poly(P, "P", 2)
    return centered(P)


# -- cyclic shape -----------------------------------------------------------

@dataclass(frozen=True)
class CyclicCandidate:
    """Centered P equals z^r R(z^n)."""

    n: int
    r: int
    R: LaurentPoly
    certificate: Certificate


@dataclass(frozen=True)
class ChebRelation:
    """H o (z - shift) = u T_l(a z) + v with a^2 = q and u a^l = rho_l."""

    l: int
    q: object
    rho_l: object
    shift: object
    constant: object

    def scaling(self, conductor: int = 1):
        """The map a (any square root of q) when it lies in Q(zeta_conductor), else None."""
        roots = nth_roots(self.q, 2, conductor)
        return roots[0] if roots else None

    def maps(self, conductor: int = 1):
        """(alpha, beta) with H = beta o T_l o alpha, when sqrt(q) is in the field."""
        a = self.scaling(conductor)
        if a is None:
            return None
        u = as_elem(self.rho_l) / a ** self.l
        v = as_elem(self.constant) - u * cheb_T(self.l).coeff(0)
        return AffineMap(a, a * as_elem(self.shift)), AffineMap(u, v)


@dataclass(frozen=True)
class ChebHit:
    l: int
    inner: LaurentPoly
    relation: ChebRelation


@dataclass
class ShapeReport:
    kind: str  # "cyclic", "cheb" or "none"
    centering_shift: object
    centered: LaurentPoly
    g: int = 0
    cyclic: list[CyclicCandidate] = field(default_factory=list)
    cheb: list[ChebHit] = field(default_factory=list)


def cyclic_shape(P: LaurentPoly) -> ShapeReport:
    """Detect P = z^r R(z^n) o (z + b) for some n > 1."""
    _poly(P, "P", 2)
    b, Pc = centered(P)
    N = P.degree
    stats = support_stats(Pc)
    g = N if Pc.is_monomial() else stats.diff_gcd
    cands = []
    for n in divisors(g)[1:]:
        r = N % n
        R = LaurentPoly({(k - r) // n: c for k, c in Pc.terms.items()})
        eps = zeta(n)
        cert = Certificate(
            f"Pc(zeta_{n} z) = zeta_{n}^{r} Pc(z)",
            Pc.scale_arg(eps),
            Pc.scale(eps ** r),
        )
        if not cert.exact:  # pragma: no cover - guaranteed by the support test
            raise VerificationError(f"cyclic certificate failed for n={n}")
        cands.append(CyclicCandidate(n, r, R, cert))
    return ShapeReport("cyclic" if cands else "none", b, Pc, g, cands)


# -- Chebyshev shape --------------------------------------------------------

def cheb_equiv(H: LaurentPoly, l: int) -> ChebRelation | None:
    """Decide H = beta o T_l o alpha for affine alpha, beta over the algebraic closure."""
    _poly(H, "H", 1)
    if l < 2 or H.degree != l:
        raise UsageError(f"cheb_equiv needs deg H = l >= 2 (deg H = {H.degree}, l = {l})")
    b, Hc = centered(H)
    T = cheb_T(l)
    S = {k for k in T.terms if k >= 1}
    if {k for k in Hc.terms if k >= 1} != S:
        return None
    rho = {k: as_elem(Hc.coeff(k)) / T.coeff(k) for k in S}
    if l == 2:
        q = as_elem(1)
    else:
        q = rho[l] / rho[l - 2]
        for k in S:
            if rho[k] * q ** ((l - k) // 2) != rho[l]:
                return None
    return ChebRelation(l, _plain(q), _plain(rho[l]), _plain(b), _plain(Hc.coeff(0)))


def _plain(x):
    x = as_elem(x)
    return x.coeffs[0] if x.is_rational() else x


def cheb_shape(P: LaurentPoly) -> ShapeReport:
    """Every l > 1 for which P = F o T_l o alpha (scanned over all divisors of deg P)."""
    _poly(P, "P", 2)
    b, Pc = centered(P)
    hits = []
    for l in divisors(P.degree)[1:]:
        H = right_factor_poly(P, l)
        if H is None:
            continue
        rel = cheb_equiv(H, l)
        if rel is not None:
            hits.append(ChebHit(l, H, rel))
    return ShapeReport("cheb" if hits else "none", b, Pc, cheb=hits)


# -- strong uniqueness ------------------------------------------------------

@dataclass
class SupVerdict:
    is_sup: bool
    case: int | None = None
    c: object = None
    params: dict = field(default_factory=dict)
    f_desc: str = ""
    g_desc: str = ""
    certificates: list[Certificate] = field(default_factory=list)
    note: str = ""
    # the witness pair itself, when it lives in the working field (z, or w = e^{iz} for trig witnesses)
    f: LaurentPoly | None = None
    g: LaurentPoly | None = None
    variable: str = "z"

    @property
    def verified(self) -> bool:
        return all(c.exact for c in self.certificates)


def is_strong_uniqueness(P: LaurentPoly) -> SupVerdict:
    """Decide whether P o f = c P o g (f, g entire) forces c = 1 and f = g.

    When it does not, a witness pair is produced and checked exactly: a
    polynomial pair for the rotational shape, a trigonometric pair (encoded
    with w = e^{iz}) for the Chebyshev shape.
    """
    _poly(P, "P", 1)
    if P.degree == 1:
        # P = z o alpha and z = z^1 R(z^2): rotate by -1
        a, b = as_elem(P.lead), as_elem(P.coeff(0))
        f = LaurentPoly({1: 1 / a, 0: -b / a})
        g = LaurentPoly({1: -1 / a, 0: -b / a})
        cert = Certificate("P(f) = c P(g)", compose(P, f), compose(P, g).scale(-1))
        return SupVerdict(False, 1, Fraction(-1), {"n": 2, "r": 1}, str(f), str(g), [cert], f=f, g=g)
    cyc = cyclic_shape(P)
    if cyc.cyclic:
        cand = cyc.cyclic[0]
        n, r = cand.n, cand.r
        eps = zeta(n)
        c = _plain(eps ** (n - r))
        b = cyc.centering_shift
        f = _shift(b)
        g = LaurentPoly({1: eps, 0: -as_elem(b)})
        cert = Certificate("P(f) = c P(g)", compose(P, f), compose(P, g).scale(c))
        params = {"n": n, "r": r, "R": str(cand.R), "n_candidates": [x.n for x in cyc.cyclic]}
        return SupVerdict(False, 1, c, params, str(f), str(g), [cert, cand.certificate], f=f, g=g)
    ch = cheb_shape(P)
    if ch.cheb:
        hit = ch.cheb[0]
        return _cheb_witness(P, hit)
    return SupVerdict(True, note="neither a rotational nor a Chebyshev shape")


def _cheb_witness(P: LaurentPoly, hit: ChebHit) -> SupVerdict:
    l, rel = hit.l, hit.relation
    K = math.lcm(2 * l, P.conductor, as_elem(rel.q).conductor)
    x1 = encode_trig(TrigExpr.cos(1, phase(2, l)), K)
    x2 = encode_trig(TrigExpr.cos(1), K)
    b = as_elem(rel.shift)
    a = rel.scaling(K)
    f_desc = f"alpha^-1(cos(2*pi/{l} + z))"
    g_desc = "alpha^-1(cos(z))"
    f = g = None
    if a is not None:
        inv = 1 / a
        f = x1.scale(inv) - b
        g = x2.scale(inv) - b
        certs = [Certificate("P(f) = P(g) under w = e^{iz}", compose(P, f), compose(P, g), var="w")]
        note = f"alpha = {a}*(z + {b})"
        f_desc = f"{inv}*cos(2*pi/{l} + z) - ({b})"
        g_desc = f"{inv}*cos(z) - ({b})"
    else:
        # a = sqrt(q) is outside the field: split P(x/a - b) into even and odd parts in 1/a
        Pb = compose(P, _shift(b))
        qinv = 1 / as_elem(rel.q)
        even = LaurentPoly({j: c * qinv ** (j // 2) for j, c in Pb.terms.items() if j % 2 == 0})
        odd = LaurentPoly({j: c * qinv ** (j // 2) for j, c in Pb.terms.items() if j % 2 == 1})
        certs = [
            Certificate("even part of P(f) = P(g) under w = e^{iz}", compose(even, x1), compose(even, x2), var="w"),
            Certificate("odd part (times a) of P(f) = P(g)", compose(odd, x1), compose(odd, x2), var="w"),
        ]
        note = f"alpha = a*(z + {b}) with a^2 = {rel.q}; verified over Q(zeta_{K})(a)"
    return SupVerdict(False, 2, Fraction(1), {"l": l, "q": str(rel.q), "rho_l": str(rel.rho_l)},
                      f_desc, g_desc, certs, note, f, g, "w")


# -- equivalence of decompositions -----------------------------------------

def decomposition_equivalence(P, f, Q, g) -> AffineMap | None:
    """alpha = az+b with Q = P o alpha and g = alpha^-1 o f, when one exists in the field."""
    if f.is_constant() or g.is_constant():
        return None
    if f.deg_plus != g.deg_plus or max(f.deg_minus, 0) != max(g.deg_minus, 0):
        return None
    a = as_elem(f.lead) / g.lead
    rest = f - g.scale(a)
    if not rest.is_constant():
        return None
    alpha = AffineMap(a, rest.coeff(0))
    try:
        if affine_apply("pre", alpha, P) != Q:
            return None
    except DomainError:
        return None
    return alpha


# -- classification ---------------------------------------------------------

@dataclass
class Match:
    case: str
    params: dict
    orientation: str = "as given"
    exact_frame: bool = True
    certificates: list[Certificate] = field(default_factory=list)


@dataclass
class ClassificationReport:
    case_id: str
    matches: list[Match]
    reduction: dict
    parameters: dict
    certificates: list[Certificate]
    notes: list[str] = field(default_factory=list)

    @property
    def cases(self) -> list[str]:
        return [m.case for m in self.matches]

    @property
    def verified(self) -> bool:
        return all(c.exact for c in self.certificates)


def _check_identity(name, lhs, rhs) -> Certificate:
    cert = Certificate(name, lhs, rhs)
    if not cert.exact:
        k, a, b = cert.first_difference()
        raise VerificationError(f"{name} fails at exponent {k}: {a} != {b}", k, a, b)
    return cert


def _monomial_like(p: LaurentPoly) -> bool:
    """p = beta o z^n o alpha for affine alpha, beta (n = deg p >= 2)."""
    _, pc = centered(p)
    return set(pc.terms) <= {0, p.degree}


def _family1(X, x, Y, y):
    """X o x = Y o y with X ~ z^n and y ~ z^n; returns the normalized data or None."""
    n = X.degree
    if n < 2 or y.degree != n or not _monomial_like(X) or not _monomial_like(y):
        return None
    by, yc = centered(y)
    lam, t = yc.coeff(n), yc.coeff(0)
    x1 = compose(x, _shift(by))
    Y1 = compose(Y, LaurentPoly({1: lam, 0: t}))
    bX, Xc = centered(X)
    kappa, tau = as_elem(Xc.coeff(n)), Xc.coeff(0)
    x2 = x1 + bX
    Y2 = (Y1 - tau).scale(1 / kappa)
    cert = Certificate(f"z^{n} o x = Y o z^{n} (normalized core)", compose(LaurentPoly({n: 1}), x2), compose(Y2, LaurentPoly({n: 1})))
    if not cert.exact:
        return None
    r = x2.degree % n
    if any((k - r) % n or k < r for k in x2.terms):
        return None
    if math.gcd(n, r) != 1:
        return None
    R = LaurentPoly({(k - r) // n: c for k, c in x2.terms.items()})
    shape = Certificate("Y = z^r R^n", Y2, LaurentPoly({r: 1}) * R ** n)
    if not shape.exact:
        return None
    return {"n": n, "r": r, "R": R}, [cert, shape]


def _family2(Pt, ft, Qt, gt, conductor):
    n, m = Pt.degree, ft.degree
    if n < 2 or m < 2 or gt.degree != n or Qt.degree != m or math.gcd(n, m) != 1:
        return None
    rels = [cheb_equiv(Pt, n), cheb_equiv(ft, m), cheb_equiv(Qt, m), cheb_equiv(gt, n)]
    if any(r is None for r in rels):
        return None
    in_field = all(r.scaling(conductor) is not None for r in rels)
    return {"n": n, "m": m, "q": [str(r.q) for r in rels]}, in_field


def _common_right(f: LaurentPoly, g: LaurentPoly):
    """Largest normalized h with f = f~ o h and g = g~ o h."""
    for d in reversed(divisors(math.gcd(f.degree, g.degree))):
        hf = right_factor_poly(f, d)
        if hf is not None and hf == right_factor_poly(g, d):
            return hf
    return Z


def _match_poly_core(Pt, ft, Qt, gt, conductor, prefix=""):
    matches = []
    for orient, (X, x, Y, y) in (("as given", (Pt, ft, Qt, gt)), ("swapped", (Qt, gt, Pt, ft))):
        res = _family1(X, x, Y, y)
        if res is not None:
            params, certs = res
            shown = {"n": params["n"], "r": params["r"], "R": str(params["R"])}
            matches.append(Match(prefix + "1", shown, orient, True, certs))
            break
    fam2 = _family2(Pt, ft, Qt, gt, conductor)
    if fam2 is not None:
        params, in_field = fam2
        m = Match(prefix + "2", params, "as given", in_field)
        # an exact in-field Chebyshev frame is the more specific statement
        if in_field:
            matches.insert(0, m)
        else:
            matches.append(m)
    return matches


def classify_poly_pair(P, f, Q, g) -> ClassificationReport:
    """Reduce P o f = Q o g to its coprime core and match it against the two polynomial families."""
    for name, p in (("P", P), ("f", f), ("Q", Q), ("g", g)):
        _poly(p, name, 1)
    certs = [_check_identity("P o f = Q o g", compose(P, f), compose(Q, g))]
    return _classify_poly(P, f, Q, g, certs, prefix="A")


def _classify_poly(P, f, Q, g, certs, prefix):
    notes = []
    conductor = math.lcm(P.conductor, f.conductor, Q.conductor, g.conductor)
    clf = common_left_factor(P, Q)
    E, Pt = clf.E, clf.P_tilde
    for d, rel in clf.skipped:
        notes.append(f"a common left factor of degree {d} needs an extension ({rel})")
    h = _common_right(f, g)
    ft, gt = left_quotient(f, h), left_quotient(g, h)
    Qt = left_quotient(compose(Pt, ft), gt)
    if Qt is None or compose(E, Qt) != Q:
        Qt = clf.Q_tilde
        notes.append("core could not be aligned with the common left factor")
    certs += [
        Certificate("P = E o P~", compose(E, Pt), P),
        Certificate("Q = E o Q~", compose(E, Qt), Q),
        Certificate("f = f~ o h", compose(ft, h), f),
        Certificate("g = g~ o h", compose(gt, h), g),
        Certificate("P~ o f~ = Q~ o g~", compose(Pt, ft), compose(Qt, gt)),
    ]
    reduction = {"E": E, "P~": Pt, "Q~": Qt, "h": h, "f~": ft, "g~": gt}
    if min(Pt.degree, Qt.degree, ft.degree, gt.degree) == 1:
        match = Match("trivial", {"degrees": [Pt.degree, ft.degree, Qt.degree, gt.degree]})
        return ClassificationReport("trivial", [match], reduction, match.params, certs, notes)
    matches = _match_poly_core(Pt, ft, Qt, gt, conductor, prefix)
    if not matches:
        return ClassificationReport("unmatched", [], reduction, {}, certs, notes)
    for m in matches:
        certs += m.certificates
    params = dict(matches[0].params)
    return ClassificationReport(matches[0].case, matches, reduction, params, certs, notes)


# -- Laurent pairs -----------------------------------------------------------

def _sextic_like(p: LaurentPoly) -> bool:
    """p = beta o (z^2 - 1)^3 o alpha."""
    if p.degree != 6:
        return False
    _, pc = centered(p)
    if any(pc.coeff(k) for k in (1, 3, 5)):
        return False
    h6, h4, h2 = as_elem(pc.coeff(6)), pc.coeff(4), pc.coeff(2)
    return bool(h4) and h4 * h4 == 3 * h6 * h2


def _quartic_like(p: LaurentPoly) -> bool:
    """p = beta o (3z^4 - 4z^3) o alpha: the derivative has one double and one simple root."""
    if p.degree != 4:
        return False
    d1 = LaurentPoly({k - 1: c * k for k, c in p.terms.items() if k})
    d2 = LaurentPoly({k - 1: c * k for k, c in d1.terms.items() if k})
    g = _poly_gcd(d1, d2)
    return g.degree == 1 and _poly_gcd(d2, LaurentPoly({k - 1: c * k for k, c in d2.terms.items() if k})).degree == 0


def _poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    from .laurent import poly_divmod

    while b:
        a, b = b, poly_divmod(a, b)[1]
    return a


def _case3(X, Y, y, s):
    """Y - e = (y-line through the two critical values) * S~^2, tested without roots.

    With y = p w + q/w + c the affine change taking y to V1 sends +-1 to
    c +- sqrt(4pq), so (1 - z^2) becomes a multiple of D = (z - c)^2 - 4pq.
    """
    from .laurent import poly_divmod

    _, Xc = centered(X)
    e = Xc.coeff(0)
    p, q, c = as_elem(y.coeff(1)), y.coeff(-1), y.coeff(0)
    D = LaurentPoly({2: 1, 1: -2 * as_elem(c), 0: as_elem(c) * c - 4 * p * q})
    G, rem = poly_divmod(Y - e, D)
    if rem or G.degree != 2 * s:
        return None
    shape = LaurentPoly.const(1)
    if s:
        root = solve_right(Z ** 2, G.scale(1 / as_elem(G.lead)))
        if not root.found:
            return None
        shape = root.value
    cert = Certificate("Y - e = ((z - c)^2 - 4pq) * G", Y - e, D * G)
    return {"deg_S": s, "S_shape": str(shape)}, [cert]


def _pure(L: LaurentPoly, n: int) -> bool:
    return set(L.terms) <= {-n, 0, n}


def _case4_epsilon(L1: LaurentPoly, L2: LaurentPoly, n: int, m: int, l: int):
    """Recover eps^m (hence k) when the frame rotation lies in the working field."""
    conductor = math.lcm(L1.conductor, L2.conductor)
    kappas = nth_roots(as_elem(L2.coeff(-n)) / L2.coeff(n), 2 * n, conductor)
    if not kappas:
        return None
    kap = kappas[0]
    L1r = L1.scale_arg(kap)
    rho = as_elem(L1r.coeff(m)) / L1r.coeff(-m)
    order = root_order(rho)
    if order is None:
        return {"eps_2m": str(rho), "eps_ok": False}
    big = math.lcm(2 * order, 2 * n * l, conductor)
    ks = []
    for s in nth_roots(rho, 2, big):
        if s ** (n * l) == -1:
            for j in range(2 * n * l):
                if zeta(2 * n * l, j) == s:
                    ks.append((j - 1) // 2)
    ks = sorted(set(ks))
    out = {"eps_2m": str(rho), "eps_ok": bool(ks), "k_candidates": ks}
    if ks:
        out["k"] = ks[0]
    return out


def _match_laurent_core(At, L1, Bt, L2):
    out = []
    for orient, (X, x, Y, y) in (("as given", (At, L1, Bt, L2)), ("swapped", (Bt, L2, At, L1))):
        # case 3: z^2 o U1 S(V1) vs (1 - z^2) S^2 o V1
        if X.degree == 2 and (y.deg_plus, y.deg_minus) == (1, 1) and Y.degree % 2 == 0 and Y.degree >= 2:
            s = Y.degree // 2 - 1
            if (x.deg_plus, x.deg_minus) == (s + 1, s + 1):
                hit = _case3(X, Y, y, s)
                if hit is not None:
                    out.append(Match("L3", hit[0], orient, True, hit[1]))
        # case 5: the sporadic pair
        if X.degree == 6 and Y.degree == 4 and (x.deg_plus, x.deg_minus) == (2, 2) \
                and (y.deg_plus, y.deg_minus) == (3, 3) and _sextic_like(X) and _quartic_like(Y):
            out.append(Match("L5", {}, orient, True))
    # case 4: -T_nl o U_m(eps z) vs T_ml o U_n
    a, b = At.degree, Bt.degree
    l = math.gcd(a, b)
    if l > 1:
        n, m = a // l, b // l
        if math.gcd(n, m) == 1 and (L1.deg_plus, L1.deg_minus) == (m, m) and (L2.deg_plus, L2.deg_minus) == (n, n) \
                and _pure(L1, m) and _pure(L2, n) and cheb_equiv(At, a) and cheb_equiv(Bt, b):
            eps = _case4_epsilon(L1, L2, n, m, l)
            params = {"n": n, "m": m, "l": l}
            if eps is not None:
                params.update(eps)
            out.append(Match("L4", params, "as given", eps is not None))
    # deg S = 0 in case 3 is case 4 with l = 2, m = n = 1
    def rank(mt):
        if mt.case == "L5":
            return 0
        if mt.case == "L3":
            return 1 if mt.params["deg_S"] >= 1 else 3
        return 2
    seen, uniq = set(), []
    for mt in out:
        if mt.case not in seen:
            seen.add(mt.case)
            uniq.append(mt)
    uniq.sort(key=rank)
    return uniq


def classify_laurent_pair(A, L1, B, L2) -> ClassificationReport:
    """Classify A o L1 = B o L2 (A, B polynomials, L1, L2 Laurent polynomials)."""
    _poly(A, "A", 1)
    _poly(B, "B", 1)
    certs = [_check_identity("A o L1 = B o L2", compose(A, L1), compose(B, L2))]
    notes = []
    clf = common_left_factor(A, B)
    E, At = clf.E, clf.P_tilde
    Bt = laurent_left_quotient(compose(At, L1), L2)
    if Bt is None or compose(E, Bt) != B:
        Bt = clf.Q_tilde
        notes.append("core could not be aligned with the common left factor")
    certs += [
        Certificate("A = E o A~", compose(E, At), A),
        Certificate("B = E o B~", compose(E, Bt), B),
    ]
    W = Z
    d = math.gcd(support_stats(L1).support_gcd, support_stats(L2).support_gcd)
    if d >= 2:
        W = LaurentPoly({d: 1})
        L1 = LaurentPoly({k // d: c for k, c in L1.terms.items()})
        L2 = LaurentPoly({k // d: c for k, c in L2.terms.items()})
    if max(L1.deg_plus, L2.deg_plus) <= 0:
        # both inners are polynomials in 1/z
        flip = LaurentPoly({-1: 1})
        L1, L2, W = compose(L1, flip), compose(L2, flip), compose(flip, W)
    reduction = {"E": E, "A~": At, "B~": Bt, "W": W}
    if not L1.is_polynomial():
        common = _common_laurent_inner(L1, L2)
        if common is not None:
            A1, A2, W2 = common
            reduction["W"] = compose(W2, W) if W != Z else W2
            certs += [Certificate("L1 = L1~ o W", compose(A1, W2), L1), Certificate("L2 = L2~ o W", compose(A2, W2), L2)]
            L1, L2 = A1, A2
    reduction["L1~"], reduction["L2~"] = L1, L2
    certs.append(Certificate("A~ o L1~ = B~ o L2~", compose(At, L1), compose(Bt, L2)))
    if L1.is_polynomial():
        if min(At.degree, Bt.degree) == 1 or L1.is_constant():
            match = Match("trivial", {"degrees": [At.degree, Bt.degree]})
            return ClassificationReport("trivial", [match], reduction, match.params, certs, notes)
        sub = _classify_poly(At, L1, Bt, L2, [], prefix="L")
        notes += sub.notes
        sub.reduction.update({k: v for k, v in reduction.items() if k not in sub.reduction})
        return ClassificationReport(sub.case_id, sub.matches, sub.reduction, sub.parameters, certs + sub.certificates, notes)
    if min(At.degree, Bt.degree) == 1:
        match = Match("trivial", {"degrees": [At.degree, Bt.degree]})
        return ClassificationReport("trivial", [match], reduction, match.params, certs, notes)
    matches = _match_laurent_core(At, L1, Bt, L2)
    if not matches:
        return ClassificationReport("unmatched", [], reduction, {}, certs, notes)
    return ClassificationReport(matches[0].case, matches, reduction, dict(matches[0].params), certs, notes)


def _common_laurent_inner(L1: LaurentPoly, L2: LaurentPoly):
    """Polynomials A1, A2 and a Laurent W (deg W > 1 on some side) with Li = Ai o W."""
    p1, q1, p2, q2 = L1.deg_plus, L1.deg_minus, L2.deg_plus, L2.deg_minus
    for a1 in reversed(divisors(math.gcd(p1, q1))[1:]):
        wp, wq = p1 // a1, q1 // a1
        if p2 % wp or q2 % wq or p2 // wp != q2 // wq:
            continue
        a2 = p2 // wp
        for A1, W in laurent_left_poly_factors(L1, a1):
            A2 = laurent_left_quotient(L2, W)
            if A2 is not None and A2.degree == a2:
                return A1, A2, W
    return None


def classify_monomial_pair(A: LaurentPoly, L1: LaurentPoly, L2: LaurentPoly, d: int) -> ClassificationReport:
    """Classify A o L1 = L2 o z^d (A polynomial; L1, L2 genuine Laurent polynomials)."""
    _poly(A, "A", 1)
    zd = LaurentPoly({d: 1})
    certs = [_check_identity("A o L1 = L2 o z^d", compose(A, L1), compose(L2, zd))]
    matches = []
    n = A.degree
    if n >= 2 and d == n and _monomial_like(A):
        bA, Ac = centered(A)
        kappa, tau = as_elem(Ac.coeff(n)), Ac.coeff(0)
        x = L1 + bA
        Y = (L2 - tau).scale(1 / kappa)
        r = x.deg_plus % n
        if all((k - r) % n == 0 for k in x.terms) and math.gcd(n, r) == 1:
            Lr = LaurentPoly({(k - r) // n: c for k, c in x.terms.items()})
            cert = Certificate("L2 = z^r L^n (normalized)", Y, LaurentPoly({r: 1}) * Lr ** n)
            if cert.exact:
                certs.append(cert)
                matches.append(Match("hy", {"n": n, "r": r, "L": str(Lr)}))
    m = L1.deg_plus
    if n >= 2 and d == n and math.gcd(n, m) == 1 and cheb_equiv(A, n):
        if (L1.deg_plus, L1.deg_minus) == (m, m) and _pure(L1, m) and (L2.deg_plus, L2.deg_minus) == (m, m):
            matches.append(Match("yh", {"n": n, "m": m}))
    reduction = {"A": A, "L1": L1, "L2": L2, "d": d}
    if not matches:
        return ClassificationReport("unmatched", [], reduction, {}, certs)
    return ClassificationReport(matches[0].case, matches, reduction, dict(matches[0].params), certs)
