"""Command line interface: ``ritteq COMMAND ...``.

Exit codes: 0 success, 1 mathematically negative result, 2 parse or usage
error, 3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys

from .certs import Certificate
from .classify import classify_laurent_pair, classify_poly_pair, is_strong_uniqueness
from .decomp import (
    all_complete_decompositions,
    complete_decomposition,
    left_quotient,
    right_factor_poly,
)
from .errors import DomainError, LimitError, ParseError, RittError, UsageError, VerificationError
from .expr import parse, parse_poly, unparse
from .identities import FamilyParams, generate, lemma_zc_recover, sporadic_pair, verify
from .laurent import LaurentPoly, compose
from .limits import limits

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3
CLI_DEGREE_LIMIT = 64
CLI_CONDUCTOR_LIMIT = 256


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _text(x) -> str | None:
    return None if x is None else str(x)


def _plain(obj):
    """JSON-ready copy: exact values become their canonical strings."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    return str(obj)


class Outcome:
    def __init__(self, inputs=None):
        self.inputs = inputs or {}
        self.payload: dict = {}
        self.certificates: list[Certificate] = []
        self.negative = False
        self.lines: list[str] = []

    def say(self, line: str):
        self.lines.append(line)


def _expr_arg(src: str, name: str, polynomial: bool = False):
    tree = parse(src)
    return unparse(tree), parse_poly(src, polynomial=polynomial, name=name)


def _inputs(args, spec):
    """Parse each named argument; returns (echo dict, values)."""
    echo, values = {}, []
    for name, poly in spec:
        text, value = _expr_arg(getattr(args, name), name, poly)
        echo[name] = text
        values.append(value)
    return echo, values


# -- commands ----------------------------------------------------------------

def cmd_eval(args) -> Outcome:
    echo, (v,) = _inputs(args, [("expr", False)])
    out = Outcome(echo)
    out.payload["value"] = str(v)
    out.say(str(v))
    return out


def cmd_compose(args) -> Outcome:
    echo, (f, g) = _inputs(args, [("outer", False), ("inner", False)])
    out = Outcome(echo)
    v = compose(f, g)
    out.payload["value"] = str(v)
    out.say(str(v))
    return out


def cmd_decompose(args) -> Outcome:
    echo, (p,) = _inputs(args, [("poly", True)])
    out = Outcome(echo)
    chains = all_complete_decompositions(p) if args.all_chains else [complete_decomposition(p)]
    out.payload["chains"] = [[str(f) for f in d.factors] for d in chains]
    out.payload["degrees"] = [d.degrees for d in chains]
    for d in chains:
        out.certificates.append(Certificate("recomposition of the chain", d.recompose(), p))
        out.say(" o ".join(f"({f})" for f in d.factors))
    return out


def cmd_right_factor(args) -> Outcome:
    echo, (p,) = _inputs(args, [("poly", True)])
    echo["l"] = args.l
    out = Outcome(echo)
    h = right_factor_poly(p, args.l)
    out.payload["found"] = h is not None
    out.payload["factor"] = _text(h)
    if h is None:
        out.negative = True
        out.say(f"no right factor of degree {args.l}")
        return out
    f = left_quotient(p, h)
    out.payload["left"] = str(f)
    out.certificates.append(Certificate("P = F o H", compose(f, h), p))
    out.say(f"H = {h}")
    out.say(f"F = {f}")
    return out


def cmd_is_sup(args) -> Outcome:
    echo, (p,) = _inputs(args, [("poly", True)])
    out = Outcome(echo)
    v = is_strong_uniqueness(p)
    out.payload.update(
        is_sup=v.is_sup,
        case=v.case,
        c=_text(v.c),
        params=_plain(v.params),
        f=v.f_desc or None,
        g=v.g_desc or None,
        note=v.note or None,
    )
    out.certificates += v.certificates
    if v.is_sup:
        out.say("SUP: " + v.note)
        out.negative = args.expect_not
    else:
        out.say(f"not SUP (case {v.case}), c = {v.c}")
        out.say(f"  f = {v.f_desc}")
        out.say(f"  g = {v.g_desc}")
    return out


def _report_payload(out: Outcome, rep):
    out.payload.update(
        case_id=rep.case_id,
        matches=[
            {"case": m.case, "params": _plain(m.params), "orientation": m.orientation, "exact_frame": m.exact_frame}
            for m in rep.matches
        ],
        reduction=_plain(rep.reduction),
        parameters=_plain(rep.parameters),
        notes=list(rep.notes),
    )
    out.certificates += rep.certificates
    out.negative = rep.case_id == "unmatched"
    out.say(f"case: {rep.case_id}")
    for m in rep.matches:
        out.say(f"  {m.case} ({m.orientation}): {_plain(m.params)}")
    for n in rep.notes:
        out.say(f"  note: {n}")


def cmd_classify_pair(args) -> Outcome:
    names = [("P", True), ("f", True), ("Q", True), ("g", True)]
    echo, vals = _inputs(args, names)
    out = Outcome(echo)
    _report_payload(out, classify_poly_pair(*vals))
    return out


def cmd_classify_laurent(args) -> Outcome:
    names = [("A", True), ("L1", False), ("B", True), ("L2", False)]
    echo, vals = _inputs(args, names)
    out = Outcome(echo)
    _report_payload(out, classify_laurent_pair(*vals))
    return out


def cmd_verify_family(args) -> Outcome:
    kw = {k: getattr(args, k) for k in ("n", "m", "r", "l", "k", "d1", "d2") if getattr(args, k) is not None}
    echo = {"family": args.family, **kw}
    for key in ("R", "S", "L", "N"):
        src = getattr(args, key)
        if src is not None:
            text, kw[key] = _expr_arg(src, key, key in ("R", "S"))
            echo[key] = text
    out = Outcome(echo)
    inst = generate(FamilyParams(args.family, **kw))
    cert = verify(inst)
    out.certificates.append(cert)
    out.payload.update(
        verified=cert.exact,
        conductor=inst.conductor,
        variable=inst.variable,
        lhs_outer=str(inst.lhs_outer),
        lhs_inner=str(inst.lhs_inner),
        rhs_outer=str(inst.rhs_outer),
        rhs_inner=str(inst.rhs_inner),
        note=cert.note or None,
    )
    out.negative = not cert.exact
    out.say(("verified" if cert.exact else "FAILED") + f": {args.family} over Q(zeta_{inst.conductor})")
    if cert.note:
        out.say("  " + cert.note)
    return out


def cmd_sporadic5(args) -> Outcome:
    out = Outcome({})
    inst = generate(FamilyParams("A5"))
    cert = verify(inst)
    degs = [inst.lhs.deg_plus, inst.rhs.deg_plus]
    rep = classify_laurent_pair(*sporadic_pair())
    out.certificates.append(cert)
    out.certificates += rep.certificates
    out.payload.update(
        verified=cert.exact,
        correction=cert.note or None,
        degrees=degs,
        conductor=inst.conductor,
        lhs_inner=str(inst.lhs_inner),
        rhs_inner=str(inst.rhs_inner),
        case_id=rep.case_id,
    )
    out.negative = not cert.exact or degs != [12, 12]
    out.say(("verified" if cert.exact else "FAILED") + f" over Q(zeta_24), degrees {degs}, classified {rep.case_id}")
    if cert.note:
        out.say("  " + cert.note)
    return out


def cmd_lemma_zc(args) -> Outcome:
    echo, (l1, l2) = _inputs(args, [("L1", False), ("L2", False)])
    echo.update(d1=args.d1, d2=args.d2)
    out = Outcome(echo)
    N = lemma_zc_recover(l1, args.d1, l2, args.d2)
    D = math.lcm(args.d1, args.d2)
    e1, e2 = D // args.d1, D // args.d2
    out.certificates += [
        Certificate(f"L1 = N o z^{e1}", compose(N, LaurentPoly({e1: 1})), l1),
        Certificate(f"L2 = N o z^{e2}", compose(N, LaurentPoly({e2: 1})), l2),
    ]
    out.payload.update(N=str(N), D=D)
    out.say(f"N = {N} (D = {D})")
    return out


# -- driver ------------------------------------------------------------------

def _global_flags(p, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=d(False), help="emit a JSON report")
    p.add_argument("--conductor-limit", type=int, default=d(CLI_CONDUCTOR_LIMIT), metavar="N")
    p.add_argument("--degree-limit", type=int, default=d(CLI_DEGREE_LIMIT), metavar="N")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgParser(prog="ritteq", description="Exact tools for double decompositions and strong uniqueness.")
    _global_flags(parser, False)
    common = _ArgParser(add_help=False)
    _global_flags(common, True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgParser)

    def add(name, func, help_text, *positional):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for arg, kind in positional:
            p.add_argument(arg, type=kind)
        p.set_defaults(func=func)
        return p

    add("eval", cmd_eval, "evaluate an expression", ("expr", str))
    add("compose", cmd_compose, "compose two expressions", ("outer", str), ("inner", str))
    p = add("decompose", cmd_decompose, "complete decomposition of a polynomial", ("poly", str))
    p.add_argument("--all-chains", action="store_true")
    add("right-factor", cmd_right_factor, "normalized right factor of degree L", ("poly", str), ("l", int))
    p = add("is-sup", cmd_is_sup, "strong uniqueness decision with witnesses", ("poly", str))
    p.add_argument("--expect-not", action="store_true", help="exit 1 when the polynomial is a SUP")
    add("classify-pair", cmd_classify_pair, "classify P o f = Q o g", ("P", str), ("f", str), ("Q", str), ("g", str))
    add("classify-laurent", cmd_classify_laurent, "classify A o L1 = B o L2",
        ("A", str), ("L1", str), ("B", str), ("L2", str))
    p = add("verify-family", cmd_verify_family, "generate and verify one family member", ("family", str))
    for name in ("n", "m", "r", "l", "k", "d1", "d2"):
        p.add_argument(f"--{name}", type=int)
    for name in ("R", "S", "L", "N"):
        p.add_argument(f"--{name}", type=str)
    add("sporadic5", cmd_sporadic5, "verify the sporadic pair")
    add("lemma-zc", cmd_lemma_zc, "recover N from L1 o z^d1 = L2 o z^d2",
        ("L1", str), ("d1", int), ("L2", str), ("d2", int))
    return parser


_FLAG = re.compile(r"^--?[A-Za-z][A-Za-z0-9-]*$")


def _shield(argv):
    # expressions such as "-z^2" would otherwise be read as options
    return [a if not a.startswith("-") or _FLAG.match(a) or a == "--" else " " + a for a in argv]


def _error_report(command, exc, code) -> dict:
    err = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParseError):
        err.update(line=exc.line, column=exc.column, expected=list(exc.expected))
    if isinstance(exc, VerificationError) and exc.exponent is not None:
        err.update(exponent=exc.exponent, lhs=str(exc.lhs), rhs=str(exc.rhs))
    status = {EXIT_NEGATIVE: "negative", EXIT_USAGE: "error", EXIT_LIMIT: "limit"}[code]
    return {"command": command, "status": status, "exit_code": code, "error": err, "certificates": []}


def run(argv=None, stdout=None, stderr=None) -> int:
    """Run one command; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv
    command = next((a for a in argv if not a.startswith("-")), None)
    try:
        args = build_parser().parse_args(_shield(argv))
        command = args.command
        want_json = args.json
        if args.degree_limit < 1 or args.conductor_limit < 1:
            raise UsageError("limits must be positive")
        with limits(conductor=args.conductor_limit, degree=args.degree_limit):
            out = args.func(args)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (ParseError, UsageError, DomainError) as exc:
        return _fail(command, exc, EXIT_USAGE, want_json, stdout, stderr)
    except LimitError as exc:
        return _fail(command, exc, EXIT_LIMIT, want_json, stdout, stderr)
    except VerificationError as exc:
        return _fail(command, exc, EXIT_NEGATIVE, want_json, stdout, stderr)
    except RittError as exc:  # pragma: no cover - every subclass is handled above
        return _fail(command, exc, EXIT_USAGE, want_json, stdout, stderr)
    code = EXIT_NEGATIVE if out.negative or not all(c.exact for c in out.certificates) else EXIT_OK
    if want_json:
        report = {
            "command": command,
            "status": "ok" if code == EXIT_OK else "negative",
            "exit_code": code,
            "inputs": out.inputs,
            **out.payload,
            "certificates": [c.to_json() for c in out.certificates],
        }
        json.dump(report, stdout, indent=2, ensure_ascii=False)
        stdout.write("\n")
    else:
        for line in out.lines:
            stdout.write(line + "\n")
    return code


def _fail(command, exc, code, want_json, stdout, stderr) -> int:
    if want_json:
        json.dump(_error_report(command, exc, code), stdout, indent=2, ensure_ascii=False)
        stdout.write("\n")
    else:
        stderr.write(f"ritteq: {type(exc).__name__}: {exc}\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
