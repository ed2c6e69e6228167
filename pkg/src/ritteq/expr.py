"""Expression language for the command line.

Grammar (whitespace insensitive)::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | factor
    factor := atom ('^' ['-'] INT)?
    atom   := INT ['/' INT] | 'i' | 'z' | 'w'
            | 'zeta(' INT ')' | 'T(' INT ')' | 'U(' INT ')' | 'V(' INT ')'
            | 'comp(' expr ',' expr ')'
            | 'cos(' INT [',' INT ',' INT] ')' | 'sin(' ... ')' | 'exp(' INT ')'
            | '(' expr ')'

``cos(k, a, b)`` is cos(k z + a pi / b), encoded under w = e^{iz}; ``w`` is an
alias of ``z`` for typing trig-encoded inputs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .cheb import TrigExpr, U, V, cheb_T, encode_trig, phase
from .cyclo import zeta
from .errors import ParseError, UsageError
from .laurent import LaurentPoly, Z, compose

__all__ = [
    "Num", "Imag", "Zeta", "Var", "Cheb", "Comp", "Trig", "BinOp", "Neg", "Pow",
    "tokenize", "parse", "unparse", "evaluate", "parse_poly",
]


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Imag:
    pass


@dataclass(frozen=True)
class Zeta:
    m: int


@dataclass(frozen=True)
class Var:
    name: str = "z"


@dataclass(frozen=True)
class Cheb:
    kind: str  # T, U or V
    n: int


@dataclass(frozen=True)
class Comp:
    outer: object
    inner: object


@dataclass(frozen=True)
class Trig:
    kind: str  # cos, sin or exp
    k: int
    num: int = 0
    den: int = 1


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


# -- tokens ------------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str  # int, name, op, end
    text: str
    line: int
    column: int


def tokenize(src: str) -> list[Token]:
    out = []
    i, line, col = 0, 1, 1
    while i < len(src):
        ch = src[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if ch.isspace():
            i, col = i + 1, col + 1
            continue
        if ch.isdigit():
            m = _INT.match(src, i)
        elif ch.isalpha() or ch == "_":
            m = _NAME.match(src, i)
        elif ch in "+-*^/(),":
            out.append(Token("op", ch, line, col))
            i, col = i + 1, col + 1
            continue
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
        text = m.group()
        out.append(Token("int" if ch.isdigit() else "name", text, line, col))
        i, col = i + len(text), col + len(text)
    out.append(Token("end", "", line, col))
    return out


_INT = re.compile(r"\d+")
_NAME = re.compile(r"[A-Za-z_]+")


# -- parser ------------------------------------------------------------------

_CONSTRUCTORS = ("zeta", "T", "U", "V", "comp", "cos", "sin", "exp")


class _Parser:
    def __init__(self, src: str):
        self.toks = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def fail(self, expected):
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"expected {' or '.join(expected)}, found {found}", t.line, t.column, expected)

    def accept(self, text) -> bool:
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            self.fail([repr(text)])

    def integer(self) -> int:
        if self.tok.kind != "int":
            self.fail(["integer"])
        v = int(self.tok.text)
        self.i += 1
        return v

    def signed(self) -> int:
        sign = -1 if self.accept("-") else 1
        return sign * self.integer()

    def parse(self):
        e = self.expr()
        if self.tok.kind != "end":
            self.fail(["'+'", "'-'", "'*'", "end of input"])
        return e

    def expr(self):
        left = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.tok.text
            self.i += 1
            left = BinOp(op, left, self.term())
        return left

    def term(self):
        left = self.unary()
        while self.accept("*"):
            left = BinOp("*", left, self.unary())
        return left

    def unary(self):
        if self.accept("-"):
            return Neg(self.unary())
        return self.factor()

    def factor(self):
        base = self.atom()
        if self.accept("^"):
            return Pow(base, self.signed())
        return base

    def atom(self):
        t = self.tok
        if t.kind == "int":
            num = self.integer()
            if self.accept("/"):
                den = self.integer()
                if den == 0:
                    raise ParseError("zero denominator", t.line, t.column)
                return Num(Fraction(num, den))
            return Num(Fraction(num))
        if self.accept("("):
            e = self.expr()
            self.expect(")")
            return e
        if t.kind != "name":
            self.fail(["number", "'('", "'z'", "'i'", *(repr(c + "(") for c in _CONSTRUCTORS)])
        self.i += 1
        if t.text in ("z", "w"):
            return Var(t.text)
        if t.text == "i":
            return Imag()
        if t.text not in _CONSTRUCTORS:
            raise ParseError(f"unknown name {t.text!r}", t.line, t.column, _CONSTRUCTORS)
        self.expect("(")
        if t.text == "comp":
            outer = self.expr()
            self.expect(",")
            inner = self.expr()
            node = Comp(outer, inner)
        elif t.text in ("cos", "sin"):
            k = self.signed()
            num, den = 0, 1
            if self.accept(","):
                num = self.signed()
                self.expect(",")
                den = self.integer()
                if den == 0:
                    raise ParseError("zero phase denominator", t.line, t.column)
            node = Trig(t.text, k, num, den)
        elif t.text == "exp":
            node = Trig("exp", self.signed())
        else:
            n = self.integer()
            if t.text == "zeta" and n == 0:
                raise ParseError("zeta needs a positive order", t.line, t.column)
            node = Zeta(n) if t.text == "zeta" else Cheb(t.text, n)
        self.expect(")")
        return node


def parse(src: str):
    """Parse ``src`` into an AST; raises ParseError with line and column."""
    return _Parser(src).parse()


# -- printer -----------------------------------------------------------------

def _prec(node) -> int:
    if isinstance(node, BinOp):
        return 1 if node.op in "+-" else 2
    if isinstance(node, Neg):
        return 3
    if isinstance(node, Pow):
        return 4
    if isinstance(node, Num) and node.value.denominator != 1:
        return 4  # a/b binds like a factor, never as a power base without parentheses
    return 5


def unparse(node) -> str:
    """Canonical text that parses back to the same tree."""
    if isinstance(node, Num):
        v = node.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(node, Imag):
        return "i"
    if isinstance(node, Zeta):
        return f"zeta({node.m})"
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Cheb):
        return f"{node.kind}({node.n})"
    if isinstance(node, Comp):
        return f"comp({unparse(node.outer)}, {unparse(node.inner)})"
    if isinstance(node, Trig):
        if node.kind == "exp":
            return f"exp({node.k})"
        if node.num == 0 and node.den == 1:
            return f"{node.kind}({node.k})"
        return f"{node.kind}({node.k}, {node.num}, {node.den})"
    if isinstance(node, Neg):
        inner = unparse(node.operand)
        return f"-{inner}" if _prec(node.operand) >= 3 else f"-({inner})"
    if isinstance(node, Pow):
        base = unparse(node.base)
        if _prec(node.base) < 5:
            base = f"({base})"
        return f"{base}^{node.exponent}"
    if isinstance(node, BinOp):
        p = _prec(node)
        left, right = unparse(node.left), unparse(node.right)
        if _prec(node.left) < p:
            left = f"({left})"
        if _prec(node.right) <= p:
            right = f"({right})"
        sep = "*" if node.op == "*" else f" {node.op} "
        return f"{left}{sep}{right}"
    raise TypeError(f"not an expression node: {node!r}")


# -- evaluation --------------------------------------------------------------

def evaluate(node, conductor: int | None = None) -> LaurentPoly:
    """Exact value of an AST as a Laurent polynomial (trig atoms encoded under w = e^{iz})."""
    if isinstance(node, Num):
        return LaurentPoly.const(node.value)
    if isinstance(node, Imag):
        return LaurentPoly.const(zeta(4))
    if isinstance(node, Zeta):
        return LaurentPoly.const(zeta(node.m))
    if isinstance(node, Var):
        return Z
    if isinstance(node, Cheb):
        return {"T": cheb_T, "U": U, "V": V}[node.kind](node.n)
    if isinstance(node, Comp):
        return compose(evaluate(node.outer, conductor), evaluate(node.inner, conductor))
    if isinstance(node, Trig):
        if node.kind == "exp":
            e = TrigExpr.exp(node.k)
        else:
            e = getattr(TrigExpr, node.kind)(node.k, phase(node.num, node.den))
        return encode_trig(e)
    if isinstance(node, Neg):
        return -evaluate(node.operand, conductor)
    if isinstance(node, Pow):
        return evaluate(node.base, conductor) ** node.exponent
    if isinstance(node, BinOp):
        a, b = evaluate(node.left, conductor), evaluate(node.right, conductor)
        return a + b if node.op == "+" else a - b if node.op == "-" else a * b
    raise TypeError(f"not an expression node: {node!r}")


def parse_poly(src: str, *, polynomial: bool = False, name: str = "argument") -> LaurentPoly:
    """Parse and evaluate; with ``polynomial=True`` reject negative exponents."""
    value = evaluate(parse(src))
    if polynomial and not value.is_polynomial():
        raise UsageError(f"{name} must be a polynomial, got {value}")
    return value
