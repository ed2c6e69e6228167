"""Exact equality certificates."""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field

from .laurent import LaurentPoly, first_difference


def canonical_pair(lhs: LaurentPoly, rhs: LaurentPoly, var: str = "z") -> tuple[str, str]:
    """Both sides printed with coefficients in one common field, so equal values print equally."""
    k = math.lcm(lhs.conductor, rhs.conductor)
    return lhs.to_str(var, k), rhs.to_str(var, k)


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


@dataclass(frozen=True)
class Certificate:
    """The claim ``lhs == rhs`` together with whether it holds exactly."""

    name: str
    lhs: LaurentPoly
    rhs: LaurentPoly
    note: str = ""
    var: str = "z"
    exact: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "exact", self.lhs == self.rhs)

    def __bool__(self):
        return self.exact

    def first_difference(self):
        """(exponent, lhs coefficient, rhs coefficient) at the smallest mismatch, or None."""
        return first_difference(self.lhs, self.rhs)

    def to_json(self) -> dict:
        left, right = canonical_pair(self.lhs, self.rhs, self.var)
        out = {
            "name": self.name,
            "lhs": left,
            "rhs": right,
            "lhs_hash": digest(left),
            "rhs_hash": digest(right),
            "exact": self.exact,
            "variable": self.var,
        }
        if self.note:
            out["note"] = self.note
        diff = self.first_difference()
        if diff is not None:
            k, a, b = diff
            out["first_difference"] = {"exponent": k, "lhs": str(a), "rhs": str(b)}
        return out
