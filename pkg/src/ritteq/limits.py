"""Resource bounds for conductors and degrees.

Bounds live in context variables so a caller (the CLI, a test) can tighten
them for one block without touching global state::

    with limits(conductor=64, degree=32):
        ...
"""

from __future__ import annotations

import contextlib
from contextvars import ContextVar

from .errors import LimitError

DEFAULT_CONDUCTOR_LIMIT = 256
DEFAULT_DEGREE_LIMIT = 4096

_conductor_limit: ContextVar[int] = ContextVar("conductor_limit", default=DEFAULT_CONDUCTOR_LIMIT)
_degree_limit: ContextVar[int] = ContextVar("degree_limit", default=DEFAULT_DEGREE_LIMIT)


def conductor_limit() -> int:
    return _conductor_limit.get()


def degree_limit() -> int:
    return _degree_limit.get()


@contextlib.contextmanager
def limits(conductor: int | None = None, degree: int | None = None):
    tokens = []
    if conductor is not None:
        tokens.append((_conductor_limit, _conductor_limit.set(conductor)))
    if degree is not None:
        tokens.append((_degree_limit, _degree_limit.set(degree)))
    try:
        yield
    finally:
        for var, tok in reversed(tokens):
            var.reset(tok)


def check_conductor(m: int) -> None:
    if m > conductor_limit():
        raise LimitError(f"conductor {m} exceeds limit {conductor_limit()}")


def check_degree(d: int) -> None:
    if d > degree_limit():
        raise LimitError(f"degree {d} exceeds limit {degree_limit()}")
