"""Exception types and size-cap configuration shared by all modules."""

from __future__ import annotations

import os

DEFAULT_SUBSET_CAP = 2**20
DEFAULT_CLOSURE_CAP = 10**6


class LassoError(ValueError):
    """Malformed input: bad symbols, partial tables, broken invariants."""


class SizeCapExceeded(RuntimeError):
    """A construction would exceed its configured size guard."""

    def __init__(self, what: str, estimate, cap: int):
        self.what = what
        self.estimate = estimate
        self.cap = cap
        super().__init__(f"{what}: size {estimate} exceeds cap {cap}")


def env_cap(default: int) -> int:
    """Cap override from ``LASSOKIT_CAP`` if set, else ``default``."""
    raw = os.environ.get("LASSOKIT_CAP")
    if not raw:
        return default
    try:
        return int(float(raw))
    except ValueError as exc:
        raise LassoError(f"LASSOKIT_CAP is not a number: {raw!r}") from exc
