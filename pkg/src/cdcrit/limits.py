"""Scale caps for the exponential scans, overridable through CDCRIT_MAX_N."""

from __future__ import annotations

import os

from .errors import CapExceededError

ENV_VAR = "CDCRIT_MAX_N"


def cap(default: int) -> int:
    raw = os.environ.get(ENV_VAR)
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return default


def enforce(what: str, n: int, default: int) -> None:
    limit = cap(default)
    if n > limit:
        raise CapExceededError(what, n, limit)
