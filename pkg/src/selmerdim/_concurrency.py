"""Order-preserving fan-out over independent levels.

SELMER_DIM_THREADS caps the worker count; results are collected in input
order, so reports are identical for every cap value.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")

_ENV_VAR = "SELMER_DIM_THREADS"


def thread_cap() -> int:
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{_ENV_VAR} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{_ENV_VAR} must be a positive integer, got {raw!r}")
    return value


def ordered_map(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    values = list(items)
    cap = thread_cap()
    if cap == 1 or len(values) <= 1:
        return [fn(v) for v in values]
    with ThreadPoolExecutor(max_workers=min(cap, len(values))) as pool:
        return list(pool.map(fn, values))
