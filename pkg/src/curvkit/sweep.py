"""Seeded per-sample random streams and an order-independent sample runner."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

THREADS_ENV = "CURVKIT_THREADS"


def substream(seed: int, *keys: int) -> np.random.Generator:
    """Independent generator for ``(seed, *keys)``.

    Each sample draws from its own stream, so results do not depend on the
    order (or thread) in which samples are evaluated.
    """
    return np.random.default_rng(np.random.SeedSequence([seed & (2**64 - 1), *keys]))


def worker_count() -> int:
    raw = os.environ.get(THREADS_ENV, "0").strip() or "0"
    try:
        return max(int(raw), 0)
    except ValueError:
        return 0


def run_samples(fn, count: int, workers: int | None = None) -> list:
    """``[fn(i) for i in range(count)]``, optionally spread over threads."""
    if workers is None:
        workers = worker_count()
    if workers <= 1:
        return [fn(i) for i in range(count)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(count)))


def relative_residual(actual: float, expected: float) -> float:
    return abs(actual - expected) / (1.0 + abs(expected))
