"""Deterministic map-reduce over a process pool."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def _chunks(items: Sequence[T], n: int) -> list[Sequence[T]]:
    size = max(1, -(-len(items) // n))
    return [items[i:i + size] for i in range(0, len(items), size)]


def map_reduce(
    func: Callable[[Sequence[T]], R],
    items: Iterable[T],
    reduce: Callable[[R, R], R],
    initial: R,
    workers: int = 1,
) -> R:
    """Apply ``func`` to contiguous chunks and fold the results in chunk order.

    ``func`` must be a picklable top-level callable when ``workers > 1``.
    The fold order never depends on scheduling, so exact reductions give
    identical results for every worker count.
    """
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return reduce(initial, func(items))
    parts = _chunks(items, workers * 4)
    acc = initial
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for result in pool.map(func, parts):
            acc = reduce(acc, result)
    return acc
