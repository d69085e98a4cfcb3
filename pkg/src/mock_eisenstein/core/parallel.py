"""Ordered worker-pool map used for every per-exponent evaluation."""

import logging
import multiprocessing
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def _make_executor(max_workers: int) -> Executor:
    """Process pool with the 'fork' context so workers inherit warm caches.

    Falls back to threads if the platform has no fork start method.
    """
    try:
        ctx = multiprocessing.get_context("fork")
        return ProcessPoolExecutor(max_workers=max_workers, mp_context=ctx)
    except ValueError as e:
        logger.warning(f"Process pool unavailable ({e}), falling back to threads")
        return ThreadPoolExecutor(max_workers=max_workers)


def parallel_map(func: Callable[[T], R], items: Iterable[T], workers: int = 1) -> list[R]:
    """Apply func to every item and return the results in input order.

    func must be picklable (a module-level function or a functools.partial of one)
    when workers > 1. The result order never depends on scheduling.
    """
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [func(item) for item in items]

    chunksize = max(1, len(items) // (workers * 4))
    logger.debug(f"Mapping {len(items)} item(s) over {workers} worker(s), chunksize={chunksize}")
    with _make_executor(workers) as executor:
        return list(executor.map(func, items, chunksize=chunksize))
