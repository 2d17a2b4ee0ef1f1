import multiprocessing
from collections.abc import Callable, Iterable
from typing import TypeVar

from .config import config


T = TypeVar("T")
R = TypeVar("R")


def worker_map(fn: Callable[[T], R], items: Iterable[T], threads: int | None = None) -> list[R]:
    """Maps `fn` over `items`, in input order, on a process pool when more
    than one worker is requested. `fn` must be a picklable top-level callable.

    Args:
        fn: The per-item computation.
        items: The inputs.
        threads: Worker count; defaults to `config.threads`.

    Returns:
        list: Results in the order of `items`, whatever the completion order.
    """
    workers = config.threads if threads is None else threads
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    chunksize = max(1, len(items) // (workers * 8))
    with multiprocessing.Pool(workers) as pool:
        return pool.map(fn, items, chunksize=chunksize)
