"""Order-preserving parallel map over sweep work units."""

from __future__ import annotations

from typing import Callable, Sequence, TypeVar

from ..enumerate import canonical_codes

A = TypeVar("A")
B = TypeVar("B")


def pmap(fn: Callable[[A], B], items: Sequence[A], jobs: int = 1) -> list[B]:
    """``[fn(x) for x in items]``, spread over ``jobs`` forked workers.

    Results come back in input order, so callers that merge them get the same
    output for every worker count.
    """
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    from multiprocessing import get_context

    chunk = max(1, len(items) // (jobs * 16))
    with get_context("fork").Pool(jobs) as pool:
        return pool.map(fn, items, chunksize=chunk)


def tournament_units(orders: Sequence[int], jobs: int = 1) -> list[tuple[int, int]]:
    """(order, canonical code) for every tournament class of the given orders."""
    units = []
    for n in orders:
        if n > 9:
            raise ValueError("sweeps stop at order 9")
        units.extend((n, c) for c in canonical_codes(n, jobs))
    return units
