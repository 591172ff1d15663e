"""Isomorph-free generation of tournaments by canonical augmentation.

Each class of order n is produced from exactly one class of order n-1: the one
obtained by deleting the vertex that lands last in the canonical relabeling.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from . import kernels as K
from .core import Tournament, make_tournament

MAX_ORDER = 8
HARD_MAX_ORDER = 9
KNOWN_COUNTS = {1: 1, 2: 1, 3: 2, 4: 4, 5: 12, 6: 56, 7: 456, 8: 6880, 9: 191536}


def from_code(n: int, code: int) -> Tournament:
    """The tournament whose arc-bit string is ``code`` written in binary."""
    nbits = n * (n - 1) // 2
    return make_tournament(n, format(code, f"0{nbits}b") if nbits else "")


def _delete_last(out: list[int], v: int) -> list[int]:
    rows = []
    low = (1 << v) - 1
    for u, r in enumerate(out):
        if u == v:
            continue
        rows.append((r & low) | ((r >> (v + 1)) << v))
    return rows


def children_codes(parent_code: int, n: int) -> list[int]:
    """Canonical codes of the order-n classes whose canonical parent is the
    order-(n-1) class with the given canonical code."""
    parent = from_code(n - 1, parent_code)
    base = list(parent.out) + [0]
    new = n - 1
    found = set()
    for beats in range(1 << new):
        out = list(base)
        # new vertex beats the old vertices in `beats`, loses to the rest
        out[new] = beats
        for u in range(new):
            if not beats >> u & 1:
                out[u] |= 1 << new
        code, perm = K.canonical(out)
        if code in found:
            continue
        pcode, _ = K.canonical(_delete_last(out, perm[-1]))
        if pcode == parent_code:
            found.add(code)
    return sorted(found)


def _children_task(args: tuple[int, int]) -> list[int]:
    return children_codes(*args)


@lru_cache(maxsize=None)
def canonical_codes(n: int, jobs: int = 1) -> tuple[int, ...]:
    if n < 1 or n > HARD_MAX_ORDER:
        raise ValueError(f"order must be in 1..{HARD_MAX_ORDER}")
    if n == 1:
        return (0,)
    parents = canonical_codes(n - 1, 1)
    tasks = [(p, n) for p in parents]
    if jobs > 1 and len(tasks) > 1:
        from multiprocessing import get_context

        with get_context("fork").Pool(jobs) as pool:
            parts = pool.map(_children_task, tasks, chunksize=max(1, len(tasks) // (8 * jobs)))
    else:
        parts = [_children_task(t) for t in tasks]
    codes = sorted(c for part in parts for c in part)
    return tuple(codes)


def _check_order(n: int, allow_nine: bool) -> None:
    cap = HARD_MAX_ORDER if allow_nine else MAX_ORDER
    if not isinstance(n, int) or n < 1 or n > cap:
        hint = "" if allow_nine or n != HARD_MAX_ORDER else " (order 9 needs allow_nine=True)"
        raise ValueError(f"order must be in 1..{cap}{hint}")


def tournaments_of_order(n: int, allow_nine: bool = False, jobs: int = 1) -> Iterator[Tournament]:
    """Every tournament of order n up to isomorphism, each in canonical
    labeling, sorted by canonical code."""
    _check_order(n, allow_nine)
    for code in canonical_codes(n, jobs):
        yield from_code(n, code)


def count_tournaments(n: int, allow_nine: bool = False, jobs: int = 1) -> int:
    _check_order(n, allow_nine)
    return len(canonical_codes(n, jobs))


def naive_canonical_codes(n: int) -> list[int]:
    """Brute force: canonical codes of all labeled tournaments of order n."""
    nbits = n * (n - 1) // 2
    seen = set()
    for b in range(1 << nbits):
        t = from_code(n, b)
        seen.add(K.canonical(list(t.out))[0])
    return sorted(seen)
