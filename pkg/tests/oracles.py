"""Brute-force reference implementations used as test oracles."""

from __future__ import annotations

from itertools import permutations

from tournakit.core import Tournament, make_tournament
from tournakit.patterns import CycleType, PathType


def arc_dirs(t: Tournament, seq) -> tuple[int, ...]:
    return tuple(1 if t.arc(a, b) else 0 for a, b in zip(seq, seq[1:]))


def hamiltonian_paths(t: Tournament, p: PathType):
    for perm in permutations(t.vertices):
        if arc_dirs(t, perm) == p.dirs:
            yield perm


def brute_origins(t: Tournament, p: PathType) -> set[int]:
    return {seq[0] for seq in hamiltonian_paths(t, p)}


def brute_count(t: Tournament, p: PathType) -> int:
    return sum(1 for _ in hamiltonian_paths(t, p))


def brute_has_cycle(t: Tournament, c: CycleType) -> bool:
    """Some ``m``-subset ordering closes into a cycle of type ``c``."""
    m = c.order
    for perm in permutations(t.vertices, m):
        if perm[0] != min(perm):
            continue
        d = arc_dirs(t, perm + (perm[0],))
        try:
            if CycleType.from_dirs(d) == c:
                return True
        except ValueError:
            pass
    return False


def brute_canonical_bits(t: Tournament) -> str:
    return min(t.relabel(perm).bits for perm in permutations(t.vertices))


def all_labeled(n: int):
    nbits = n * (n - 1) // 2
    for code in range(1 << nbits):
        yield make_tournament(n, format(code, f"0{nbits}b") if nbits else "")
