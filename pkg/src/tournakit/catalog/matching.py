"""Decide whether a (tournament, pattern) pair is a catalogued exception."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Union

from ..core import Tournament, canonical_code, dual, marked_canonical_code, members, out_section
from ..patterns import CycleType, PathType, reverse_cycle_type
from ..search import origins
from .biexceptions import BiexceptionInstance, biexception_instances
from .figures import exception_tournament
from .families import FAMILIES, MAX_FAMILY_ORDER, family_instances
from .records import cycle_exceptions, finite_path_exceptions

Pattern = Union[PathType, CycleType]


@dataclass(frozen=True)
class ExceptionMatch:
    kind: str  # "finite", "family" or "cycle"
    name: str  # "Exc 2", "E1(5)", "A8"
    via_dual: bool = False  # cycle entries are listed up to duality
    record: Any = field(default=None, compare=False, repr=False)


def is_exception(t: Tournament, p: PathType, orig: int | None = None) -> bool:
    """Some two vertices outside Or(P,T) have a joint outsection of size at
    least b1(P)+1."""
    if orig is None:
        orig = origins(t, p)
    non = members(t.full_mask & ~orig)
    need = p.blocks[0] + 1
    for a in range(len(non)):
        for b in range(a + 1, len(non)):
            if bin(out_section(t, (1 << non[a]) | (1 << non[b]))).count("1") >= need:
                return True
    return False


@lru_cache(maxsize=None)
def _regular_codes() -> frozenset[tuple[int, int]]:
    return frozenset((n, canonical_code(exception_tournament(f"{n}A"))) for n in (3, 5, 7))


def is_grunbaum_exception(t: Tournament, p: PathType) -> bool:
    """(3A, 5A or 7A; antidirected Hamiltonian outpath)."""
    return (
        p.sign == 1
        and p.order == t.order
        and all(b == 1 for b in p.blocks)
        and (t.order, canonical_code(t)) in _regular_codes()
    )


@lru_cache(maxsize=None)
def _finite_index() -> dict[tuple[str, int, int], list[ExceptionMatch]]:
    idx: dict[tuple[str, int, int], list[ExceptionMatch]] = {}
    for rec in finite_path_exceptions():
        key = (str(rec.path), rec.tournament.order, canonical_code(rec.tournament))
        idx.setdefault(key, []).append(ExceptionMatch("finite", f"Exc {rec.id}", record=rec))
    return idx


@lru_cache(maxsize=None)
def _family_index(n: int) -> dict[tuple[str, int, int], list[ExceptionMatch]]:
    idx: dict[tuple[str, int, int], list[ExceptionMatch]] = {}
    for fid in FAMILIES:
        for inst in family_instances(fid, n):
            key = (str(inst.path), n, canonical_code(inst.tournament))
            idx.setdefault(key, []).append(ExceptionMatch("family", f"{fid}({n})", record=inst))
    return idx


@lru_cache(maxsize=None)
def _cycle_index() -> dict[tuple[str, int, int], list[ExceptionMatch]]:
    idx: dict[tuple[str, int, int], list[ExceptionMatch]] = {}
    for rec in cycle_exceptions():
        for t in rec.tournaments():
            key = (str(rec.cycle), t.order, canonical_code(t))
            idx.setdefault(key, []).append(ExceptionMatch("cycle", rec.name, record=rec))
    for rec in cycle_exceptions():
        for t in rec.tournaments():
            key = (str(reverse_cycle_type(rec.cycle)), t.order, canonical_code(dual(t)))
            lst = idx.setdefault(key, [])
            if not any(m.name == rec.name for m in lst):
                lst.append(ExceptionMatch("cycle", rec.name, True, rec))
    return idx


def match_all(t: Tournament, pattern: Pattern) -> list[ExceptionMatch]:
    """Every catalogue entry the pair is isomorphic to, finite entries first."""
    if isinstance(pattern, CycleType):
        return list(_cycle_index().get((str(pattern), t.order, canonical_code(t)), []))
    if pattern.order != t.order:
        return []
    key = (str(pattern), t.order, canonical_code(t))
    res = list(_finite_index().get(key, []))
    if t.order <= MAX_FAMILY_ORDER:
        res += _family_index(t.order).get(key, [])
    return res


def match_exception(t: Tournament, pattern: Pattern) -> ExceptionMatch | None:
    """The first catalogue entry isomorphic to (T, pattern), or None.

    Path types are matched against the finite list and the family members of
    the same order; cycle types against the cycle list and its duals.
    """
    found = match_all(t, pattern)
    return found[0] if found else None


@lru_cache(maxsize=None)
def _biexception_index(max_order: int) -> dict[tuple[str, int], list[BiexceptionInstance]]:
    idx: dict[tuple[str, int], list[BiexceptionInstance]] = {}
    for b in biexception_instances(max_order):
        key = (str(b.path), marked_canonical_code(b.tournament, [b.x]))
        idx.setdefault(key, []).append(b)
    return idx


def match_biexception(t: Tournament, p: PathType, x: int, max_order: int = 8) -> list[BiexceptionInstance]:
    """Listed biexceptions isomorphic to (T, P) by a map fixing x."""
    if t.order > max_order:
        return []
    return list(_biexception_index(max_order).get((str(p), marked_canonical_code(t, [x])), []))
