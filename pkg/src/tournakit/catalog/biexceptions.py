"""Biexceptions materialized as concrete (T, P, x) triples.

Finite entries come straight from the records table.  Entries over the
infinite families are expanded for every family member up to a given order,
following the neighbourhood rule of the entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator

from ..core import Tournament, induced, is_isomorphic, mask_of, members, transitive
from ..patterns import PathType
from .families import FamilyInstance, family_instances, instantiate_family
from .figures import exception_tournament
from .records import biexception_records, extend_by_vertex


@dataclass(frozen=True)
class BiexceptionInstance:
    key: str
    base: str  # "Exc k" or a family member such as "E1(5)"
    i: int
    tournament: Tournament
    x: int
    path: PathType
    s_mask: int
    neighbourhood: str  # e.g. "N+(x)={1,2}" in drawing labels

    @property
    def order(self) -> int:
        return self.tournament.order


def derived_path(base: PathType, i: int) -> PathType:
    """The path P with *P equal to ``base``: a longer first block when i = 0,
    a backward arc in front when i = 1."""
    if base.sign != 1:
        raise ValueError("base type must be an outpath")
    if i == 0:
        return PathType(1, (base.blocks[0] + 1,) + base.blocks[1:])
    return PathType(-1, (1,) + base.blocks)


def _finite() -> Iterator[BiexceptionInstance]:
    for rec in biexception_records():
        t, x = rec.build()
        nb = "{" + ",".join(map(str, rec.neighbourhood)) + "}"
        yield BiexceptionInstance(
            f"Exc {rec.key}", f"Exc {rec.base}", rec.i, t, x, rec.path, rec.s_mask,
            f"N{rec.side}(x)={nb}",
        )


# -- family entries

Expansion = Iterator[tuple[int, int]]  # (neighbourhood mask, S mask) in base indices


@dataclass(frozen=True)
class FamilyBiexception:
    key: str  # printed with the base order filled in
    family: str
    i: int
    side: str
    base_order: int | None  # None: every order
    expand: Callable[[FamilyInstance], Expansion]
    rule: str

    def bases(self, max_base_order: int) -> Iterator[FamilyInstance]:
        orders = [self.base_order] if self.base_order else range(1, max_base_order + 1)
        for n in orders:
            if n > max_base_order:
                continue
            if self.family == "E7" and self.base_order == 6:
                yield instantiate_family("E7", None, exception_tournament("3A"), check=False)
                continue
            yield from family_instances(self.family, n)


def _lab(inst: FamilyInstance, labels: str) -> int:
    return mask_of(inst.labels[c] for c in labels)


def _fixed(nbhd: str, s: str) -> Callable[[FamilyInstance], Expansion]:
    def expand(inst: FamilyInstance) -> Expansion:
        s_mask = inst.x_mask if s == "X" else _lab(inst, s)
        yield _lab(inst, nbhd), s_mask

    return expand


def _subsets_of_x(inst: FamilyInstance) -> Expansion:
    xs = members(inst.x_mask)
    for k in range(2, len(xs) + 1):
        for sub in combinations(xs, k):
            yield mask_of(sub), inst.x_mask


def _sub_is(inst: FamilyInstance, mask: int, name: str) -> bool:
    return bool(mask) and is_isomorphic(induced(inst.tournament, mask), exception_tournament(name))


def _e5_first(inst: FamilyInstance) -> Expansion:
    if _sub_is(inst, inst.y_mask, "3A"):
        yield _lab(inst, "12"), _lab(inst, "12")


def _e5_second(inst: FamilyInstance) -> Expansion:
    if not _sub_is(inst, inst.y_mask, "3A") and bin(inst.x_mask).count("1") == 1:
        yield _lab(inst, "12"), _lab(inst, "2")


def _e6(inst: FamilyInstance) -> Expansion:
    ys = members(inst.y_mask)
    if len(ys) == 2:
        a, b = ys
        u = a if inst.tournament.arc(a, b) else b
        yield _lab(inst, "13"), _lab(inst, "3") | 1 << u


def _e8_second(inst: FamilyInstance) -> Expansion:
    xs = members(inst.x_mask)
    tx = induced(inst.tournament, inst.x_mask)
    if len(xs) == 3 and is_isomorphic(tx, transitive(3)):
        u = next(v for v in xs if inst.tournament.in_mask(v) & inst.x_mask == 0)
        yield inst.x_mask, 1 << u


def _all_x(inst: FamilyInstance) -> Expansion:
    yield inst.x_mask, inst.x_mask


FAMILY_BIEXCEPTIONS: tuple[FamilyBiexception, ...] = (
    FamilyBiexception("(E1(n-1),0)", "E1", 0, "+", None, _fixed("12", "1"), "N+(x)={1,2}"),
    FamilyBiexception("(E3(n-1),0)", "E3", 0, "+", None, _fixed("13", "1"), "N+(x)={1,3}"),
    FamilyBiexception("(E5(n-1),0)", "E5", 0, "+", None, _fixed("12", "1"), "N+(x)={1,2}"),
    FamilyBiexception("(E8(n-1),0)", "E8", 0, "+", None, _subsets_of_x, "N+(x) in X"),
    FamilyBiexception("(E'8(n-1),0)", "E'8", 0, "+", None, _subsets_of_x, "N+(x) in X"),
    FamilyBiexception("(E9(n-1),0)", "E9", 0, "+", None, _subsets_of_x, "N+(x) in X"),
    FamilyBiexception("(E'9(n-1),0)", "E'9", 0, "+", None, _subsets_of_x, "N+(x) in X"),
    FamilyBiexception("(E10(n-1),0)", "E10", 0, "+", None, _subsets_of_x, "N+(x) in X"),
    FamilyBiexception("(E'10(n-1),0)", "E'10", 0, "+", None, _subsets_of_x, "N+(x) in X"),
    FamilyBiexception("(E11(n-1),0)", "E11", 0, "+", None, _fixed("12", "1"), "N+(x)={1,2}"),
    FamilyBiexception("(E13(n-1),0)", "E13", 0, "+", None, _fixed("12", "1"), "N+(x)={1,2}"),
    FamilyBiexception("(E1(n-1),1)", "E1", 1, "-", None, _fixed("123", "X"), "N-(x)={1,2,3}"),
    FamilyBiexception("(E2(5),1)", "E2", 1, "-", 5, _fixed("34", "X"), "N-(x)={3,4}"),
    FamilyBiexception("(E5(5),1)(1)", "E5", 1, "-", 5, _e5_first, "N-(x)={1,2}, T(Y)=3A"),
    FamilyBiexception("(E5(n-1),1)(2)", "E5", 1, "-", None, _e5_second,
                      "N-(x)={1,2}, T(Y) not 3A, X={2}"),
    FamilyBiexception("(E6(5),1)", "E6", 1, "-", 5, _e6, "N-(x)={1,3}, Y={u->v}"),
    FamilyBiexception("(E7(6),1)", "E7", 1, "-", 6, _fixed("23", "1"), "N-(x)={2,3}, T(Y)=3A"),
    FamilyBiexception("(E8(5),1)(1)", "E8", 1, "-", 5, _all_x, "N-(x)=X"),
    FamilyBiexception("(E8(6),1)(2)", "E8", 1, "-", 6, _e8_second,
                      "N-(x)=X, T(X) transitive with minimal vertex u"),
)


def _family_instances(max_order: int) -> Iterator[BiexceptionInstance]:
    for spec in FAMILY_BIEXCEPTIONS:
        for base in spec.bases(max_order - 1):
            n = base.order
            for nbhd, s_mask in spec.expand(base):
                t, x = extend_by_vertex(base.tournament, spec.side, nbhd)
                yield BiexceptionInstance(
                    spec.key.replace("n-1", str(n)),
                    f"{base.family}({n})",
                    spec.i,
                    t,
                    x,
                    derived_path(base.path, spec.i),
                    s_mask,
                    spec.rule,
                )


@lru_cache(maxsize=None)
def biexception_instances(max_order: int = 8) -> tuple[BiexceptionInstance, ...]:
    """Every listed biexception whose extended tournament has order at most
    ``max_order``: finite entries first, then family entries."""
    res = [b for b in _finite() if b.order <= max_order]
    res += list(_family_instances(max_order))
    return tuple(res)
