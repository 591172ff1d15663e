"""The infinite exception families, materialized at small orders.

An instance is built from the named vertices of the drawing plus the free
subtournaments X (and Y where present).  Vertices are laid out as: named
vertices outside X and Y in increasing label order, then X, then Y.  Named
vertices that live inside X (label 3 in F3/F4, label 2 in F5/F6) are the
first vertex of X.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from ..core import (
    Tournament,
    canonical_code,
    from_arcs,
    is_ingenerator,
    is_isomorphic,
    mask_of,
    members,
)
from ..enumerate import tournaments_of_order
from ..patterns import PathType
from .figures import exception_tournament

MAX_FAMILY_ORDER = 10


@dataclass(frozen=True)
class FamilySpec:
    id: str
    figure: str
    type_template: str  # e.g. "(1,n-2)"
    named: tuple[str, ...]  # labels outside X and Y
    x_label: str | None  # named vertex that belongs to X
    has_y: bool
    s_labels: str  # "X" or a string of labels
    min_x: int
    min_y: int = 0
    min_order: int = 0
    conditions: str = ""

    def path_type(self, n: int) -> PathType:
        return PathType(1, template_blocks(self.type_template, n))


def template_blocks(template: str, n: int) -> tuple[int, ...]:
    out = []
    for item in template.strip("()").split(","):
        item = item.strip()
        m = re.fullmatch(r"n-(\d+)", item)
        out.append(n - int(m.group(1)) if m else int(item))
    if any(b < 1 for b in out):
        raise ValueError(f"type {template} is not defined at order {n}")
    return tuple(out)


FAMILIES: dict[str, FamilySpec] = {
    f.id: f
    for f in [
        FamilySpec("E1", "F1", "(1,n-2)", ("1", "2", "3"), None, False, "123", 1),
        FamilySpec("E2", "F2", "(2,n-3)", ("1", "2", "3", "4"), None, False, "34", 1),
        FamilySpec("E3", "F3", "(1,n-2)", ("1", "2"), "3", False, "13", 2,
                   conditions="N+(3) != {2}; 3 is an ingenerator of T(X)"),
        FamilySpec("E4", "F4", "(2,n-3)", ("1", "2", "4"), "3", False, "14", 2,
                   conditions="N+(3) != {2}; 3 is an ingenerator of T(X)"),
        FamilySpec("E5", "F5", "(1,n-2)", ("1",), "2", True, "12", 1, 2, 5,
                   conditions="n >= 5; |Y| >= 2; 2 is an ingenerator of T(X)"),
        FamilySpec("E6", "F6", "(2,n-3)", ("1", "3"), "2", True, "13", 1, 2,
                   conditions="|Y| >= 2; 2 is an ingenerator of T(X)"),
        FamilySpec("E7", "F7", "(1,1,n-3)", ("1", "2", "3"), None, True, "23", 0, 3,
                   conditions="T(Y) is not a 3-cycle; |Y| >= 3"),
        FamilySpec("E8", "F8", "(n-4,1,1,1)", ("1", "2", "3"), None, False, "X", 2),
        FamilySpec("E'8", "F8", "(n-4,2,1)", ("1", "2", "3"), None, False, "X", 2),
        FamilySpec("E9", "F9", "(n-6,1,1,1,1,1)", tuple("12345"), None, False, "X", 2),
        FamilySpec("E'9", "F9", "(n-6,2,1,1,1)", tuple("12345"), None, False, "X", 2),
        FamilySpec("E10", "F10", "(n-8,1,1,1,1,1,1,1)", tuple("1234567"), None, False, "X", 2),
        FamilySpec("E'10", "F10", "(n-8,2,1,1,1,1,1)", tuple("1234567"), None, False, "X", 2),
        FamilySpec("E11", "F11", "(1,1,n-3)", ("1", "2", "3"), None, False, "12", 2),
        FamilySpec("E12", "F12", "(2,1,n-4)", ("1", "2", "3", "4"), None, False, "14", 2),
        FamilySpec("E13", "F13", "(1,1,n-3)", tuple("12345"), None, False, "12", 2),
        FamilySpec("E14", "F14", "(2,1,n-4)", tuple("123456"), None, False, "16", 2),
    ]
}


@dataclass(frozen=True)
class FamilyInstance:
    family: str
    tournament: Tournament
    path: PathType
    labels: dict[str, int] = field(compare=False)
    x_mask: int = 0
    y_mask: int = 0
    s_mask: int = 0

    @property
    def order(self) -> int:
        return self.tournament.order


def _group_arcs(labels: dict[str, int], x: list[int], y: list[int], family: str):
    """Arcs between named vertices and the blocks X, Y (1-based names)."""
    L = labels
    X, Y = set(x), set(y)

    def grp(tok: str) -> list[int]:
        res = []
        for ch in tok:
            if ch == "X":
                res.extend(sorted(X))
            elif ch == "x":  # X without its named member
                res.extend(sorted(X - {L.get(FAMILIES[family].x_label or "", -1)}))
            elif ch == "Y":
                res.extend(sorted(Y))
            else:
                res.append(L[ch])
        return res

    specs = {
        "F1": "1>2 2>3 3>1 X>123",
        "F2": "1>2 2>34 34>1 4>3 X>1234",
        "F3": "2>1 x>1 1>3 X>2",
        "F4": "2>14 x>14 14>3 X>2 1>4",
        "F5": "X>Y x>1 Y>1 1>2",
        "F6": "3>1 x>13 13>2 Y>13 X>Y",
        "F7": "23>1 1>Y Y>23 3>2",
        "F8": "123>X",
        "F9": "12345>X",
        "F10": "1234567>X",
        "F11": "X>1 1X>2 2>3 3>1X",
        "F12": "X>14 4>1 2>3 3>14X 14X>2",
        "F13": "X>1 1X>2 2>345 3>4 4>5 5>3 345>1X",
        "F14": "X>16 6>1 2>345 3>4 4>5 5>3 345>16X 16X>2",
    }
    arcs = []
    for stmt in specs[FAMILIES[family].figure].split():
        a, b = stmt.split(">")
        for u in grp(a):
            for v in grp(b):
                arcs.append((u, v))
    return arcs


def _check_conditions(spec: FamilySpec, t: Tournament, labels, x: list[int], y: list[int]) -> None:
    n = t.order
    if len(x) < spec.min_x:
        raise ValueError(f"{spec.id}: |X| must be at least {spec.min_x}")
    if len(y) < spec.min_y:
        raise ValueError(f"{spec.id}: |Y| must be at least {spec.min_y}")
    if n < spec.min_order:
        raise ValueError(f"{spec.id}: order must be at least {spec.min_order}")
    template_blocks(spec.type_template, n)
    if spec.id in ("E3", "E4"):
        v3 = labels["3"]
        if t.out[v3] == 1 << labels["2"]:
            raise ValueError(f"{spec.id}: N+(3) must differ from {{2}}")
        tx = _sub(t, x)
        if not is_ingenerator(tx, x.index(v3)):
            raise ValueError(f"{spec.id}: 3 must be an ingenerator of T(X)")
    if spec.id in ("E5", "E6"):
        tx = _sub(t, x)
        if not is_ingenerator(tx, x.index(labels["2"])):
            raise ValueError(f"{spec.id}: 2 must be an ingenerator of T(X)")
    if spec.id == "E7":
        if len(y) == 3 and is_isomorphic(_sub(t, y), exception_tournament("3A")):
            raise ValueError("E7: T(Y) must not be a 3-cycle")


def _sub(t: Tournament, verts: list[int]) -> Tournament:
    from ..core import induced

    return induced(t, mask_of(verts))


def instantiate_family(
    family: str,
    x: Tournament | None = None,
    y: Tournament | None = None,
    x_named: int = 0,
    check: bool = True,
) -> FamilyInstance:
    """Build the family member with the given T(X) and T(Y).

    ``x_named`` selects which vertex of ``x`` plays the named vertex that
    belongs to X (families F3 to F6).  Raises ``ValueError`` when a stated
    condition of the family fails, unless ``check`` is false.
    """
    spec = FAMILIES[family]
    nx = x.order if x is not None else 0
    ny = y.order if y is not None else 0
    if spec.has_y and y is None:
        raise ValueError(f"{family} needs T(Y)")
    if not spec.has_y and y is not None:
        raise ValueError(f"{family} has no Y")
    if family in ("E7",):
        if x is not None:
            raise ValueError("E7 has no X")
    elif x is None:
        raise ValueError(f"{family} needs T(X)")
    labels: dict[str, int] = {}
    for i, name in enumerate(spec.named):
        labels[name] = i
    base = len(spec.named)
    xs = list(range(base, base + nx))
    ys = list(range(base + nx, base + nx + ny))
    arcs = []
    if x is not None:
        # the named member of X goes first
        order_x = [x_named] + [v for v in range(nx) if v != x_named]
        pos = {v: xs[i] for i, v in enumerate(order_x)}
        for v in range(nx):
            for u in members(x.out[v]):
                arcs.append((pos[v], pos[u]))
        if spec.x_label:
            labels[spec.x_label] = xs[0]
    if y is not None:
        for v in range(ny):
            for u in members(y.out[v]):
                arcs.append((ys[v], ys[u]))
    if spec.figure in ("F8", "F9", "F10"):
        core = exception_tournament({"F8": "3A", "F9": "5A", "F10": "7A"}[spec.figure])
        for v in core.vertices:
            for u in members(core.out[v]):
                arcs.append((v, u))
        arcs += _group_arcs(labels, xs, ys, family)
    else:
        arcs += _group_arcs(labels, xs, ys, family)
    n = base + nx + ny
    t = from_arcs(n, arcs, f"F{family[1:]}({n})" if family[0] == "E" else None)
    if check:
        _check_conditions(spec, t, labels, xs, ys)
    if spec.s_labels == "X":
        s_mask = mask_of(xs)
    else:
        s_mask = mask_of(labels[c] for c in spec.s_labels)
    return FamilyInstance(family, t, spec.path_type(n), labels, mask_of(xs), mask_of(ys), s_mask)


def _sizes(spec: FamilySpec, n: int) -> Iterator[tuple[int, int]]:
    rest = n - len(spec.named)
    if spec.id == "E7":
        yield 0, rest
        return
    if not spec.has_y:
        yield rest, 0
        return
    for nx in range(max(1, spec.min_x), rest + 1):
        yield nx, rest - nx


@lru_cache(maxsize=None)
def family_instances(family: str, n: int) -> tuple[FamilyInstance, ...]:
    """All members of a family at order n, one per isomorphism class of the
    whole tournament, in a deterministic order."""
    if n > MAX_FAMILY_ORDER:
        raise ValueError(f"families are materialized up to order {MAX_FAMILY_ORDER}")
    spec = FAMILIES[family]
    seen = set()
    res = []
    for nx, ny in _sizes(spec, n):
        if nx < spec.min_x or ny < spec.min_y or nx + ny + len(spec.named) != n:
            continue
        if spec.id != "E7" and nx == 0:
            continue
        xs = list(tournaments_of_order(nx)) if nx else [None]
        ys = list(tournaments_of_order(ny)) if ny else [None]
        for tx in xs:
            named_choices = range(tx.order) if (tx is not None and spec.x_label) else [0]
            for k in named_choices:
                for ty in ys:
                    try:
                        inst = instantiate_family(family, tx, ty, k)
                    except ValueError:
                        continue
                    c = canonical_code(inst.tournament)
                    if c in seen:
                        continue
                    seen.add(c)
                    res.append(inst)
    return tuple(res)


def all_family_instances(max_order: int, min_order: int = 1) -> Iterator[FamilyInstance]:
    for fid in FAMILIES:
        for n in range(min_order, max_order + 1):
            yield from family_instances(fid, n)
