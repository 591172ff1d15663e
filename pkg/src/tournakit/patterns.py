"""Oriented path and cycle types as signed block sequences.

A path of order ``m`` has ``m - 1`` arcs.  Its direction string holds one entry
per arc: ``1`` when the arc points forward along the traversal, ``0`` when it
points backward.  Path types are ``+(b1,...,bs)`` / ``-(b1,...,bs)``; cycle types
are written ``(b1,...,bs)`` and always start with a forward block.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

_PATH_RE = re.compile(r"^\s*([+\-−])\s*\(\s*([0-9\s,]*)\)\s*$")
_CYCLE_RE = re.compile(r"^\s*\(\s*([0-9\s,]*)\)\s*$")


def _parse_blocks(body: str) -> tuple[int, ...]:
    parts = [p.strip() for p in body.split(",")]
    if parts == [""]:
        raise ValueError("empty block list")
    try:
        blocks = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"bad block list {body!r}") from None
    if any(b < 1 for b in blocks):
        raise ValueError("blocks must be positive")
    return blocks


def blocks_of(dirs) -> tuple[int, ...]:
    runs = []
    prev = None
    for d in dirs:
        if d == prev:
            runs[-1] += 1
        else:
            runs.append(1)
            prev = d
    return tuple(runs)


@dataclass(frozen=True, order=True)
class PathType:
    sign: int
    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if not self.blocks or any(b < 1 for b in self.blocks):
            raise ValueError("blocks must be a nonempty list of positive integers")
        object.__setattr__(self, "blocks", tuple(self.blocks))

    @property
    def order(self) -> int:
        return 1 + sum(self.blocks)

    @property
    def is_outpath(self) -> bool:
        return self.sign == 1

    @property
    def dirs(self) -> tuple[int, ...]:
        d = 1 if self.sign == 1 else 0
        out = []
        for b in self.blocks:
            out.extend([d] * b)
            d ^= 1
        return tuple(out)

    @classmethod
    def from_dirs(cls, dirs) -> "PathType":
        dirs = tuple(int(x) for x in dirs)
        if not dirs:
            raise ValueError("a path type needs at least one arc")
        return cls(1 if dirs[0] else -1, blocks_of(dirs))

    def __str__(self) -> str:
        return ("+" if self.sign == 1 else "-") + "(" + ",".join(map(str, self.blocks)) + ")"

    def __repr__(self) -> str:
        return f"PathType({self})"

    def tail(self) -> "PathType":
        """Type of the path with its origin removed."""
        d = self.dirs[1:]
        if not d:
            raise ValueError("path of order 2 has no proper tail type")
        return PathType.from_dirs(d)

    def head(self) -> "PathType":
        """Type of the path with its end removed."""
        d = self.dirs[:-1]
        if not d:
            raise ValueError("path of order 2 has no proper head type")
        return PathType.from_dirs(d)


def parse_path_type(text: str, order: int | None = None) -> PathType:
    m = _PATH_RE.match(text)
    if not m:
        raise ValueError(f"expected +(...) or -(...), got {text!r}")
    p = PathType(1 if m.group(1) == "+" else -1, _parse_blocks(m.group(2)))
    if order is not None and p.order != order:
        raise ValueError(f"type {p} has order {p.order}, expected {order}")
    return p


def dual_type(p: PathType) -> PathType:
    return PathType(-p.sign, p.blocks)


def reverse_type(p: PathType) -> PathType:
    return PathType.from_dirs(tuple(1 - d for d in reversed(p.dirs)))


def _cycle_blocks(dirs: tuple[int, ...]) -> tuple[int, ...] | None:
    """Blocks of a cycle string read from position 0, if position 0 opens a
    forward block; otherwise None."""
    if not dirs[0]:
        return None
    if all(dirs):
        return (len(dirs),)
    if dirs[-1]:
        return None
    return blocks_of(dirs)


def _cycle_orbit(dirs: tuple[int, ...]):
    m = len(dirs)
    rev = tuple(1 - d for d in reversed(dirs))
    for s in (dirs, rev):
        for r in range(m):
            yield s[r:] + s[:r]


def _canonical_blocks(dirs: tuple[int, ...]) -> tuple[int, ...]:
    best = None
    for s in _cycle_orbit(dirs):
        b = _cycle_blocks(s)
        if b is not None and (best is None or b > best):
            best = b
    if best is None:
        raise ValueError("a cycle needs at least one forward arc")
    return best


@dataclass(frozen=True, order=True)
class CycleType:
    """Cycle type in canonical rotation: the lexicographically greatest block
    sequence over rotations opening a forward block and traversal reversal."""

    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        blocks = tuple(self.blocks)
        if not blocks or any(b < 1 for b in blocks):
            raise ValueError("blocks must be a nonempty list of positive integers")
        if len(blocks) > 1 and len(blocks) % 2:
            raise ValueError("a cycle has one block or an even number of blocks")
        if sum(blocks) < 3:
            raise ValueError("a cycle has order at least 3")
        object.__setattr__(self, "blocks", _canonical_blocks(_blocks_to_dirs(blocks, 1)))

    @property
    def order(self) -> int:
        return sum(self.blocks)

    @property
    def is_directed(self) -> bool:
        return len(self.blocks) == 1

    @property
    def dirs(self) -> tuple[int, ...]:
        return _blocks_to_dirs(self.blocks, 1)

    @classmethod
    def from_dirs(cls, dirs) -> "CycleType":
        dirs = tuple(int(x) for x in dirs)
        if len(dirs) < 3:
            raise ValueError("a cycle has order at least 3")
        if not any(dirs):
            dirs = tuple(1 - d for d in dirs)
        return cls(_canonical_blocks(dirs))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.blocks)) + ")"

    def __repr__(self) -> str:
        return f"CycleType({self})"


def _blocks_to_dirs(blocks, start: int) -> tuple[int, ...]:
    d = 1 if start == 1 else 0
    out = []
    for b in blocks:
        out.extend([d] * b)
        d ^= 1
    return tuple(out)


def cycle_canonical(blocks, starting_direction: int = 1) -> CycleType:
    """Canonical cycle type of a raw block list read from a given first
    direction (``+1`` forward, ``-1`` backward)."""
    blocks = tuple(blocks)
    if not blocks or any(b < 1 for b in blocks):
        raise ValueError("blocks must be a nonempty list of positive integers")
    if len(blocks) > 1 and len(blocks) % 2:
        raise ValueError("a cycle has one block or an even number of blocks")
    return CycleType.from_dirs(_blocks_to_dirs(blocks, starting_direction))


def parse_cycle_type(text: str, order: int | None = None) -> CycleType:
    m = _CYCLE_RE.match(text)
    if not m:
        raise ValueError(f"expected (...), got {text!r}")
    c = CycleType(_parse_blocks(m.group(1)))
    if order is not None and c.order != order:
        raise ValueError(f"type {c} has order {c.order}, expected {order}")
    return c


def reverse_cycle_type(c: CycleType) -> CycleType:
    """Type of the dual cycle (every arc reversed).  Reading it backwards shows
    it is also the type met when traversing ``c`` in a dual tournament."""
    return CycleType.from_dirs(tuple(1 - d for d in c.dirs))


def enumerate_path_types(m: int) -> list[PathType]:
    if m < 2:
        raise ValueError("paths have order at least 2")
    res = []
    for sign in (1, -1):
        first = 1 if sign == 1 else 0
        for rest in product((0, 1), repeat=m - 2):
            # rest[i] = 1 means arc i+1 changes direction
            d = [first]
            for flip in rest:
                d.append(d[-1] ^ flip)
            res.append(PathType.from_dirs(d))
    return sorted(set(res), key=lambda p: (-p.sign, p.blocks))


def enumerate_cycle_types(m: int, include_directed: bool = False) -> list[CycleType]:
    if m < 3:
        raise ValueError("cycles have order at least 3")
    seen = set()
    for d in product((0, 1), repeat=m):
        if not any(d):
            continue
        if all(d) and not include_directed:
            continue
        seen.add(CycleType.from_dirs(d))
    return sorted(seen, key=lambda c: (len(c.blocks), c.blocks))
