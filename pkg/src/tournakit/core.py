"""Tournament representation, sections, duals and canonical labeling."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from . import kernels

MAX_ORDER = 64


def _popcount(x: int) -> int:
    return bin(x).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Tournament:
    """A tournament stored as one out-neighbour bitmask per vertex.

    ``out[i] >> j & 1`` is 1 exactly when the arc goes ``i -> j``.  The label
    is informational and ignored by equality.
    """

    order: int
    out: tuple[int, ...]
    label: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        n = self.order
        if n < 1 or n > MAX_ORDER:
            raise ValueError(f"order must be in 1..{MAX_ORDER}, got {n}")
        if len(self.out) != n:
            raise ValueError("need one out-mask per vertex")
        full = (1 << n) - 1
        for i, row in enumerate(self.out):
            if row & ~full or row >> i & 1:
                raise ValueError(f"bad out-mask for vertex {i}")
        for i in range(n):
            for j in range(i + 1, n):
                if (self.out[i] >> j & 1) == (self.out[j] >> i & 1):
                    raise ValueError(f"pair {i},{j} is not oriented exactly once")

    # -- basic queries
    def arc(self, i: int, j: int) -> bool:
        return bool(self.out[i] >> j & 1)

    @property
    def vertices(self) -> range:
        return range(self.order)

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def out_mask(self, v: int) -> int:
        return self.out[v]

    def in_mask(self, v: int) -> int:
        return self.full_mask & ~self.out[v] & ~(1 << v)

    def outdegree(self, v: int) -> int:
        return _popcount(self.out[v])

    def indegree(self, v: int) -> int:
        return self.order - 1 - _popcount(self.out[v])

    @property
    def bits(self) -> str:
        n = self.order
        return "".join(
            "1" if self.out[i] >> j & 1 else "0" for i in range(n) for j in range(i + 1, n)
        )

    def to_text(self) -> str:
        return f"t {self.order} {self.bits}"

    def __str__(self) -> str:
        return self.to_text()

    def relabel(self, perm: Sequence[int]) -> "Tournament":
        """Tournament whose vertex ``p`` is the old vertex ``perm[p]``."""
        n = self.order
        pos = [0] * n
        for p, v in enumerate(perm):
            pos[v] = p
        rows = []
        for p in range(n):
            row = 0
            for v in members(self.out[perm[p]]):
                row |= 1 << pos[v]
            rows.append(row)
        return Tournament(n, tuple(rows))


def make_tournament(order: int, bits: Sequence[int] | str, label: str | None = None) -> Tournament:
    if order < 1 or order > MAX_ORDER:
        raise ValueError(f"order must be in 1..{MAX_ORDER}, got {order}")
    seq = [int(b) for b in bits]
    need = order * (order - 1) // 2
    if len(seq) != need:
        raise ValueError(f"order {order} needs {need} arc bits, got {len(seq)}")
    rows = [0] * order
    k = 0
    for i in range(order):
        for j in range(i + 1, order):
            b = seq[k]
            k += 1
            if b not in (0, 1):
                raise ValueError("arc bits must be 0 or 1")
            if b:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
    return Tournament(order, tuple(rows), label)


def from_arcs(order: int, arcs: Iterable[tuple[int, int]], label: str | None = None) -> Tournament:
    """Build from an explicit arc list; every pair must appear exactly once."""
    rows = [0] * order
    seen = set()
    for a, b in arcs:
        key = (min(a, b), max(a, b))
        if a == b or key in seen:
            raise ValueError(f"bad or repeated pair {a},{b}")
        seen.add(key)
        rows[a] |= 1 << b
    if len(seen) != order * (order - 1) // 2:
        missing = [
            (i, j) for i in range(order) for j in range(i + 1, order) if (i, j) not in seen
        ]
        raise ValueError(f"unoriented pairs: {missing}")
    return Tournament(order, tuple(rows), label)


def transitive(order: int) -> Tournament:
    return make_tournament(order, [1] * (order * (order - 1) // 2), f"TT{order}")


def parse_tournament(text: str) -> Tournament:
    parts = text.split()
    if len(parts) == 2 and parts[0] == "t" and parts[1] == "1":
        parts.append("")
    if len(parts) != 3 or parts[0] != "t":
        raise ValueError(f"expected 't <n> <bits>', got {text!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise ValueError(f"bad order in {text!r}") from None
    if set(parts[2]) - {"0", "1"}:
        raise ValueError("arc bits must be 0 or 1")
    return make_tournament(n, parts[2])


def serialize_tournament(t: Tournament) -> str:
    return t.to_text()


def dual(t: Tournament) -> Tournament:
    return Tournament(t.order, tuple(t.in_mask(v) for v in t.vertices), t.label and f"dual({t.label})")


def induced(t: Tournament, x: int | Iterable[int]) -> Tournament:
    mask = x if isinstance(x, int) else mask_of(x)
    verts = members(mask & t.full_mask)
    if not verts or mask & ~t.full_mask:
        raise ValueError("vertex set must be a nonempty subset of V(T)")
    pos = {v: p for p, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = 0
        for u in members(t.out[v] & mask):
            row |= 1 << pos[u]
        rows.append(row)
    return Tournament(len(verts), tuple(rows))


def delete_vertex(t: Tournament, v: int) -> Tournament:
    return induced(t, t.full_mask & ~(1 << v))


def out_section(t: Tournament, x: int | Iterable[int]) -> int:
    """Vertices reachable from ``x`` by directed paths (``x`` included)."""
    seen = x if isinstance(x, int) else mask_of(x)
    frontier = seen
    while frontier:
        nxt = 0
        for v in members(frontier):
            nxt |= t.out[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def in_section(t: Tournament, x: int | Iterable[int]) -> int:
    return out_section(dual(t), x)


def is_strong(t: Tournament) -> bool:
    return out_section(t, 1) == t.full_mask and in_section(t, 1) == t.full_mask


def is_outgenerator(t: Tournament, v: int) -> bool:
    return out_section(t, 1 << v) == t.full_mask


def is_ingenerator(t: Tournament, v: int) -> bool:
    return in_section(t, 1 << v) == t.full_mask


@lru_cache(maxsize=1 << 16)
def _canon(out: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    code, perm = kernels.canonical(list(out))
    return code, tuple(perm)


def canonical_code(t: Tournament) -> int:
    return _canon(t.out)[0]


def canonical_perm(t: Tournament) -> tuple[int, ...]:
    """``perm[p]`` is the vertex of ``t`` that sits at position ``p`` of the
    canonical relabeling."""
    return _canon(t.out)[1]


def canonical_form(t: Tournament) -> str:
    """Lexicographically least arc-bit string over all relabelings."""
    nbits = t.order * (t.order - 1) // 2
    if nbits == 0:
        return ""
    return format(canonical_code(t), f"0{nbits}b")


def canonical_tournament(t: Tournament) -> Tournament:
    return make_tournament(t.order, canonical_form(t), t.label)


def is_isomorphic(t: Tournament, u: Tournament) -> bool:
    return t.order == u.order and canonical_code(t) == canonical_code(u)


def marked_canonical_code(t: Tournament, marked: Sequence[int]) -> int:
    """Canonical code under relabelings that keep the marked vertices first,
    in the given order.  Two (tournament, marked tuple) pairs get equal codes
    iff some isomorphism carries one marked tuple onto the other."""
    rest = [v for v in t.vertices if v not in marked]
    cells = [[v] for v in marked] + ([rest] if rest else [])
    return kernels.canonical(list(t.out), cells)[0]


def random_tournament(order: int, rng) -> Tournament:
    """Uniform labeled tournament drawn from ``rng`` (a ``random.Random``)."""
    return make_tournament(order, [rng.getrandbits(1) for _ in range(order * (order - 1) // 2)])
