"""Embedding search for oriented paths and cycles.

Exact answers come from subset dynamic programming (orders up to
``MAX_DP_ORDER``) or from lexicographic depth-first search.  Witnesses are
always the lexicographically least vertex sequence realising the pattern's
direction string.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from . import kernels as K
from .core import Tournament, dual, mask_of, members
from .patterns import CycleType, PathType

MAX_DP_ORDER = 20
# halves of the split embedder are solved exactly up to this order
EXACT_SPLIT_ORDER = 14
# the randomized path builder hands the last few vertices to the DP kernel
COMPLETION_ORDER = 10

Pattern = Union[PathType, CycleType]


@dataclass(frozen=True)
class Embedding:
    vertices: tuple[int, ...]
    pattern: Pattern

    def labels(self, base: int = 1) -> str:
        """Vertex labels run together (``1324``) when all are single digits,
        space separated otherwise."""
        names = [str(v + base) for v in self.vertices]
        return ("" if all(len(s) == 1 for s in names) else " ").join(names)


def _as_mask(x: int | Iterable[int] | None) -> int | None:
    if x is None or isinstance(x, int):
        return x
    return mask_of(x)


@dataclass(frozen=True)
class SearchConstraints:
    """Masks restricting a path search.  ``required_origin`` limits the first
    vertex, ``forbidden_end`` excludes last vertices and ``required_vertices``
    must all lie on the path."""

    required_origin: int | None = None
    forbidden_end: int = 0
    required_vertices: int = 0

    @classmethod
    def of(
        cls,
        required_origin: int | Iterable[int] | None = None,
        forbidden_end: int | Iterable[int] | None = None,
        required_vertices: int | Iterable[int] | None = None,
    ) -> "SearchConstraints":
        return cls(
            _as_mask(required_origin),
            _as_mask(forbidden_end) or 0,
            _as_mask(required_vertices) or 0,
        )


def _seq_dirs(t: Tournament, seq: Sequence[int], closed: bool) -> list[int]:
    m = len(seq)
    stop = m if closed else m - 1
    return [1 if t.arc(seq[i], seq[(i + 1) % m]) else 0 for i in range(stop)]


def validate_embedding(t: Tournament, pattern: Pattern, seq: Sequence[int]) -> bool:
    """True iff ``seq`` is a path (or cycle) of ``pattern``'s type in ``t``."""
    seq = list(seq)
    if len(seq) != pattern.order or len(set(seq)) != len(seq):
        return False
    if any(not isinstance(v, int) or v < 0 or v >= t.order for v in seq):
        return False
    if isinstance(pattern, PathType):
        return tuple(_seq_dirs(t, seq, False)) == pattern.dirs
    try:
        return CycleType.from_dirs(_seq_dirs(t, seq, True)) == pattern
    except ValueError:
        return False


# -- paths


def _dfs_required(t, dirs, start, end, req):
    m = len(dirs) + 1
    out = t.out
    inn = [t.in_mask(v) for v in t.vertices]
    seq = [0] * m

    def rec(i, used):
        v = seq[i]
        missing = bin(req & ~used).count("1")
        if missing > m - 1 - i:
            return False
        if i == m - 1:
            return bool(end >> v & 1)
        cand = (out[v] if dirs[i] else inn[v]) & ~used
        for w in members(cand):
            seq[i + 1] = w
            if rec(i + 1, used | (1 << w)):
                return True
        return False

    for s in members(start):
        seq[0] = s
        if rec(0, 1 << s):
            return list(seq)
    return None


def find_path_embedding(
    t: Tournament, p: PathType, c: SearchConstraints | None = None
) -> Embedding | None:
    c = c or SearchConstraints()
    n, m = t.order, p.order
    full = t.full_mask
    start = full if c.required_origin is None else c.required_origin & full
    end = full & ~c.forbidden_end
    req = c.required_vertices & full
    if m > n or not start or not end or bin(req).count("1") > m:
        return None
    dirs = list(p.dirs)
    seq = None
    if req and bin(req).count("1") == m:
        sub = members(req)
        pos = {v: i for i, v in enumerate(sub)}
        smask = mask_of(pos[v] for v in members(start & req))
        emask = mask_of(pos[v] for v in members(end & req))
        if not smask or not emask:
            return None
        local = _compact(t, req)
        if m <= MAX_DP_ORDER:
            r = K.ham_path_first(local, dirs, smask, emask)
        else:
            r = K.dfs_first(local, dirs, smask, emask, -1)
        seq = None if r is None else [sub[i] for i in r]
    elif req:
        seq = _dfs_required(t, dirs, start, end, req)
    elif m == n and n <= MAX_DP_ORDER:
        seq = K.ham_path_first(list(t.out), dirs, start, end)
    else:
        seq = K.dfs_first(list(t.out), dirs, start, end, -1)
    return None if seq is None else Embedding(tuple(seq), p)


def origins(t: Tournament, p: PathType, sub: bool = False) -> int:
    """Mask of origins of ``p`` in ``t``.  Hamiltonian unless ``sub`` is set
    (then ``p`` may use any ``p.order`` vertices)."""
    n, m = t.order, p.order
    full = t.full_mask
    if m > n:
        return 0
    if m < n and not sub:
        raise ValueError(f"type {p} has order {m}; pass sub=True for non-spanning origins")
    dirs = list(p.dirs)
    if n <= MAX_DP_ORDER:
        if m == n:
            return K.ham_path_starts(list(t.out), dirs, full, full)
        return K.sub_path_starts(list(t.out), dirs, full, full)
    acc = 0
    for v in t.vertices:
        if K.dfs_first(list(t.out), dirs, 1 << v, full, -1) is not None:
            acc |= 1 << v
    return acc


def origins_with_end(t: Tournament, p: PathType, start_mask: int, end_mask: int) -> int:
    """Origins inside ``start_mask`` of Hamiltonian ``p``-paths ending in ``end_mask``."""
    if p.order != t.order:
        raise ValueError("Hamiltonian type expected")
    return K.ham_path_starts(list(t.out), list(p.dirs), start_mask, end_mask)


def count_path_embeddings(t: Tournament, p: PathType) -> int:
    if p.order != t.order:
        raise ValueError("Hamiltonian type expected")
    if t.order > MAX_DP_ORDER:
        raise ValueError(f"counting is limited to order {MAX_DP_ORDER}")
    return K.ham_path_count(list(t.out), list(p.dirs))


# -- cycles


def contains_cycle(t: Tournament, c: CycleType) -> bool:
    if c.order > t.order:
        return False
    if t.order <= MAX_DP_ORDER:
        return K.cycle_exists(list(t.out), list(c.dirs))
    return find_cycle_embedding(t, c) is not None


def find_cycle_embedding(t: Tournament, c: CycleType) -> Embedding | None:
    n, m = t.order, c.order
    if m > n:
        return None
    dirs = list(c.dirs)
    out = list(t.out)
    if m == n and n <= MAX_DP_ORDER:
        if not K.cycle_exists(out, dirs):
            return None
        for s in t.vertices:
            # closing arc joins the end to s
            end = t.in_mask(s) if dirs[-1] else t.out[s]
            seq = K.ham_path_first(out, dirs[:-1], 1 << s, end)
            if seq is not None:
                return Embedding(tuple(seq), c)
        raise AssertionError("cycle kernels disagree")
    if n <= MAX_DP_ORDER and not K.cycle_exists(out, dirs):
        return None
    seq = K.dfs_first(out, dirs[:-1], t.full_mask, t.full_mask, dirs[-1])
    return None if seq is None else Embedding(tuple(seq), c)


# -- proof-guided embedder


def _compact(t: Tournament | Sequence[int], mask: int) -> list[int]:
    out = t.out if isinstance(t, Tournament) else t
    verts = members(mask)
    pos = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = 0
        for u in members(out[v] & mask):
            row |= 1 << pos[u]
        rows.append(row)
    return rows


def _lift(mask: int, verts: list[int]) -> int:
    r = 0
    for i, v in enumerate(verts):
        if mask >> i & 1:
            r |= 1 << v
    return r


def _restrict(mask: int, verts: list[int]) -> int:
    r = 0
    for i, v in enumerate(verts):
        if mask >> v & 1:
            r |= 1 << i
    return r


class _PathBuilder:
    """Hamiltonian path search on a vertex subset of a tournament, with origin
    and end restrictions.  Small subsets are solved exactly; larger ones by a
    randomized depth-first search that orders candidates by how few onward
    options they keep, and finishes with the exact kernel."""

    def __init__(self, out: Sequence[int], rng: random.Random, budget: int = 20000):
        self.out = list(out)
        self.n = len(out)
        full = (1 << self.n) - 1
        self.inn = [full & ~out[v] & ~(1 << v) for v in range(self.n)]
        self.rng = rng
        self.budget = budget

    def find(self, mask: int, dirs: Sequence[int], start: int, end: int, restarts: int = 6):
        verts = members(mask)
        k = len(verts)
        start &= mask
        end &= mask
        if len(dirs) + 1 != k or not start or not end:
            return None
        if k == 1:
            return verts if start & end else None
        if k <= EXACT_SPLIT_ORDER:
            local = _compact(self.out, mask)
            r = K.ham_path_first(local, list(dirs), _restrict(start, verts), _restrict(end, verts))
            return None if r is None else [verts[i] for i in r]
        for _ in range(restarts):
            r = self._dfs(mask, list(dirs), start, end)
            if r is not None:
                return r
        return None

    def _nb(self, v: int, d: int) -> int:
        return self.out[v] if d else self.inn[v]

    def _complete(self, cur: int, rem: int, dirs: list[int], i: int, end: int):
        """Exact completion: path over ``rem`` realising ``dirs[i+1:]`` whose
        first vertex is joined to ``cur`` by an arc of direction ``dirs[i]``."""
        verts = members(rem)
        local = _compact(self.out, rem)
        sm = _restrict(self._nb(cur, dirs[i]) & rem, verts)
        em = _restrict(end & rem, verts)
        if not sm or not em:
            return None
        r = K.ham_path_first(local, dirs[i + 1:], sm, em)
        return None if r is None else [verts[j] for j in r]

    def _dfs(self, mask: int, dirs: list[int], start: int, end: int):
        m = len(dirs) + 1
        rng = self.rng
        nodes = [0]
        path: list[int] = []

        def order(cands: list[int], rem: int, i: int) -> list[int]:
            # i is the position the candidates would take
            if i + 1 >= m:
                return cands
            d = dirs[i]
            keyed = []
            for w in cands:
                deg = bin(self._nb(w, d) & rem & ~(1 << w)).count("1")
                keyed.append((deg == 0, deg, rng.random(), w))
            keyed.sort()
            return [w for *_, w in keyed]

        def rec(i: int, rem: int) -> bool:
            nodes[0] += 1
            if nodes[0] > self.budget:
                return False
            cur = path[-1]
            left = m - 1 - i
            if left == 0:
                return bool(end >> cur & 1)
            if left <= COMPLETION_ORDER:
                tail = self._complete(cur, rem, dirs, i, end)
                if tail is None:
                    return False
                path.extend(tail)
                return True
            cands = members(self._nb(cur, dirs[i]) & rem)
            for w in order(cands, rem, i + 1):
                path.append(w)
                if rec(i + 1, rem & ~(1 << w)):
                    return True
                path.pop()
                if nodes[0] > self.budget:
                    return False
            return False

        starts = order(members(start), mask, 0)
        for s in starts:
            path[:] = [s]
            if rec(0, mask & ~(1 << s)):
                return list(path)
            if nodes[0] > self.budget:
                return None
        return None


def _rotate(dirs: Sequence[int], r: int) -> list[int]:
    return list(dirs[r:]) + list(dirs[:r])


def _guided_split(out: list[int], dirs: list[int], rng: random.Random):
    n = len(out)
    full = (1 << n) - 1
    inn = [full & ~out[v] & ~(1 << v) for v in range(n)]
    indeg = [bin(x).count("1") for x in inn]
    delta = min(indeg)
    v = indeg.index(delta)
    t1 = inn[v]
    t2 = out[v]
    builder = _PathBuilder(out, rng)
    if delta == 0:
        return None
    rev = [1 - d for d in reversed(dirs)]
    tried = set()
    for base in (dirs, rev):
        for r in range(n):
            # rotated so that a_delta -> v -> a_{delta+2}
            e = _rotate(base, (r - delta) % n)
            if not (e[delta] and e[(delta + 1) % n]):
                continue
            key = tuple(e)
            if key in tried:
                continue
            tried.add(key)
            q1 = e[1:delta]
            q2 = e[delta + 2:]
            for w in members(t1):
                p1 = builder.find(t1, q1, 1 << w, t1)
                if p1 is None:
                    continue
                # arc a_0 - a_1 has direction e[0]
                ends = (inn[w] if e[0] else out[w]) & t2
                p2 = builder.find(t2, q2, t2, ends)
                if p2 is None:
                    continue
                seq = p2[-1:] + p1 + [v] + p2[:-1]
                return seq
    return None


def _guided_remove(out: list[int], dirs: list[int], rng: random.Random):
    """Delete a vertex v of minimum in-degree and look for the remaining path
    in T - v with its ends on the correct sides of v."""
    n = len(out)
    full = (1 << n) - 1
    inn = [full & ~out[v] & ~(1 << v) for v in range(n)]
    v = min(range(n), key=lambda u: (bin(inn[u]).count("1"), u))
    builder = _PathBuilder(out, rng)
    rest = full & ~(1 << v)
    seen = set()
    for r in range(n):
        e = _rotate(dirs, r)
        if tuple(e) in seen:
            continue
        seen.add(tuple(e))
        # v = a_0, path a_1 .. a_{n-1}
        start = out[v] if e[0] else inn[v]
        end = inn[v] if e[-1] else out[v]
        p = builder.find(rest, e[1:-1], start & rest, end & rest)
        if p is not None:
            return [v] + p
    return None


def proof_guided_cycle_embedding(
    t: Tournament, c: CycleType, seed: int = 0
) -> Embedding | None:
    """Hamiltonian cycle search that follows the minimum in-degree split.

    A vertex v of minimum in-degree is placed inside a forward block of ``c``;
    the in-neighbours of v carry the stretch just before v and the
    out-neighbours carry the rest.  The tournament is dualised first when its
    minimum out-degree is smaller.  If the split finds nothing the search
    falls back to deleting v, and finally to the exact search.
    """
    if c.order != t.order:
        raise ValueError("Hamiltonian cycle type expected")
    if c.is_directed:
        raise ValueError("non-directed cycle type expected")
    rng = random.Random(seed)
    n = t.order
    out = list(t.out)
    dirs = list(c.dirs)
    full = t.full_mask
    min_in = min(bin(full & ~r & ~(1 << v)).count("1") for v, r in enumerate(out))
    min_out = min(bin(r).count("1") for r in out)
    if min_in > min_out:
        out = list(dual(t).out)
        dirs = [1 - d for d in dirs]
    seq = _guided_split(out, dirs, rng)
    if seq is None:
        seq = _guided_remove(out, dirs, rng)
    if seq is None:
        if n <= MAX_DP_ORDER:
            emb = find_cycle_embedding(t, c)
            return emb
        seq = K.dfs_first(out, dirs[:-1], full, full, dirs[-1])
    return None if seq is None else Embedding(tuple(seq), c)
