"""Pure-Python search kernels.

Every function works on a *compact* tournament given as a sequence ``out`` of
out-neighbour bitmasks over vertices ``0..k-1``.  Arc directions of a pattern
are encoded as ints: ``1`` means the arc goes forward along the traversal
(``x_i -> x_{i+1}``), ``0`` means it goes backward.

The compiled module ``_ckernels`` exposes the same functions with the same
semantics; :mod:`tournakit.kernels` picks one of the two at import time.
"""

from __future__ import annotations

from typing import Sequence

MAX_DP_ORDER = 24


def _in_masks(out: Sequence[int]) -> list[int]:
    k = len(out)
    full = (1 << k) - 1
    return [full & ~out[v] & ~(1 << v) for v in range(k)]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _suffix_table(out, inn, dirs, end_mask):
    """``h[mask]`` = vertices v of ``mask`` starting a path with vertex set
    exactly ``mask`` that realises the last ``|mask|-1`` arcs of ``dirs`` and
    ends inside ``end_mask``."""
    k = len(out)
    m = len(dirs) + 1
    h = [0] * (1 << k)
    for v in range(k):
        if end_mask >> v & 1:
            h[1 << v] = 1 << v
    for mask in range(1, 1 << k):
        j = bin(mask).count("1")
        if j < 2 or j > m:
            continue
        forward = dirs[m - j]
        acc = 0
        for v in _bits(mask):
            rest = h[mask ^ (1 << v)]
            if rest and (out[v] if forward else inn[v]) & rest:
                acc |= 1 << v
        h[mask] = acc
    return h


def ham_path_starts(out, dirs, start_mask, end_mask):
    """Origins (inside ``start_mask``) of Hamiltonian paths realising ``dirs``
    whose end lies in ``end_mask``."""
    k = len(out)
    if len(dirs) + 1 != k:
        raise ValueError("pattern order must equal tournament order")
    if k == 1:
        return start_mask & end_mask & 1
    h = _suffix_table(out, _in_masks(out), dirs, end_mask)
    return h[(1 << k) - 1] & start_mask


def ham_path_first(out, dirs, start_mask, end_mask):
    """Lexicographically least Hamiltonian witness, or ``None``."""
    k = len(out)
    if len(dirs) + 1 != k:
        raise ValueError("pattern order must equal tournament order")
    if k == 1:
        return [0] if start_mask & end_mask & 1 else None
    inn = _in_masks(out)
    h = _suffix_table(out, inn, dirs, end_mask)
    rem = (1 << k) - 1
    cand = h[rem] & start_mask
    if not cand:
        return None
    seq = []
    for i in range(k):
        v = (cand & -cand).bit_length() - 1
        seq.append(v)
        rem ^= 1 << v
        if i < k - 1:
            cand = (out[v] if dirs[i] else inn[v]) & h[rem]
    return seq


def ham_path_count(out, dirs):
    """Number of vertex sequences realising ``dirs`` as a Hamiltonian path."""
    k = len(out)
    if len(dirs) + 1 != k:
        raise ValueError("pattern order must equal tournament order")
    if k == 1:
        return 1
    inn = _in_masks(out)
    m = k
    cnt = [None] * (1 << k)
    for v in range(k):
        row = [0] * k
        row[v] = 1
        cnt[1 << v] = row
    for mask in range(1, 1 << k):
        j = bin(mask).count("1")
        if j < 2:
            continue
        forward = dirs[m - j]
        row = [0] * k
        for v in _bits(mask):
            prev = cnt[mask ^ (1 << v)]
            nb = (out[v] if forward else inn[v]) & mask
            total = 0
            for u in _bits(nb):
                total += prev[u]
            row[v] = total
        cnt[mask] = row
    return sum(cnt[(1 << k) - 1])


def sub_path_starts(out, dirs, start_mask, end_mask):
    """Origins of paths realising ``dirs`` on *any* ``len(dirs)+1`` vertices."""
    k = len(out)
    m = len(dirs) + 1
    if m > k:
        return 0
    if m == k:
        return ham_path_starts(out, dirs, start_mask, end_mask)
    h = _suffix_table(out, _in_masks(out), dirs, end_mask)
    acc = 0
    for mask in range(1, 1 << k):
        if bin(mask).count("1") == m:
            acc |= h[mask]
    return acc & start_mask


def _rotations(cdirs):
    seen = set()
    res = []
    m = len(cdirs)
    for r in range(m):
        rot = tuple(cdirs[r:]) + tuple(cdirs[:r])
        if rot not in seen:
            seen.add(rot)
            res.append(rot)
    return res


def cycle_exists(out, cdirs):
    """Whether some ``len(cdirs)`` vertices carry a cycle with arc pattern
    ``cdirs`` (arc i joins positions i and i+1 mod m)."""
    k = len(out)
    m = len(cdirs)
    if m > k or m < 3:
        return False
    inn = _in_masks(out)
    for dirs in _rotations(cdirs):
        close = dirs[m - 1]
        f = [0] * (1 << k)
        for s in range(k):
            f[1 << s] = 1 << s
        for mask in range(1, 1 << k):
            ends = f[mask]
            if not ends:
                continue
            j = bin(mask).count("1")
            low = mask & -mask
            s = low.bit_length() - 1
            if j == m:
                if ends & (inn[s] if close else out[s]):
                    return True
                continue
            above = ~((low << 1) - 1)
            d = dirs[j - 1]
            for e in _bits(ends):
                cand = (out[e] if d else inn[e]) & ~mask & above
                for w in _bits(cand):
                    f[mask | (1 << w)] |= 1 << w
    return False


def dfs_first(out, dirs, start_mask, end_mask, close_dir):
    """Lexicographically least sequence realising ``dirs`` (a path on
    ``len(dirs)+1`` vertices, any subset).  With ``close_dir`` in {0, 1} the
    last vertex must also be joined to the first by an arc of that direction
    (cycle witness); ``close_dir = -1`` means no closing arc."""
    k = len(out)
    m = len(dirs) + 1
    if m > k:
        return None
    inn = _in_masks(out)
    seq = [0] * m

    def rec(i, used):
        v = seq[i]
        if i == m - 1:
            if not end_mask >> v & 1:
                return False
            if close_dir == -1:
                return True
            s = seq[0]
            return bool((out[v] if close_dir else inn[v]) >> s & 1)
        cand = (out[v] if dirs[i] else inn[v]) & ~used
        for w in _bits(cand):
            seq[i + 1] = w
            if rec(i + 1, used | (1 << w)):
                return True
        return False

    for s in _bits(start_mask & ((1 << k) - 1)):
        seq[0] = s
        if rec(0, 1 << s):
            return list(seq)
    return None


def canonical(out, partition=None):
    """Lexicographically minimal arc-bit code over all relabelings.

    With ``partition`` (an ordered list of vertex cells) only relabelings that
    place each cell before the next are considered.

    Returns ``(code, perm)`` where ``perm[p]`` is the original vertex placed at
    position ``p``; ``code`` packs the pair bits (0,1),(0,2),...,(k-2,k-1) with
    the first pair as the most significant bit.
    """
    k = len(out)
    if partition is None:
        if k <= 1:
            return 0, list(range(k))
        partition = [range(k)]
    partition = [list(cell) for cell in partition]
    if sorted(v for cell in partition for v in cell) != list(range(k)) or not all(partition):
        raise ValueError("partition must split the vertices into nonempty cells")
    if k == 0:
        return 0, []
    best_rows: list[int] | None = None
    best_perm: list[int] | None = None
    perm: list[int] = []
    rows: list[int] = []

    def refine(cells, c):
        row = 0
        new_cells = []
        for cell in cells:
            lo = [u for u in cell if not out[c] >> u & 1]
            hi = [u for u in cell if out[c] >> u & 1]
            for _ in lo:
                row <<= 1
            for _ in hi:
                row = (row << 1) | 1
            if lo:
                new_cells.append(lo)
            if hi:
                new_cells.append(hi)
        return row, new_cells

    def rec(cells):
        nonlocal best_rows, best_perm
        if not cells:
            if best_rows is None or rows < best_rows:
                best_rows = list(rows)
                best_perm = list(perm)
            return
        first = cells[0]
        options = []
        best_row = None
        for c in first:
            rest = [u for u in first if u != c]
            cand_cells = ([rest] if rest else []) + cells[1:]
            row, new_cells = refine(cand_cells, c)
            if best_row is None or row < best_row:
                best_row = row
                options = [(c, new_cells)]
            elif row == best_row:
                options.append((c, new_cells))
        pos = len(rows)
        for c, new_cells in options:
            # our prefix is never above the incumbent's; prune once the
            # incumbent shares it and wins at this position
            if best_rows is not None and best_row > best_rows[pos] and rows == best_rows[:pos]:
                return
            perm.append(c)
            rows.append(best_row)
            rec(new_cells)
            perm.pop()
            rows.pop()

    rec(partition)
    code = 0
    for p in range(k):
        for q in range(p + 1, k):
            code = (code << 1) | (out[best_perm[p]] >> best_perm[q] & 1)
    return code, best_perm
