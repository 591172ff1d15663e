# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the search kernels in ``_pykernels``."""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport uint64_t, int64_t

MAX_DP_ORDER = 24

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popc(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)


cdef int load(object out, uint64_t* o, uint64_t* inn) except -1:
    cdef int k = len(out)
    cdef int v
    cdef uint64_t full
    if k > 64:
        raise ValueError("order above 64")
    full = (<uint64_t>1 << k) - 1 if k < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    for v in range(k):
        o[v] = <uint64_t>out[v]
        inn[v] = full & ~o[v] & ~(<uint64_t>1 << v)
    return k


cdef int load_dirs(object dirs, int* d) except -1:
    cdef int i
    for i in range(len(dirs)):
        d[i] = 1 if dirs[i] else 0
    return len(dirs)


cdef uint64_t* suffix_table(int k, uint64_t* o, uint64_t* inn, int* d, int m,
                            uint64_t end_mask) except NULL:
    cdef size_t size = (<size_t>1) << k
    cdef uint64_t* h = <uint64_t*>calloc(size, sizeof(uint64_t))
    cdef uint64_t mask, rest, acc, bits, low
    cdef int v, j, fwd
    if h == NULL:
        raise MemoryError()
    with nogil:
        for v in range(k):
            if end_mask >> v & 1:
                h[(<uint64_t>1) << v] = (<uint64_t>1) << v
        for mask in range(1, size):
            j = popc(mask)
            if j < 2 or j > m:
                continue
            fwd = d[m - j]
            acc = 0
            bits = mask
            while bits:
                low = bits & (~bits + 1)
                v = ctz(bits)
                bits ^= low
                rest = h[mask ^ low]
                if rest and ((o[v] if fwd else inn[v]) & rest):
                    acc |= low
            h[mask] = acc
    return h


def _check(k):
    if k > MAX_DP_ORDER:
        raise ValueError(f"DP kernels are limited to order {MAX_DP_ORDER}")


def ham_path_starts(out, dirs, start_mask, end_mask):
    cdef uint64_t o[64]
    cdef uint64_t inn[64]
    cdef int d[64]
    cdef int k = load(out, o, inn)
    cdef int m = load_dirs(dirs, d) + 1
    cdef uint64_t* h
    cdef uint64_t r
    if m != k:
        raise ValueError("pattern order must equal tournament order")
    if k == 1:
        return start_mask & end_mask & 1
    _check(k)
    h = suffix_table(k, o, inn, d, m, <uint64_t>end_mask)
    r = h[((<uint64_t>1) << k) - 1]
    free(h)
    return int(r) & start_mask


def ham_path_first(out, dirs, start_mask, end_mask):
    cdef uint64_t o[64]
    cdef uint64_t inn[64]
    cdef int d[64]
    cdef int k = load(out, o, inn)
    cdef int m = load_dirs(dirs, d) + 1
    cdef uint64_t* h
    cdef uint64_t rem, cand
    cdef int i, v
    if m != k:
        raise ValueError("pattern order must equal tournament order")
    if k == 1:
        return [0] if start_mask & end_mask & 1 else None
    _check(k)
    h = suffix_table(k, o, inn, d, m, <uint64_t>end_mask)
    rem = ((<uint64_t>1) << k) - 1
    cand = h[rem] & <uint64_t>start_mask
    if not cand:
        free(h)
        return None
    seq = []
    for i in range(k):
        v = ctz(cand)
        seq.append(v)
        rem ^= (<uint64_t>1) << v
        if i < k - 1:
            cand = (o[v] if d[i] else inn[v]) & h[rem]
    free(h)
    return seq


def ham_path_count(out, dirs):
    cdef uint64_t o[64]
    cdef uint64_t inn[64]
    cdef int d[64]
    cdef int k = load(out, o, inn)
    cdef int m = load_dirs(dirs, d) + 1
    cdef size_t size
    cdef uint64_t* cnt
    cdef uint64_t mask, nb, total, low, full
    cdef int v, u, j, fwd
    if m != k:
        raise ValueError("pattern order must equal tournament order")
    if k == 1:
        return 1
    if k > 20:
        raise ValueError("counting is limited to order 20")
    size = (<size_t>1) << k
    cnt = <uint64_t*>calloc(size * k, sizeof(uint64_t))
    if cnt == NULL:
        raise MemoryError()
    with nogil:
        for v in range(k):
            cnt[((<size_t>1) << v) * k + v] = 1
        for mask in range(1, size):
            j = popc(mask)
            if j < 2:
                continue
            fwd = d[m - j]
            nb = mask
            while nb:
                v = ctz(nb)
                nb &= nb - 1
                total = 0
                low = (o[v] if fwd else inn[v]) & mask
                while low:
                    u = ctz(low)
                    low &= low - 1
                    total += cnt[(mask ^ ((<uint64_t>1) << v)) * k + u]
                cnt[mask * k + v] = total
    full = size - 1
    res = 0
    for v in range(k):
        res += cnt[full * k + v]
    free(cnt)
    return res


def sub_path_starts(out, dirs, start_mask, end_mask):
    cdef uint64_t o[64]
    cdef uint64_t inn[64]
    cdef int d[64]
    cdef int k = load(out, o, inn)
    cdef int m = load_dirs(dirs, d) + 1
    cdef uint64_t* h
    cdef uint64_t acc = 0, mask
    cdef size_t size
    if m > k:
        return 0
    if m == k:
        return ham_path_starts(out, dirs, start_mask, end_mask)
    _check(k)
    h = suffix_table(k, o, inn, d, m, <uint64_t>end_mask)
    size = (<size_t>1) << k
    for mask in range(1, size):
        if popc(mask) == m:
            acc |= h[mask]
    free(h)
    return int(acc) & start_mask


def cycle_exists(out, cdirs):
    cdef uint64_t o[64]
    cdef uint64_t inn[64]
    cdef int dd[64]
    cdef int rot[64]
    cdef int k = load(out, o, inn)
    cdef int m = load_dirs(cdirs, dd)
    cdef int r, q, i, j, s, e, w, dup, found = 0, close, dir_
    cdef size_t size
    cdef uint64_t* f
    cdef uint64_t mask, ends, low, above, cand
    if m > k or m < 3:
        return False
    _check(k)
    size = (<size_t>1) << k
    f = <uint64_t*>malloc(size * sizeof(uint64_t))
    if f == NULL:
        raise MemoryError()
    with nogil:
        for r in range(m):
            # skip rotations equal to an earlier one
            dup = 0
            for q in range(r):
                dup = 1
                for i in range(m):
                    if dd[(q + i) % m] != dd[(r + i) % m]:
                        dup = 0
                        break
                if dup:
                    break
            if dup:
                continue
            for i in range(m):
                rot[i] = dd[(r + i) % m]
            close = rot[m - 1]
            for mask in range(size):
                f[mask] = 0
            for s in range(k):
                f[(<uint64_t>1) << s] = (<uint64_t>1) << s
            for mask in range(1, size):
                ends = f[mask]
                if not ends:
                    continue
                j = popc(mask)
                low = mask & (~mask + 1)
                s = ctz(mask)
                if j == m:
                    if ends & (inn[s] if close else o[s]):
                        found = 1
                        break
                    continue
                above = ~((low << 1) - 1)
                dir_ = rot[j - 1]
                while ends:
                    e = ctz(ends)
                    ends &= ends - 1
                    cand = (o[e] if dir_ else inn[e]) & ~mask & above
                    while cand:
                        w = ctz(cand)
                        cand &= cand - 1
                        f[mask | ((<uint64_t>1) << w)] |= (<uint64_t>1) << w
            if found:
                break
    free(f)
    return bool(found)


cdef int dfs_rec(int i, int m, uint64_t used, int* seq, int* d, uint64_t* o, uint64_t* inn,
                 uint64_t end_mask, int close_dir) noexcept nogil:
    cdef int v = seq[i], w, s
    cdef uint64_t cand
    if i == m - 1:
        if not (end_mask >> v & 1):
            return 0
        if close_dir == -1:
            return 1
        s = seq[0]
        return 1 if ((o[v] if close_dir else inn[v]) >> s & 1) else 0
    cand = (o[v] if d[i] else inn[v]) & ~used
    while cand:
        w = ctz(cand)
        cand &= cand - 1
        seq[i + 1] = w
        if dfs_rec(i + 1, m, used | ((<uint64_t>1) << w), seq, d, o, inn, end_mask, close_dir):
            return 1
    return 0


def dfs_first(out, dirs, start_mask, end_mask, close_dir):
    cdef uint64_t o[64]
    cdef uint64_t inn[64]
    cdef int d[64]
    cdef int seq[64]
    cdef int k = load(out, o, inn)
    cdef int m = load_dirs(dirs, d) + 1
    cdef uint64_t full = ((<uint64_t>1) << k) - 1 if k < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    cdef uint64_t starts = (<uint64_t>start_mask) & full
    cdef uint64_t em = <uint64_t>end_mask
    cdef int cd = close_dir, s, ok = 0
    if m > k:
        return None
    with nogil:
        while starts:
            s = ctz(starts)
            starts &= starts - 1
            seq[0] = s
            if dfs_rec(0, m, (<uint64_t>1) << s, seq, d, o, inn, em, cd):
                ok = 1
                break
    if not ok:
        return None
    return [seq[i] for i in range(m)]


# -- canonical labeling

cdef struct Canon:
    int k
    uint64_t* o
    uint64_t best_rows[64]
    int best_perm[64]
    int have_best
    uint64_t rows[64]
    int perm[64]


cdef void canon_rec(Canon* st, int* cells, int* starts, int ncells, int pos) noexcept nogil:
    # cells: vertices laid out cell after cell; starts[c]..starts[c+1]
    cdef int k = st.k
    cdef int nverts = k - pos
    cdef int first_len, ci, c, i, j, u, cs, ce, nlo, idx, opt_count = 0
    cdef uint64_t row, best_row = 0
    cdef int have_row = 0
    cdef int opts[64]
    cdef int new_cells[64]
    cdef int new_starts[65]
    cdef int new_n
    cdef uint64_t oc
    if ncells == 0:
        # j = 1 when the current rows beat the incumbent
        j = 1 - st.have_best
        if st.have_best:
            for i in range(k):
                if st.rows[i] != st.best_rows[i]:
                    j = 1 if st.rows[i] < st.best_rows[i] else 0
                    break
        if j:
            for i in range(k):
                st.best_rows[i] = st.rows[i]
                st.best_perm[i] = st.perm[i]
            st.have_best = 1
        return
    first_len = starts[1] - starts[0]
    # pass 1: minimal row among candidates of the first cell
    for ci in range(first_len):
        c = cells[starts[0] + ci]
        oc = st.o[c]
        row = 0
        for idx in range(ncells):
            cs = starts[idx]
            ce = starts[idx + 1]
            nlo = 0
            for j in range(cs, ce):
                u = cells[j]
                if u == c:
                    continue
                if not (oc >> u & 1):
                    nlo += 1
            for j in range(cs, ce):
                u = cells[j]
                if u == c:
                    continue
                row <<= 1
            # ones fill the low (ce - cs - nlo - [c in cell]) positions
            i = (ce - cs) - nlo - (1 if idx == 0 else 0)
            row |= ((<uint64_t>1) << i) - 1
        if not have_row or row < best_row:
            best_row = row
            have_row = 1
            opt_count = 0
            opts[opt_count] = c
            opt_count += 1
        elif row == best_row:
            opts[opt_count] = c
            opt_count += 1
    for ci in range(opt_count):
        if st.have_best and best_row > st.best_rows[pos]:
            j = 1
            for i in range(pos):
                if st.rows[i] != st.best_rows[i]:
                    j = 0
                    break
            if j:
                return
        c = opts[ci]
        oc = st.o[c]
        new_n = 0
        i = 0
        for idx in range(ncells):
            cs = starts[idx]
            ce = starts[idx + 1]
            j = i
            for u in range(cs, ce):
                if cells[u] != c and not (oc >> cells[u] & 1):
                    new_cells[i] = cells[u]
                    i += 1
            if i > j:
                new_starts[new_n] = j
                new_n += 1
            j = i
            for u in range(cs, ce):
                if cells[u] != c and (oc >> cells[u] & 1):
                    new_cells[i] = cells[u]
                    i += 1
            if i > j:
                new_starts[new_n] = j
                new_n += 1
        new_starts[new_n] = i
        st.perm[pos] = c
        st.rows[pos] = best_row
        canon_rec(st, new_cells, new_starts, new_n, pos + 1)


def canonical(out, partition=None):
    cdef Canon st
    cdef uint64_t o[64]
    cdef uint64_t inn[64]
    cdef int cells[64]
    cdef int starts[65]
    cdef int k = load(out, o, inn)
    cdef int i, p, q, ncells
    if partition is None:
        if k <= 1:
            return 0, list(range(k))
        partition = [range(k)]
    flat = [v for cell in partition for v in cell]
    if sorted(flat) != list(range(k)) or any(len(cell) == 0 for cell in partition):
        raise ValueError("partition must split the vertices into nonempty cells")
    if k == 0:
        return 0, []
    st.k = k
    st.o = o
    st.have_best = 0
    for i in range(k):
        cells[i] = flat[i]
    ncells = 0
    i = 0
    for cell in partition:
        starts[ncells] = i
        i += len(cell)
        ncells += 1
    starts[ncells] = k
    with nogil:
        canon_rec(&st, cells, starts, ncells, 0)
    code = 0
    for p in range(k):
        for q in range(p + 1, k):
            code = (code << 1) | <int>((o[st.best_perm[p]] >> st.best_perm[q]) & 1)
    return code, [st.best_perm[i] for i in range(k)]
