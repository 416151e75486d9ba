# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the hot search kernels in ``_kernels_py``.

Same contracts, same results; states are packed into C integers and the
memo tables are flat arrays indexed by compressed state bits instead of
dictionaries.  The selector in ``ordkit.kernels`` guards the word-size and
memory limits before calling in here.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

ctypedef unsigned long long u64


cdef inline int _popcount(u64 x):
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef inline u64 _compress(u64 seen, u64 hyp):
    # pack the bits of seen (a subset of hyp) into the low bit positions
    cdef u64 out = 0
    cdef u64 low
    cdef int k = 0
    while hyp:
        low = hyp & (~hyp + 1)
        if seen & low:
            out |= (<u64>1) << k
        hyp ^= low
        k += 1
    return out


cdef struct Ctx:
    u64* members
    int m
    u64 support
    int table_bits          # covers table indexed by masks below 1 << table_bits
    int* cover_count
    int* cover_flat
    long* cover_offset
    signed char** memo


cdef int _rank(Ctx* c, u64 seen, int mi):
    cdef u64 hyp = c.members[mi]
    cdef u64 idx = _compress(seen, hyp)
    cdef signed char cached = c.memo[mi][idx]
    if cached >= 0:
        return cached
    cdef int best = 0
    cdef u64 avail = c.support & ~hyp
    cdef u64 t, need
    cdef long off
    cdef int k, r, nm
    while avail:
        t = avail & (~avail + 1)
        avail ^= t
        need = seen | t
        if c.cover_count != NULL:
            off = c.cover_offset[need]
            for k in range(c.cover_count[need]):
                r = 1 + _rank(c, need, c.cover_flat[off + k])
                if r > best:
                    best = r
        else:
            for nm in range(c.m):
                if need & ~c.members[nm] == 0:
                    r = 1 + _rank(c, need, nm)
                    if r > best:
                        best = r
    c.memo[mi][idx] = <signed char>best
    return best


cdef Ctx* _ctx_new(tuple member_masks, u64 support_mask) except NULL:
    cdef list uniq = []
    cdef set seen_set = set()
    for v in member_masks:
        if v not in seen_set:
            seen_set.add(v)
            uniq.append(v)
    cdef int m = len(uniq)
    cdef Ctx* c = <Ctx*>malloc(sizeof(Ctx))
    if c == NULL:
        raise MemoryError()
    c.m = m
    c.support = support_mask
    c.members = <u64*>malloc((m if m else 1) * sizeof(u64))
    c.memo = <signed char**>malloc((m if m else 1) * sizeof(signed char*))
    cdef int i
    cdef long size
    for i in range(m):
        c.members[i] = <u64>(<object>uniq[i])
        c.memo[i] = NULL
    for i in range(m):
        size = (<long>1) << _popcount(c.members[i])
        c.memo[i] = <signed char*>malloc(size)
        memset(c.memo[i], -1, size)
    cdef int s_bits = 0
    cdef u64 tmp = support_mask
    while tmp:
        s_bits += 1
        tmp >>= 1
    c.cover_count = NULL
    c.cover_flat = NULL
    c.cover_offset = NULL
    c.table_bits = s_bits
    cdef long masks_n, mask
    cdef long total, pos
    if s_bits <= 16:
        masks_n = (<long>1) << s_bits
        c.cover_count = <int*>malloc(masks_n * sizeof(int))
        c.cover_offset = <long*>malloc(masks_n * sizeof(long))
        total = 0
        for mask in range(masks_n):
            c.cover_offset[mask] = total
            pos = 0
            for i in range(m):
                if (<u64>mask) & ~c.members[i] == 0:
                    pos += 1
            c.cover_count[mask] = <int>pos
            total += pos
        c.cover_flat = <int*>malloc((total if total else 1) * sizeof(int))
        for mask in range(masks_n):
            pos = c.cover_offset[mask]
            for i in range(m):
                if (<u64>mask) & ~c.members[i] == 0:
                    c.cover_flat[pos] = i
                    pos += 1
    return c


cdef void _ctx_free(Ctx* c):
    cdef int i
    if c == NULL:
        return
    for i in range(c.m):
        if c.memo[i] != NULL:
            free(c.memo[i])
    free(c.memo)
    free(c.members)
    if c.cover_count != NULL:
        free(c.cover_count)
        free(c.cover_flat)
        free(c.cover_offset)
    free(c)


cpdef int production_rank(tuple member_masks, object support_mask_obj):
    cdef u64 support_mask = <u64>support_mask_obj
    cdef Ctx* c = _ctx_new(member_masks, support_mask)
    cdef int best = 0, r
    cdef u64 bits, t
    cdef int mi
    try:
        for mi in range(c.m):
            bits = c.members[mi]
            while bits:
                t = bits & (~bits + 1)
                bits ^= t
                r = 1 + _rank(c, t, mi)
                if r > best:
                    best = r
        return best
    finally:
        _ctx_free(c)


cpdef int production_state_rank(
    tuple member_masks, object support_mask_obj, object seen_obj, object hyp_obj
):
    cdef u64 support_mask = <u64>support_mask_obj
    cdef u64 seen = <u64>seen_obj
    cdef u64 hyp = <u64>hyp_obj
    cdef Ctx* c = _ctx_new(member_masks, support_mask)
    cdef int mi = -1, i
    try:
        for i in range(c.m):
            if c.members[i] == hyp:
                mi = i
                break
        if mi < 0:
            raise ValueError("hypothesis mask is not a member of the system")
        return _rank(c, seen, mi)
    finally:
        _ctx_free(c)


cdef int _brank(u64* ups, int n, u64 full, signed char* memo, u64 forbidden):
    cdef signed char cached = memo[forbidden]
    if cached >= 0:
        return cached
    cdef int best = 0, r, ai
    cdef u64 avail = full & ~forbidden
    cdef u64 a
    while avail:
        a = avail & (~avail + 1)
        avail ^= a
        ai = _popcount(a - 1)
        r = 1 + _brank(ups, n, full, memo, forbidden | ups[ai])
        if r > best:
            best = r
    memo[forbidden] = <signed char>best
    return best


cpdef int bad_sequence_rank(tuple up_masks):
    cdef int n = len(up_masks)
    if n == 0:
        return 0
    cdef u64 full = ((<u64>1) << n) - 1
    cdef u64* ups = <u64*>malloc(n * sizeof(u64))
    cdef long size = (<long>1) << n
    cdef signed char* memo = <signed char*>malloc(size)
    cdef int i, out
    try:
        for i in range(n):
            ups[i] = <u64>(<object>up_masks[i])
        memset(memo, -1, size)
        out = _brank(ups, n, full, memo, 0)
        return out
    finally:
        free(ups)
        free(memo)


cdef bint _clique(u64* adjc, u64 cand, int size):
    if size == 0:
        return True
    if _popcount(cand) < size:
        return False
    cdef u64 v
    cdef int vi
    while cand:
        v = cand & (~cand + 1)
        cand ^= v
        vi = _popcount(v - 1)
        if _clique(adjc, cand & adjc[vi], size - 1):
            return True
    return False


cdef bint _rdfs(
    int e, int m, int* ei, int* ej,
    u64* adj0, u64* adj1, signed char* colors,
    int need0, int need1, bint sym,
):
    if e == m:
        return True
    cdef int i = ei[e]
    cdef int j = ej[e]
    cdef int c, need
    cdef u64* adjc
    cdef int last = 0 if (e == 0 and sym) else 1
    for c in range(last + 1):
        adjc = adj0 if c == 0 else adj1
        need = need0 if c == 0 else need1
        if not _clique(adjc, adjc[i] & adjc[j], need):
            colors[e] = <signed char>c
            adjc[i] |= (<u64>1) << j
            adjc[j] |= (<u64>1) << i
            if _rdfs(e + 1, m, ei, ej, adj0, adj1, colors, need0, need1, sym):
                return True
            adjc[i] &= ~((<u64>1) << j)
            adjc[j] &= ~((<u64>1) << i)
    return False


def ramsey_search(int l1, int l2, int n):
    if l1 < 1 or l2 < 1 or n < 1:
        raise ValueError("clique sizes and vertex count must be positive")
    if l1 == 1 or l2 == 1:
        return None
    cdef int m = n * (n - 1) // 2
    cdef int* ei = <int*>malloc((m if m else 1) * sizeof(int))
    cdef int* ej = <int*>malloc((m if m else 1) * sizeof(int))
    cdef u64* adj0 = <u64*>malloc(n * sizeof(u64))
    cdef u64* adj1 = <u64*>malloc(n * sizeof(u64))
    cdef signed char* colors = <signed char*>malloc(m if m else 1)
    cdef int e = 0, i, j
    cdef bint found
    try:
        for j in range(n):
            for i in range(j):
                ei[e] = i
                ej[e] = j
                e += 1
        for i in range(n):
            adj0[i] = 0
            adj1[i] = 0
        found = _rdfs(0, m, ei, ej, adj0, adj1, colors, l1 - 2, l2 - 2, l1 == l2)
        if not found:
            return None
        return [colors[k] for k in range(m)]
    finally:
        free(ei)
        free(ej)
        free(adj0)
        free(adj1)
        free(colors)
