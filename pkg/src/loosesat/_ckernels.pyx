# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``.

Same signatures and results; the inner loops run without the GIL so callers
may fan out over threads.
"""

from libc.stdlib cimport malloc, calloc, free


cdef struct Graph:
    int n
    int m
    int *E          # 3*m vertex ids
    int *inc_start  # n+1
    int *inc        # 3*m edge ids
    int *pair_start # n*n+1, key a*n+b with a<b
    int *pair_edge  # 3*m edge ids, ascending per pair


cdef int _load(Graph *g, int n, object edges) except -1:
    cdef int m = len(edges)
    cdef int i, a, b, c, v, key
    cdef int *fill
    g.n = n
    g.m = m
    g.E = <int *> malloc((3 * m + 1) * sizeof(int))
    g.inc_start = <int *> calloc(n + 1, sizeof(int))
    g.inc = <int *> malloc((3 * m + 1) * sizeof(int))
    g.pair_start = <int *> calloc(<size_t> n * n + 1, sizeof(int))
    g.pair_edge = <int *> malloc((3 * m + 1) * sizeof(int))
    if not (g.E and g.inc_start and g.inc and g.pair_start and g.pair_edge):
        _release(g)
        raise MemoryError()
    for i in range(m):
        a, b, c = edges[i]
        g.E[3 * i] = a
        g.E[3 * i + 1] = b
        g.E[3 * i + 2] = c
        g.inc_start[a + 1] += 1
        g.inc_start[b + 1] += 1
        g.inc_start[c + 1] += 1
        g.pair_start[a * n + b + 1] += 1
        g.pair_start[a * n + c + 1] += 1
        g.pair_start[b * n + c + 1] += 1
    for v in range(n):
        g.inc_start[v + 1] += g.inc_start[v]
    for key in range(n * n):
        g.pair_start[key + 1] += g.pair_start[key]
    fill = <int *> calloc(<size_t> n * n + 1, sizeof(int))
    if not fill:
        _release(g)
        raise MemoryError()
    for i in range(m):
        a = g.E[3 * i]
        b = g.E[3 * i + 1]
        c = g.E[3 * i + 2]
        g.inc[g.inc_start[a] + fill[a]] = i
        fill[a] += 1
        g.inc[g.inc_start[b] + fill[b]] = i
        fill[b] += 1
        g.inc[g.inc_start[c] + fill[c]] = i
        fill[c] += 1
    for key in range(n):
        fill[key] = 0
    for i in range(m):
        a = g.E[3 * i]
        b = g.E[3 * i + 1]
        c = g.E[3 * i + 2]
        key = a * n + b
        g.pair_edge[g.pair_start[key] + fill[key]] = i
        fill[key] += 1
        key = a * n + c
        g.pair_edge[g.pair_start[key] + fill[key]] = i
        fill[key] += 1
        key = b * n + c
        g.pair_edge[g.pair_start[key] + fill[key]] = i
        fill[key] += 1
    free(fill)
    return 0


cdef void _release(Graph *g) noexcept:
    free(g.E)
    free(g.inc_start)
    free(g.inc)
    free(g.pair_start)
    free(g.pair_edge)
    g.E = NULL
    g.inc_start = NULL
    g.inc = NULL
    g.pair_start = NULL
    g.pair_edge = NULL


cdef inline void _others(Graph *g, int e, int z, int *x, int *y) noexcept nogil:
    cdef int a = g.E[3 * e], b = g.E[3 * e + 1], c = g.E[3 * e + 2]
    if a == z:
        x[0] = b; y[0] = c
    elif b == z:
        x[0] = a; y[0] = c
    else:
        x[0] = a; y[0] = b


cdef inline void _meet(int *cnt, int *bv, int key, int z, int p2, int q2) noexcept nogil:
    # intersect the block of pair `key` with the link vertex set {z, p2, q2}
    cdef int k, j, w, keep
    if cnt[key] < 0:
        cnt[key] = 3
        bv[3 * key] = z
        bv[3 * key + 1] = p2
        bv[3 * key + 2] = q2
        return
    keep = 0
    for k in range(cnt[key]):
        w = bv[3 * key + k]
        if w == z or w == p2 or w == q2:
            bv[3 * key + keep] = w
            keep += 1
    cnt[key] = keep


cdef inline bint _blocks(int *cnt, int *bv, int n, int p, int q, int w) noexcept nogil:
    cdef int key, k
    if p < q:
        key = p * n + q
    else:
        key = q * n + p
    if cnt[key] < 0:
        return True
    for k in range(cnt[key]):
        if bv[3 * key + k] == w:
            return True
    return False


cdef int _scan(Graph *g, int lo, int hi, int *out) noexcept nogil:
    cdef int n = g.n
    cdef int z, i, j, s, t, f0, f1, g0, g1, p, p2, q, q2, key, a, b, c, k, ncand, tmp
    cdef int cand[3]
    cdef int *cnt = <int *> malloc((<size_t> n * n + 1) * sizeof(int))
    cdef int *bv = <int *> malloc((<size_t> 3 * n * n + 1) * sizeof(int))
    cdef int *mark = <int *> calloc(n + 1, sizeof(int))
    cdef int stamp = 0
    cdef int found = 0
    if cnt == NULL or bv == NULL or mark == NULL:
        free(cnt); free(bv); free(mark)
        return -1
    for key in range(n * n):
        cnt[key] = -1
    for z in range(n):
        for s in range(g.inc_start[z], g.inc_start[z + 1]):
            _others(g, g.inc[s], z, &f0, &f1)
            for t in range(s + 1, g.inc_start[z + 1]):
                _others(g, g.inc[t], z, &g0, &g1)
                if f0 == g0 or f0 == g1 or f1 == g0 or f1 == g1:
                    continue
                for i in range(2):
                    if i == 0:
                        p = f0; p2 = f1
                    else:
                        p = f1; p2 = f0
                    for j in range(2):
                        if j == 0:
                            q = g0; q2 = g1
                        else:
                            q = g1; q2 = g0
                        if p < q:
                            key = p * n + q
                        else:
                            key = q * n + p
                        _meet(cnt, bv, key, z, p2, q2)
    if hi > n:
        hi = n
    for a in range(lo, hi):
        for b in range(a + 1, n):
            stamp += 1
            key = a * n + b
            for s in range(g.pair_start[key], g.pair_start[key + 1]):
                t = g.pair_edge[s]
                mark[g.E[3 * t + 2]] = stamp
            if cnt[key] < 0:
                for c in range(b + 1, n):
                    if mark[c] == stamp:
                        continue
                    if _blocks(cnt, bv, n, a, c, b) and _blocks(cnt, bv, n, b, c, a):
                        out[0] = a; out[1] = b; out[2] = c
                        found = 1
                        break
            else:
                ncand = 0
                for k in range(cnt[key]):
                    c = bv[3 * key + k]
                    if c > b and mark[c] != stamp:
                        cand[ncand] = c
                        ncand += 1
                # tiny insertion sort
                for i in range(1, ncand):
                    tmp = cand[i]
                    j = i - 1
                    while j >= 0 and cand[j] > tmp:
                        cand[j + 1] = cand[j]
                        j -= 1
                    cand[j + 1] = tmp
                for k in range(ncand):
                    c = cand[k]
                    if _blocks(cnt, bv, n, a, c, b) and _blocks(cnt, bv, n, b, c, a):
                        out[0] = a; out[1] = b; out[2] = c
                        found = 1
                        break
            if found:
                break
        if found:
            break
    free(cnt)
    free(bv)
    free(mark)
    return found


def first_uncovered(int n, edges, int lo=0, hi=None):
    """Least non-edge ``(a, b, c)`` with ``lo <= a < hi`` whose insertion creates
    no loose triangle, or None."""
    cdef Graph g
    cdef int out[3]
    cdef int res
    cdef int h = n if hi is None else hi
    if n < 3:
        return None
    _load(&g, n, edges)
    with nogil:
        res = _scan(&g, lo, h, out)
    _release(&g)
    if res < 0:
        raise MemoryError()
    if res == 0:
        return None
    return (out[0], out[1], out[2])


cdef int _triangle(Graph *g, int *out) noexcept nogil:
    cdef int n = g.n, m = g.m
    cdef int i, j, k, s, x, y, common, z, p, q, r, key, best, pi, qi
    cdef int *e
    cdef int *f
    cdef int *h
    for i in range(m):
        e = g.E + 3 * i
        for j in range(i + 1, m):
            f = g.E + 3 * j
            common = 0
            z = -1
            for x in range(3):
                for y in range(3):
                    if e[x] == f[y]:
                        common += 1
                        z = e[x]
            if common != 1:
                continue
            best = -1
            for pi in range(3):
                p = e[pi]
                if p == z:
                    continue
                for qi in range(3):
                    q = f[qi]
                    if q == z:
                        continue
                    if p < q:
                        key = p * n + q
                    else:
                        key = q * n + p
                    for s in range(g.pair_start[key], g.pair_start[key + 1]):
                        k = g.pair_edge[s]
                        if k <= j or (best >= 0 and k >= best):
                            continue
                        h = g.E + 3 * k
                        r = h[0] + h[1] + h[2] - p - q
                        if r == e[0] or r == e[1] or r == e[2] or r == f[0] or r == f[1] or r == f[2]:
                            continue
                        best = k
            if best >= 0:
                out[0] = i; out[1] = j; out[2] = best
                return 1
    return 0


def find_triangle(int n, edges):
    """Lexicographically least edge-index triple forming a loose triangle, or None."""
    cdef Graph g
    cdef int out[3]
    cdef int res
    if len(edges) < 3:
        return None
    _load(&g, n, edges)
    with nogil:
        res = _triangle(&g, out)
    _release(&g)
    if res == 0:
        return None
    return (out[0], out[1], out[2])
