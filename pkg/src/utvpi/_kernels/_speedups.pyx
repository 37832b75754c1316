# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled graph kernels.

Drop-in replacement for ``pyref``: same functions, same argument and result
conventions, same tie-breaking (heaps order by (key, vertex), the queue in
Bellman-Ford is FIFO), so the two implementations are interchangeable.
"""

from cpython cimport array
from libc.stdlib cimport free, malloc

import array as _array

INF = 1 << 62

cdef long long C_INF = <long long> 1 << 62

cdef array.array _Q_TEMPLATE = _array.array("q", [])


cdef struct MinHeap:
    long long* key
    long long* vtx
    Py_ssize_t size


cdef inline void heap_push(MinHeap* h, long long key, long long vtx) noexcept:
    cdef Py_ssize_t i = h.size
    cdef Py_ssize_t p
    h.size += 1
    while i > 0:
        p = (i - 1) >> 1
        if h.key[p] < key or (h.key[p] == key and h.vtx[p] <= vtx):
            break
        h.key[i] = h.key[p]
        h.vtx[i] = h.vtx[p]
        i = p
    h.key[i] = key
    h.vtx[i] = vtx


cdef inline void heap_pop(MinHeap* h, long long* key, long long* vtx) noexcept:
    key[0] = h.key[0]
    vtx[0] = h.vtx[0]
    h.size -= 1
    cdef long long lk = h.key[h.size]
    cdef long long lv = h.vtx[h.size]
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t c
    while True:
        c = 2 * i + 1
        if c >= h.size:
            break
        if c + 1 < h.size and (
            h.key[c + 1] < h.key[c]
            or (h.key[c + 1] == h.key[c] and h.vtx[c + 1] < h.vtx[c])
        ):
            c += 1
        if h.key[c] < lk or (h.key[c] == lk and h.vtx[c] < lv):
            h.key[i] = h.key[c]
            h.vtx[i] = h.vtx[c]
            i = c
        else:
            break
    h.key[i] = lk
    h.vtx[i] = lv


def bellman_ford(Py_ssize_t n, const long long[::1] out_head,
                 const long long[::1] out_next, const long long[::1] eto,
                 const long long[::1] ewt):
    """See ``pyref.bellman_ford``."""
    cdef array.array out = array.clone(_Q_TEMPLATE, n, zero=True)
    if n == 0:
        return out, None
    cdef long long[::1] dist = out
    cdef long long* parent = <long long*> malloc(n * sizeof(long long))
    cdef long long* pathlen = <long long*> malloc(n * sizeof(long long))
    cdef long long* queue = <long long*> malloc((n + 1) * sizeof(long long))
    cdef char* inqueue = <char*> malloc(n)
    if parent == NULL or pathlen == NULL or queue == NULL or inqueue == NULL:
        free(parent); free(pathlen); free(queue); free(inqueue)
        raise MemoryError()
    cdef Py_ssize_t i, qhead = 0, qtail = 0, qcap = n + 1
    cdef long long u, t, e, du, nd
    cdef object cycle
    try:
        for i in range(n):
            parent[i] = -1
            pathlen[i] = 0
            inqueue[i] = 1
            queue[i] = i
        qtail = n % qcap
        while qhead != qtail:
            u = queue[qhead]
            qhead = (qhead + 1) % qcap
            inqueue[u] = 0
            du = dist[u]
            e = out_head[u]
            while e != -1:
                t = eto[e]
                nd = du + ewt[e]
                if nd < dist[t]:
                    dist[t] = nd
                    parent[t] = u
                    pathlen[t] = pathlen[u] + 1
                    if pathlen[t] >= n:
                        cycle = _walk_cycle(parent, t, n)
                        return None, cycle
                    if not inqueue[t]:
                        inqueue[t] = 1
                        queue[qtail] = t
                        qtail = (qtail + 1) % qcap
                e = out_next[e]
        return out, None
    finally:
        free(parent); free(pathlen); free(queue); free(inqueue)


cdef object _walk_cycle(long long* parent, long long start, Py_ssize_t n):
    cdef long long x = start
    cdef Py_ssize_t i
    for i in range(n):
        x = parent[x]
    loop = [x]
    cdef long long cur = parent[x]
    while cur != x:
        loop.append(cur)
        cur = parent[cur]
    loop.reverse()
    return loop


def dijkstra(Py_ssize_t n, const long long[::1] head,
             const long long[::1] nxt, const long long[::1] other,
             const long long[::1] ewt, const long long[::1] pot,
             long long src, bint backward):
    """See ``pyref.dijkstra``."""
    cdef Py_ssize_t m = ewt.shape[0]
    cdef array.array out = array.clone(_Q_TEMPLATE, n, zero=False)
    cdef long long[::1] dist = out
    cdef MinHeap h
    h.key = <long long*> malloc((m + 2) * sizeof(long long))
    h.vtx = <long long*> malloc((m + 2) * sizeof(long long))
    h.size = 0
    if h.key == NULL or h.vtx == NULL:
        free(h.key); free(h.vtx)
        raise MemoryError()
    cdef Py_ssize_t i
    cdef long long drc, x, y, e, rc, nd, px, psrc, a, b
    try:
        for i in range(n):
            dist[i] = C_INF
        dist[src] = 0
        heap_push(&h, 0, src)
        while h.size > 0:
            heap_pop(&h, &drc, &x)
            if drc != dist[x]:
                continue
            px = pot[x]
            e = head[x]
            while e != -1:
                y = other[e]
                if backward:
                    rc = pot[y] + ewt[e] - px
                else:
                    rc = px + ewt[e] - pot[y]
                if rc < 0:
                    a, b = (y, x) if backward else (x, y)
                    raise ValueError(
                        f"invalid potential: negative reduced cost on edge ({a}, {b})"
                    )
                nd = drc + rc
                if nd < dist[y]:
                    dist[y] = nd
                    heap_push(&h, nd, y)
                e = nxt[e]
        psrc = pot[src]
        if backward:
            for i in range(n):
                if dist[i] != C_INF:
                    dist[i] += psrc - pot[i]
        else:
            for i in range(n):
                if dist[i] != C_INF:
                    dist[i] += pot[i] - psrc
        return out
    finally:
        free(h.key); free(h.vtx)


def repair(Py_ssize_t n, const long long[::1] out_head,
           const long long[::1] out_next, const long long[::1] eto,
           const long long[::1] ewt, long long[::1] pot,
           long long u, long long v, long long w):
    """See ``pyref.repair``."""
    cdef long long slack = pot[u] + w - pot[v]
    if slack >= 0:
        return None
    cdef Py_ssize_t m = ewt.shape[0]
    cdef long long* shift = <long long*> malloc(n * sizeof(long long))
    cdef long long* parent = <long long*> malloc(n * sizeof(long long))
    cdef long long* undo_v = <long long*> malloc(n * sizeof(long long))
    cdef long long* undo_p = <long long*> malloc(n * sizeof(long long))
    cdef char* finalized = <char*> malloc(n)
    cdef MinHeap h
    h.key = <long long*> malloc((m + 2) * sizeof(long long))
    h.vtx = <long long*> malloc((m + 2) * sizeof(long long))
    h.size = 0
    if (shift == NULL or parent == NULL or undo_v == NULL or undo_p == NULL
            or finalized == NULL or h.key == NULL or h.vtx == NULL):
        free(shift); free(parent); free(undo_v); free(undo_p)
        free(finalized); free(h.key); free(h.vtx)
        raise MemoryError()
    cdef Py_ssize_t i, nundo = 0
    cdef long long g, s, t, e, ps, cand, cur
    cdef object chain
    try:
        for i in range(n):
            shift[i] = 0
            parent[i] = -1
            finalized[i] = 0
        shift[v] = slack
        heap_push(&h, slack, v)
        while h.size > 0:
            heap_pop(&h, &g, &s)
            if finalized[s] or shift[s] != g:
                continue
            undo_v[nundo] = s
            undo_p[nundo] = pot[s]
            nundo += 1
            pot[s] += g
            finalized[s] = 1
            ps = pot[s]
            e = out_head[s]
            while e != -1:
                t = eto[e]
                if not finalized[t]:
                    cand = ps + ewt[e] - pot[t]
                    if cand < shift[t]:
                        if t == u:
                            for i in range(nundo - 1, -1, -1):
                                pot[undo_v[i]] = undo_p[i]
                            chain = [u]
                            cur = s
                            while cur != v:
                                chain.append(cur)
                                cur = parent[cur]
                            chain.append(v)
                            chain.reverse()
                            return chain
                        shift[t] = cand
                        parent[t] = s
                        heap_push(&h, cand, t)
                e = out_next[e]
        return None
    finally:
        free(shift); free(parent); free(undo_v); free(undo_p)
        free(finalized); free(h.key); free(h.vtx)


def bounds_sweep(Py_ssize_t n, const long long[::1] dist_to_u, long long d,
                 const long long[::1] dist_from_v, long long[::1] rho):
    """See ``pyref.bounds_sweep``."""
    cdef long long x, a, b, cand, sp, rx, ry
    for x in range(n):
        a = dist_to_u[x]
        b = dist_from_v[x ^ 1]
        if a != C_INF and b != C_INF:
            sp = a + d + b
            cand = sp / 2  # C division truncates; fix up to floor
            if sp % 2 != 0 and sp < 0:
                cand -= 1
            if cand < rho[x]:
                rho[x] = cand
    for x in range(n):
        rx = rho[x]
        ry = rho[x ^ 1]
        if rx != C_INF and ry != C_INF and rx + ry < 0:
            return x
    return -1


cdef int _tarjan_core(Py_ssize_t n, Py_ssize_t m, const long long* start,
                      const long long* adj, long long* comp) except -1:
    """Fill ``comp`` from CSR adjacency; returns the component count."""
    cdef long long* order = <long long*> malloc(n * sizeof(long long))
    cdef long long* low = <long long*> malloc(n * sizeof(long long))
    cdef long long* stack = <long long*> malloc(n * sizeof(long long))
    cdef long long* work_v = <long long*> malloc(n * sizeof(long long))
    cdef long long* work_e = <long long*> malloc(n * sizeof(long long))
    cdef char* on_stack = <char*> malloc(n)
    if (order == NULL or low == NULL or stack == NULL or work_v == NULL
            or work_e == NULL or on_stack == NULL):
        free(order); free(low); free(stack); free(work_v)
        free(work_e); free(on_stack)
        raise MemoryError()
    cdef Py_ssize_t sp = 0, wp = 0
    cdef long long next_order = 0, next_comp = 0
    cdef long long root, x, y, ptr
    try:
        for root in range(n):
            order[root] = -1
            on_stack[root] = 0
            comp[root] = -1
        for root in range(n):
            if order[root] != -1:
                continue
            order[root] = next_order
            low[root] = next_order
            next_order += 1
            stack[sp] = root; sp += 1
            on_stack[root] = 1
            work_v[wp] = root
            work_e[wp] = start[root]
            wp += 1
            while wp > 0:
                x = work_v[wp - 1]
                ptr = work_e[wp - 1]
                if ptr < start[x + 1]:
                    work_e[wp - 1] = ptr + 1
                    y = adj[ptr]
                    if order[y] == -1:
                        order[y] = next_order
                        low[y] = next_order
                        next_order += 1
                        stack[sp] = y; sp += 1
                        on_stack[y] = 1
                        work_v[wp] = y
                        work_e[wp] = start[y]
                        wp += 1
                    elif on_stack[y] and order[y] < low[x]:
                        low[x] = order[y]
                else:
                    wp -= 1
                    if wp > 0 and low[x] < low[work_v[wp - 1]]:
                        low[work_v[wp - 1]] = low[x]
                    if low[x] == order[x]:
                        while True:
                            sp -= 1
                            y = stack[sp]
                            on_stack[y] = 0
                            comp[y] = next_comp
                            if y == x:
                                break
                        next_comp += 1
        return <int> next_comp
    finally:
        free(order); free(low); free(stack); free(work_v)
        free(work_e); free(on_stack)


cdef int _build_csr(Py_ssize_t n, Py_ssize_t m, const long long* us,
                    const long long* vs, long long* start,
                    long long* adj) except -1:
    cdef Py_ssize_t i
    cdef long long uu
    for i in range(n + 1):
        start[i] = 0
    for i in range(m):
        start[us[i] + 1] += 1
    for i in range(n):
        start[i + 1] += start[i]
    # second pass uses start as cursors, then restores by shifting back
    for i in range(m):
        uu = us[i]
        adj[start[uu]] = vs[i]
        start[uu] += 1
    for i in range(n, 0, -1):
        start[i] = start[i - 1]
    start[0] = 0
    return 0


def tarjan_scc(Py_ssize_t n, us, vs):
    """See ``pyref.tarjan_scc``."""
    cdef array.array uarr = _array.array("q", us) if not isinstance(us, _array.array) else us
    cdef array.array varr = _array.array("q", vs) if not isinstance(vs, _array.array) else vs
    cdef const long long[::1] uv = uarr
    cdef const long long[::1] vv = varr
    cdef Py_ssize_t m = uv.shape[0]
    cdef array.array out = array.clone(_Q_TEMPLATE, n, zero=False)
    if n == 0:
        return out
    cdef long long[::1] comp = out
    cdef long long* start = <long long*> malloc((n + 1) * sizeof(long long))
    cdef long long* adj = <long long*> malloc((m if m > 0 else 1) * sizeof(long long))
    if start == NULL or adj == NULL:
        free(start); free(adj)
        raise MemoryError()
    try:
        _build_csr(n, m, &uv[0] if m > 0 else NULL, &vv[0] if m > 0 else NULL,
                   start, adj)
        _tarjan_core(n, m, start, adj, &comp[0])
        return out
    finally:
        free(start); free(adj)


def z_witness(Py_ssize_t n, const long long[::1] out_head,
              const long long[::1] out_next, const long long[::1] eto,
              const long long[::1] ewt, const long long[::1] pot):
    """See ``pyref.z_witness``."""
    if n == 0:
        return -1
    cdef Py_ssize_t mall = ewt.shape[0]
    cdef long long* us = <long long*> malloc((mall if mall > 0 else 1) * sizeof(long long))
    cdef long long* vs = <long long*> malloc((mall if mall > 0 else 1) * sizeof(long long))
    cdef long long* start = <long long*> malloc((n + 1) * sizeof(long long))
    cdef long long* adj = <long long*> malloc((mall if mall > 0 else 1) * sizeof(long long))
    cdef long long* comp = <long long*> malloc(n * sizeof(long long))
    if us == NULL or vs == NULL or start == NULL or adj == NULL or comp == NULL:
        free(us); free(vs); free(start); free(adj); free(comp)
        raise MemoryError()
    cdef Py_ssize_t m = 0
    cdef long long x, t, e, px
    try:
        for x in range(n):
            px = pot[x]
            e = out_head[x]
            while e != -1:
                t = eto[e]
                if px + ewt[e] == pot[t]:
                    us[m] = x
                    vs[m] = t
                    m += 1
                e = out_next[e]
        _build_csr(n, m, us, vs, start, adj)
        _tarjan_core(n, m, start, adj, comp)
        for x in range(n):
            if comp[x] == comp[x ^ 1] and (pot[x ^ 1] - pot[x]) & 1:
                return x
        return -1
    finally:
        free(us); free(vs); free(start); free(adj); free(comp)
