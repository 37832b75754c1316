"""Pure-Python graph kernels.

These are the reference semantics for the hot loops of the solver: negative
cycle detection, reduced-cost Dijkstra, incremental potential repair,
strongly connected components, and the tight-cycle parity scan.  A compiled
drop-in replacement lives in ``_speedups.pyx``; both operate on the flat
``array('q')`` adjacency arrays owned by ``ConstraintGraph``.

Conventions shared by every kernel:

- vertices are dense ints ``0..n-1``; the counterpart of ``v`` is ``v ^ 1``
- adjacency is stored as per-vertex singly linked edge lists
  (``head[v]`` -> first edge id, ``nxt[e]`` -> next edge id, ``-1`` ends)
- unreachable distances use the dedicated sentinel ``INF``; arithmetic on
  distances must saturate (never add to the sentinel)
"""

from array import array
from collections import deque
from heapq import heappop, heappush

INF = 1 << 62

_Q = array("q")


def bellman_ford(n, out_head, out_next, eto, ewt):
    """Detect a negative cycle or return a valid potential.

    Runs queue-based Bellman-Ford from a virtual source that reaches every
    vertex at distance 0, so potentials cover disconnected components.

    Returns ``(dist, None)`` where ``dist`` is a valid potential (for every
    edge ``(u,v,w)``: ``dist[u] + w - dist[v] >= 0``), or ``(None, cycle)``
    where ``cycle`` lists vertices ``[c0, .., ck]`` of a negative cycle with
    edges ``c0->c1 -> .. -> ck -> c0``.
    """
    dist = array("q", bytes(8 * n))
    parent = array("q", [-1]) * n
    pathlen = array("q", bytes(8 * n))
    inqueue = bytearray([1]) * n
    queue = deque(range(n))
    while queue:
        u = queue.popleft()
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
                    return None, _walk_cycle(parent, t, n)
                if not inqueue[t]:
                    inqueue[t] = 1
                    queue.append(t)
            e = out_next[e]
    return dist, None


def _walk_cycle(parent, start, n):
    # A relaxation chain of length >= n must contain a cycle; step back n
    # times to land on it, then collect one full loop.
    x = start
    for _ in range(n):
        x = parent[x]
    loop = [x]
    cur = parent[x]
    while cur != x:
        loop.append(cur)
        cur = parent[cur]
    loop.reverse()  # parent pointers run against edge direction
    return loop


def dijkstra(n, head, nxt, other, ewt, pot, src, backward):
    """Single-source shortest paths over the reduced-cost graph.

    ``pot`` must be a valid potential so all reduced costs are nonnegative
    (a negative one raises ``ValueError``).  With ``backward`` false the
    adjacency arrays must be the out-edge lists and the result maps ``v`` to
    the original-weight shortest-path distance src->v; with ``backward``
    true they must be the in-edge lists and the result maps ``v`` to the
    distance v->src.  Unreachable entries are ``INF``.
    """
    dist = array("q", [INF]) * n
    dist[src] = 0
    heap = [(0, src)]
    while heap:
        drc, x = heappop(heap)
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
                heappush(heap, (nd, y))
            e = nxt[e]
    # translate reduced-cost distances back to original weights
    psrc = pot[src]
    if backward:
        for v in range(n):
            if dist[v] != INF:
                dist[v] += psrc - pot[v]
    else:
        for v in range(n):
            if dist[v] != INF:
                dist[v] += pot[v] - psrc
    return dist


def repair(n, out_head, out_next, eto, ewt, pot, u, v, w):
    """Restore potential validity after edge ``(u, v, w)`` appeared.

    Lowers the potential of exactly the vertices that must drop, most
    violated first.  On success returns ``None`` with ``pot`` updated in
    place.  If ``u`` itself would have to drop the edge closes a negative
    cycle: ``pot`` is restored and the relaxation chain ``[v, .., z]``
    (``z`` being the vertex that reached ``u``) is returned.
    """
    slack = pot[u] + w - pot[v]
    if slack >= 0:
        return None
    shift = {v: slack}  # pending potential decreases, all negative
    parent = {}
    finalized = set()
    undo = []
    heap = [(slack, v)]
    while heap:
        g, s = heappop(heap)
        if s in finalized or shift.get(s) != g:
            continue
        undo.append((s, pot[s]))
        pot[s] += g
        finalized.add(s)
        ps = pot[s]
        e = out_head[s]
        while e != -1:
            t = eto[e]
            if t not in finalized:
                cand = ps + ewt[e] - pot[t]
                if cand < shift.get(t, 0):
                    if t == u:
                        # u must drop: negative cycle through (u, v)
                        for vert, old in reversed(undo):
                            pot[vert] = old
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
                    heappush(heap, (cand, t))
            e = out_next[e]
    return None


def bounds_sweep(n, dist_to_u, d, dist_from_v, rho):
    """Lower per-vertex bounds along paths through one new edge ``(u,v,d)``.

    For every vertex ``x``: the best path x -> u -> v -> -x has weight
    ``dist_to_u[x] + d + dist_from_v[-x]``; halve it (floor) and keep the
    minimum with the stored bound.  Afterwards scan for a vertex whose
    bound pair sums negative (integer infeasibility); returns the lowest
    such vertex or -1.  All arithmetic saturates at INF.
    """
    for x in range(n):
        a = dist_to_u[x]
        b = dist_from_v[x ^ 1]
        if a != INF and b != INF:
            cand = (a + d + b) // 2
            if cand < rho[x]:
                rho[x] = cand
    for x in range(n):
        rx = rho[x]
        ry = rho[x ^ 1]
        if rx != INF and ry != INF and rx + ry < 0:
            return x
    return -1


def tarjan_scc(n, us, vs):
    """Strongly connected components of the edge set ``us[i] -> vs[i]``.

    Iterative Tarjan; returns an ``array('q')`` mapping vertex to component
    id.  Vertices share an id iff they are mutually reachable.
    """
    m = len(us)
    start = [0] * (n + 1)
    for uu in us:
        start[uu + 1] += 1
    for i in range(n):
        start[i + 1] += start[i]
    adj = [0] * m
    cursor = start[:n]
    for k in range(m):
        uu = us[k]
        adj[cursor[uu]] = vs[k]
        cursor[uu] += 1

    order = array("q", [-1]) * n
    low = array("q", bytes(8 * n))
    comp = array("q", [-1]) * n
    on_stack = bytearray(n)
    stack = []
    work_v = []
    work_e = []
    next_order = 0
    next_comp = 0

    for root in range(n):
        if order[root] != -1:
            continue
        order[root] = low[root] = next_order
        next_order += 1
        stack.append(root)
        on_stack[root] = 1
        work_v.append(root)
        work_e.append(start[root])
        while work_v:
            x = work_v[-1]
            ptr = work_e[-1]
            if ptr < start[x + 1]:
                work_e[-1] = ptr + 1
                y = adj[ptr]
                if order[y] == -1:
                    order[y] = low[y] = next_order
                    next_order += 1
                    stack.append(y)
                    on_stack[y] = 1
                    work_v.append(y)
                    work_e.append(start[y])
                elif on_stack[y] and order[y] < low[x]:
                    low[x] = order[y]
            else:
                work_v.pop()
                work_e.pop()
                if work_v and low[x] < low[work_v[-1]]:
                    low[work_v[-1]] = low[x]
                if low[x] == order[x]:
                    while True:
                        y = stack.pop()
                        on_stack[y] = 0
                        comp[y] = next_comp
                        if y == x:
                            break
                    next_comp += 1
    return comp


def z_witness(n, out_head, out_next, eto, ewt, pot):
    """Integer-infeasibility witness scan for a rationally feasible graph.

    Restricts the graph to tight edges (zero reduced cost), groups them into
    strongly connected components, and returns the lowest vertex ``v`` whose
    counterpart ``v ^ 1`` shares a component while ``pot[v^1] - pot[v]`` is
    odd, or ``-1`` when every such difference is even.
    """
    us = []
    vs = []
    for x in range(n):
        px = pot[x]
        e = out_head[x]
        while e != -1:
            t = eto[e]
            if px + ewt[e] == pot[t]:
                us.append(x)
                vs.append(t)
            e = out_next[e]
    comp = tarjan_scc(n, us, vs)
    for x in range(n):
        if comp[x] == comp[x ^ 1] and (pot[x ^ 1] - pot[x]) & 1:
            return x
    return -1
