"""Pure-Python search kernels.

These mirror ``_ckernels.pyx`` function for function and are used whenever
the compiled module is unavailable (or ``ODDSNARKS_PURE_PYTHON`` is set).
Edge sets travel as Python ints: bit ``i`` stands for ``edges[i]``.
"""

from __future__ import annotations

import sys


def degree_subgraphs(n, edges, targets, include_mask=0, exclude_mask=0, limit=0):
    """All spanning subgraphs whose degree at ``v`` is exactly ``targets[v]``.

    Edges are decided in index order, "include" before "exclude", so results
    come out in lexicographic order of their sorted edge-index lists.  Edges
    in ``include_mask`` are forced in, edges in ``exclude_mask`` forced out.
    ``limit > 0`` stops after that many results.
    """
    m = len(edges)
    us = [e[0] for e in edges]
    vs = [e[1] for e in edges]
    deg = [0] * n
    rem = [0] * n
    for u, v in edges:
        rem[u] += 1
        rem[v] += 1
    for v in range(n):
        if rem[v] < targets[v]:
            return []
    out = []

    sys_limit = sys.getrecursionlimit()
    if m + 50 > sys_limit:
        sys.setrecursionlimit(m + 100)

    def rec(i, mask):
        if i == m:
            out.append(mask)
            return limit > 0 and len(out) >= limit
        u = us[i]
        v = vs[i]
        bit = 1 << i
        rem[u] -= 1
        rem[v] -= 1
        stop = False
        if not exclude_mask & bit and deg[u] < targets[u] and deg[v] < targets[v]:
            deg[u] += 1
            deg[v] += 1
            stop = rec(i + 1, mask | bit)
            deg[u] -= 1
            deg[v] -= 1
        if (not stop and not include_mask & bit
                and deg[u] + rem[u] >= targets[u] and deg[v] + rem[v] >= targets[v]):
            stop = rec(i + 1, mask)
        rem[u] += 1
        rem[v] += 1
        return stop

    rec(0, 0)
    return out


def three_edge_coloring(n, edges, order, pinned=0):
    """Proper colouring of ``edges`` with colours 1..3, or ``None``.

    ``order`` lists edge indices in the sequence they are coloured; colours are
    tried in ascending order, so the first colouring found is deterministic.
    The first ``pinned`` (<= 3) edges of ``order`` must share a vertex; they
    are fixed to colours 1, 2, 3, which loses no colourings up to renaming.
    """
    m = len(edges)
    used = [0] * n
    colour = [0] * m
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        if deg[u] > 3 or deg[v] > 3:
            return None
    k = 0
    tried = [0] * (m + 1)
    while 0 <= k < m:
        e = order[k]
        u, v = edges[e]
        if colour[e]:
            used[u] &= ~(1 << colour[e])
            used[v] &= ~(1 << colour[e])
            colour[e] = 0
        c = tried[k] + 1
        if k < pinned:
            c = k + 1 if tried[k] == 0 else 4
        busy = used[u] | used[v]
        while c <= 3 and busy >> c & 1:
            c += 1
        if c > 3:
            tried[k] = 0
            k -= 1
            continue
        tried[k] = c
        colour[e] = c
        used[u] |= 1 << c
        used[v] |= 1 << c
        k += 1
    if k < 0:
        return None
    return colour


def max_flow_unit(n, adj, sources, sinks, bound):
    """Edge-disjoint path count between two vertex sets, capped at ``bound + 1``.

    ``adj`` is a list of neighbour lists of an undirected graph with unit edge
    capacities.  Returns ``(value, source_side)`` where ``source_side`` is the
    set of vertices reachable from the sources in the final residual graph
    (meaningful only when ``value <= bound``).
    """
    src = set(sources)
    snk = set(sinks)
    flow = {}
    value = 0
    while True:
        parent = {s: None for s in src}
        queue = list(src)
        hit = None
        head = 0
        while head < len(queue) and hit is None:
            x = queue[head]
            head += 1
            for y in adj[x]:
                if y in parent:
                    continue
                if flow.get((x, y), 0) >= 1:
                    continue
                parent[y] = x
                if y in snk:
                    hit = y
                    break
                queue.append(y)
        if hit is None:
            return value, set(parent)
        value += 1
        y = hit
        while parent[y] is not None:
            x = parent[y]
            if flow.get((y, x), 0) > 0:
                flow[(y, x)] -= 1
            else:
                flow[(x, y)] = flow.get((x, y), 0) + 1
            y = x
        if value > bound:
            return value, set()
