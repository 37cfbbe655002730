"""Girth, bridges and cyclic edge-connectivity.

Cyclic edge-connectivity of a connected cubic graph is computed exactly with
unit-capacity flows.  In a cubic graph a connected side ``A`` of an edge cut
of size ``k`` induces a tree iff ``|A| = k - 2``, so a cut of size ``<= j``
separating two disjoint connected vertex sets of size ``max(1, j-1)`` always
leaves a cycle on both sides; conversely both sides of a cyclic ``k``-cut have
at least ``k`` vertices and therefore contain such seed sets.  Testing
``j = 1, 2, ...`` over all seed pairs thus yields the exact value.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import kernels
from .graph import Edge, EdgeCut, Graph, GraphError, components, edge, is_cubic, is_minimal_edge_cut


def girth(G: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for root in range(G.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in G.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def bridges(G: Graph) -> list[Edge]:
    """Cut-edges by low-link DFS (iterative)."""
    disc = [-1] * G.n
    low = [0] * G.n
    out: list[Edge] = []
    timer = 0
    for root in range(G.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(sorted(G.adj[root])))]
        while stack:
            u, par, it = stack[-1]
            advanced = False
            for w in it:
                if w == par:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(sorted(G.adj[w]))))
                    advanced = True
                    break
                low[u] = min(low[u], disc[w])
            if not advanced:
                stack.pop()
                if par >= 0:
                    low[par] = min(low[par], low[u])
                    if low[u] > disc[par]:
                        out.append(edge(par, u))
    return sorted(out)


def is_bridgeless(G: Graph) -> bool:
    return not bridges(G)


def _has_cycle(G: Graph, keep: set[int]) -> bool:
    """Whether the subgraph induced by ``keep`` contains a cycle."""
    e = sum(1 for u, v in G.edges if u in keep and v in keep)
    comps = 0
    seen: set[int] = set()
    for s in keep:
        if s in seen:
            continue
        comps += 1
        seen.add(s)
        stack = [s]
        while stack:
            u = stack.pop()
            for w in G.adj[u]:
                if w in keep and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return e > len(keep) - comps


def has_two_disjoint_cycles(G: Graph) -> bool:
    """Search cycles through each vertex until one leaves a cycle outside it."""
    everything = set(range(G.n))
    for s in range(G.n):
        # simple cycles whose least vertex is s, by DFS over larger vertices
        stack = [(s, [s], {s})]
        while stack:
            u, path, on = stack.pop()
            for w in G.adj[u]:
                if w == s and len(path) >= 3:
                    if _has_cycle(G, everything - on):
                        return True
                elif w > s and w not in on:
                    stack.append((w, path + [w], on | {w}))
    return False


def connected_subsets(G: Graph, size: int) -> list[frozenset[int]]:
    """All connected vertex sets of the given size."""
    level = {frozenset([v]) for v in range(G.n)}
    for _ in range(size - 1):
        nxt = set()
        for S in level:
            for v in S:
                for w in G.adj[v]:
                    if w not in S:
                        nxt.add(S | {w})
        level = nxt
    return sorted(level, key=lambda S: sorted(S))


def boundary(G: Graph, side: Iterable[int]) -> frozenset[Edge]:
    side = set(side)
    return frozenset(e for e in G.edges if (e[0] in side) != (e[1] in side))


@dataclass(frozen=True)
class CyclicConnectivity:
    """Outcome of :func:`cyclic_edge_connectivity`.

    ``value`` is exact when ``exact`` is true; otherwise the true value is at
    least ``value`` (the cap was reached).  ``defined`` is false for graphs
    without two vertex-disjoint cycles, such as K4 and K3,3.
    """

    value: Optional[int]
    exact: bool
    defined: bool = True
    cut: Optional[EdgeCut] = None

    def at_least(self, k: int) -> bool:
        return self.defined and self.value is not None and self.value >= k

    def __str__(self) -> str:
        if not self.defined:
            return "undefined"
        return str(self.value) if self.exact else f">={self.value}"

    def as_json(self):
        if not self.defined:
            return {"value": None, "defined": False}
        out = {"value": self.value, "exact": self.exact}
        if self.cut is not None:
            out["cut"] = [list(e) for e in sorted(self.cut.edges)]
        return out


def _cyclic_cut_at_most(G: Graph, j: int) -> Optional[frozenset[Edge]]:
    m = max(1, j - 1)
    seeds = connected_subsets(G, m)
    adj = [sorted(a) for a in G.adj]
    for i, S in enumerate(seeds):
        for T in seeds[i + 1:]:
            if S & T:
                continue
            value, reach = kernels.max_flow_unit(G.n, adj, S, T, j)
            if value <= j:
                # the component of G - reach holding T is a bond with cycles on both sides
                rest = set(range(G.n)) - reach
                comp = {next(iter(T))}
                stack = list(comp)
                while stack:
                    u = stack.pop()
                    for w in G.adj[u]:
                        if w in rest and w not in comp:
                            comp.add(w)
                            stack.append(w)
                return boundary(G, comp)
    return None


def cyclic_edge_connectivity(G: Graph, cap: int = 6) -> CyclicConnectivity:
    """Minimum size of an edge cut leaving two components that contain cycles.

    Exact up to ``cap``; beyond it the result reads ``>= cap + 1``.
    """
    if not is_cubic(G):
        raise GraphError("cyclic edge-connectivity is implemented for cubic graphs")
    if len(components(G)) != 1:
        raise GraphError("graph is disconnected")
    if not has_two_disjoint_cycles(G):
        return CyclicConnectivity(None, False, defined=False)
    for j in range(1, cap + 1):
        cut = _cyclic_cut_at_most(G, j)
        if cut is not None:
            return CyclicConnectivity(len(cut), True, True, EdgeCut(cut, is_minimal_edge_cut(G, cut)))
    return CyclicConnectivity(cap + 1, False)


def is_cyclic_cut(G: Graph, cut: Iterable[Edge]) -> bool:
    """Whether removing ``cut`` leaves at least two components with cycles."""
    parts = components(G, cut)
    cut = {edge(*e) for e in cut}
    cyclic = 0
    for part in parts:
        keep = set(part)
        e = sum(1 for u, v in G.edges if u in keep and v in keep and (u, v) not in cut)
        if e >= len(part):
            cyclic += 1
    return cyclic >= 2


def verify_cut_cycle_parity(G: Graph, S: EdgeCut | Iterable[Edge], cycle: Sequence[int]) -> bool:
    """``|E(C) & S|`` is even for a minimal disconnecting set ``S`` and cycle ``C``."""
    cut = S.edges if isinstance(S, EdgeCut) else frozenset(edge(*e) for e in S)
    if not is_minimal_edge_cut(G, cut):
        raise GraphError("edge set is not a minimal edge cut")
    cyc_edges = {edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}
    for e in cyc_edges:
        if not G.has_edge(*e):
            raise GraphError(f"{e} is not an edge; not a cycle of the graph")
    return len(cyc_edges & cut) % 2 == 0


@dataclass(frozen=True)
class SnarkReport:
    cubic: bool
    connected: bool
    bridgeless: bool
    girth: float
    cyclic_connectivity: Optional[CyclicConnectivity]
    class2: bool
    coloring: Optional[dict] = None

    @property
    def girth_at_least_5(self) -> bool:
        return self.girth >= 5

    @property
    def cyclically_4_edge_connected(self) -> bool:
        cc = self.cyclic_connectivity
        return cc is not None and cc.at_least(4)

    @property
    def is_snark(self) -> bool:
        return (self.cubic and self.girth_at_least_5
                and self.cyclically_4_edge_connected and self.class2)

    def as_json(self) -> dict:
        cc = self.cyclic_connectivity
        out = {
            "snark": self.is_snark,
            "cubic": self.cubic,
            "connected": self.connected,
            "bridgeless": self.bridgeless,
            "girth": None if self.girth == math.inf else self.girth,
            "girth_at_least_5": self.girth_at_least_5,
            "cyclic_edge_connectivity": None if cc is None else cc.as_json(),
            "cyclically_4_edge_connected": self.cyclically_4_edge_connected,
            "chromatic_index_4": self.class2,
        }
        if self.coloring is not None:
            out["coloring"] = self.coloring
        return out
