"""3-edge-colourings of subcubic graphs, the Parity Lemma and snark checks."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from . import kernels
from .connectivity import SnarkReport, cyclic_edge_connectivity, girth, is_bridgeless
from .graph import Edge, EdgeCut, Graph, GraphError, edge, is_connected, is_cubic, is_edge_cut


@dataclass(frozen=True)
class EdgeColoring:
    assignment: dict[Edge, int]

    def color(self, u: int, v: int) -> int:
        return self.assignment[edge(u, v)]

    def classes(self) -> dict[int, list[Edge]]:
        out: dict[int, list[Edge]] = {1: [], 2: [], 3: []}
        for e, c in sorted(self.assignment.items()):
            out[c].append(e)
        return out

    def is_proper(self, G: Graph) -> bool:
        if set(self.assignment) != set(G.edges):
            return False
        if any(c not in (1, 2, 3) for c in self.assignment.values()):
            return False
        for v in range(G.n):
            seen = [self.assignment[edge(v, w)] for w in G.adj[v]]
            if len(seen) != len(set(seen)):
                return False
        return True

    def as_json(self) -> list[list[int]]:
        return [[u, v, c] for (u, v), c in sorted(self.assignment.items())]


def _bfs_edge_order(G: Graph) -> list[int]:
    """Edges in the order a BFS from vertex 0 first touches them."""
    idx = G.edge_index()
    order: list[int] = []
    placed = [False] * G.m
    seen = [False] * G.n
    for root in range(G.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(G.adj[u]):
                i = idx[edge(u, w)]
                if not placed[i]:
                    placed[i] = True
                    order.append(i)
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def find_3_edge_coloring(G: Graph) -> Optional[EdgeColoring]:
    """A proper 3-edge-colouring, or ``None`` if none exists.

    Complete backtracking in BFS edge order; the edges at vertex 0 are pinned
    to colours 1, 2, 3 in neighbour order.
    """
    if G.m == 0:
        return EdgeColoring({})
    if max(len(a) for a in G.adj) > 3:
        return None
    order = _bfs_edge_order(G)
    pinned = len(G.adj[0])
    colours = kernels.three_edge_coloring(G.n, list(G.edges), order, pinned)
    if colours is None:
        return None
    return EdgeColoring(dict(zip(G.edges, colours)))


def verify_parity_lemma(G: Graph, col: EdgeColoring, T: EdgeCut | Iterable[Edge]) -> bool:
    """For each colour ``i``: ``|T & colour_i| = |T| (mod 2)``."""
    cut = T.edges if isinstance(T, EdgeCut) else frozenset(edge(*e) for e in T)
    if not col.is_proper(G):
        raise GraphError("colouring is not a proper 3-edge-colouring of the graph")
    if not is_edge_cut(G, cut):
        raise GraphError("edge set is not an edge cut")
    counts = {1: 0, 2: 0, 3: 0}
    for e in cut:
        counts[col.assignment[e]] += 1
    return all(c % 2 == len(cut) % 2 for c in counts.values())


def is_snark(G: Graph, cec_cap: int = 4) -> SnarkReport:
    """Evaluate every snark condition independently.

    Cyclic edge-connectivity is computed exactly up to ``cec_cap``.
    """
    cubic = is_cubic(G)
    connected = is_connected(G)
    bridgeless = is_bridgeless(G)
    g = girth(G)
    cc = cyclic_edge_connectivity(G, cec_cap) if cubic and connected else None
    col = find_3_edge_coloring(G) if max((len(a) for a in G.adj), default=0) <= 3 else None
    return SnarkReport(
        cubic=cubic,
        connected=connected,
        bridgeless=bridgeless,
        girth=g,
        cyclic_connectivity=cc,
        class2=col is None,
        coloring=None if col is None else {"edges": col.as_json()},
    )
