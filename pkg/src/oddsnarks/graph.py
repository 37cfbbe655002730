"""Immutable simple undirected graphs on vertices ``0..n-1``.

Every "modifying" operation returns a new :class:`Graph`.  Operations that
would produce a loop or a parallel edge raise :class:`GraphError`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graph input or invalid surgery."""


def edge(u: int, v: int) -> Edge:
    """Return the canonical ``(min, max)`` form of an edge."""
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adj: tuple[frozenset[int], ...] = field(default=(), repr=False, compare=False, hash=False)

    def __post_init__(self):
        # adjacency is derived; rebuilt here so direct construction stays consistent
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of the vertex set")
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class EdgeCut:
    """A set of edges whose removal disconnects the host graph."""

    edges: frozenset[Edge]
    minimal: bool

    def __len__(self) -> int:
        return len(self.edges)


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph, rejecting loops, duplicates and bad endpoints."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen: set[Edge] = set()
    for pair in edge_list:
        if len(pair) != 2:
            raise GraphError(f"edge {pair!r} does not have two endpoints")
        u, v = int(pair[0]), int(pair[1])
        for w in (u, v):
            if not 0 <= w < n:
                raise GraphError(f"endpoint {w} out of range for n={n}")
        e = edge(u, v)
        if e in seen:
            raise GraphError(f"duplicate edge {e}")
        seen.add(e)
    return Graph(n, tuple(sorted(seen)))


def delete_vertices(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``V(G) - S``.

    Survivors are relabeled ``0..n-|S|-1`` in ascending original order; the
    returned map sends old labels to new ones.
    """
    removed = set(S)
    for v in removed:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} out of range for n={G.n}")
    relabel: dict[int, int] = {}
    for v in range(G.n):
        if v not in removed:
            relabel[v] = len(relabel)
    kept = [(relabel[u], relabel[v]) for u, v in G.edges if u in relabel and v in relabel]
    return build_graph(len(relabel), kept), relabel


def delete_edges(G: Graph, F: Iterable[Sequence[int]]) -> Graph:
    drop = {edge(*e) for e in F}
    present = set(G.edges)
    missing = drop - present
    if missing:
        raise GraphError(f"cannot delete non-edges {sorted(missing)}")
    return Graph(G.n, tuple(e for e in G.edges if e not in drop))


def add_edges(G: Graph, F: Iterable[Sequence[int]]) -> Graph:
    new = [edge(*e) for e in F]
    present = set(G.edges)
    for e in new:
        if e in present:
            raise GraphError(f"edge {e} already present; multigraphs are not representable")
    return build_graph(G.n, list(G.edges) + new)


def degrees(G: Graph) -> list[int]:
    return [len(a) for a in G.adj]


def is_cubic(G: Graph) -> bool:
    return G.n > 0 and all(len(a) == 3 for a in G.adj)


def components(G: Graph, removed_edges: Iterable[Edge] = ()) -> list[list[int]]:
    """Connected components (sorted vertex lists) of ``G`` minus some edges."""
    banned = {edge(*e) for e in removed_edges}
    comp = [-1] * G.n
    out: list[list[int]] = []
    for s in range(G.n):
        if comp[s] >= 0:
            continue
        comp[s] = len(out)
        part = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adj[u]:
                if comp[w] < 0 and (not banned or edge(u, w) not in banned):
                    comp[w] = len(out)
                    part.append(w)
                    queue.append(w)
        out.append(sorted(part))
    return out


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(components(G)) == 1


def is_bipartite(G: Graph) -> bool:
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def distances(G: Graph) -> list[list[int]]:
    """All-pairs BFS distances; ``-1`` marks unreachable pairs."""
    out = []
    for s in range(G.n):
        d = [-1] * G.n
        d[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adj[u]:
                if d[w] < 0:
                    d[w] = d[u] + 1
                    queue.append(w)
        out.append(d)
    return out


def is_edge_cut(G: Graph, cut: Iterable[Edge]) -> bool:
    return len(components(G, cut)) > len(components(G))


def is_minimal_edge_cut(G: Graph, cut: Iterable[Edge]) -> bool:
    """True iff removing ``cut`` disconnects but no proper subset does."""
    cut = [edge(*e) for e in cut]
    if not is_edge_cut(G, cut):
        return False
    # it suffices to restore each edge singly: cuts are upward closed
    return all(not is_edge_cut(G, cut[:i] + cut[i + 1:]) for i in range(len(cut)))


def make_edge_cut(G: Graph, cut: Iterable[Edge]) -> EdgeCut:
    cut = frozenset(edge(*e) for e in cut)
    if not is_edge_cut(G, cut):
        raise GraphError("edge set does not disconnect the graph")
    return EdgeCut(cut, is_minimal_edge_cut(G, cut))
