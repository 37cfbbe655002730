"""Automorphism groups, orbits, canonical forms and isomorphism.

A small individualize-and-refine engine.  Partitions are ordered lists of
cells; refinement splits each cell by the multiset of (cell, distance) pairs
seen from its vertices, which is invariant under relabeling.  The leftmost
path of the search tree fixes a base; automorphisms are found by looking for
leaves equivalent to the first one below every unmatched vertex of each base
cell, deepest level first, so the group order is the product of basic orbit
lengths.  The canonical form is the least leaf certificate over the tree,
with children pruned by the automorphisms already known.
"""

from __future__ import annotations

import hashlib
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import Edge, Graph, GraphError, distances, edge
from .graph6 import emit_graph6

Permutation = tuple[int, ...]
Cells = list[list[int]]


def is_automorphism(G: Graph, perm: Sequence[int]) -> bool:
    if sorted(perm) != list(range(G.n)):
        return False
    return all(G.has_edge(perm[u], perm[v]) for u, v in G.edges)


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """``p`` after ``q``."""
    return tuple(p[q[i]] for i in range(len(q)))


def inverse(p: Sequence[int]) -> Permutation:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def orbit_of(point: int, gens: Iterable[Sequence[int]]) -> set[int]:
    gens = list(gens)
    seen = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _orbit_blocks(size: int, gens: Sequence[Sequence[int]]) -> list[list[int]]:
    parent = list(range(size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(size):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    blocks: dict[int, list[int]] = {}
    for x in range(size):
        blocks.setdefault(find(x), []).append(x)
    return sorted(blocks.values())


class _Engine:
    def __init__(self, G: Graph):
        self.G = G
        self.n = G.n
        self.dist = distances(G)

    def initial(self) -> Cells:
        by_deg: dict[int, list[int]] = {}
        for v in range(self.n):
            by_deg.setdefault(len(self.G.adj[v]), []).append(v)
        return self.refine([by_deg[d] for d in sorted(by_deg)])

    def refine(self, cells: Cells) -> Cells:
        while True:
            cell_of = [0] * self.n
            for k, cell in enumerate(cells):
                for v in cell:
                    cell_of[v] = k
            new: Cells = []
            for cell in cells:
                if len(cell) == 1:
                    new.append(cell)
                    continue
                groups: dict[tuple, list[int]] = {}
                for v in cell:
                    row = self.dist[v]
                    sig = tuple(sorted(Counter((cell_of[w], row[w]) for w in range(self.n)).items()))
                    groups.setdefault(sig, []).append(v)
                new.extend(groups[s] for s in sorted(groups))
            if len(new) == len(cells):
                return new
            cells = new

    @staticmethod
    def target(cells: Cells) -> int:
        for k, cell in enumerate(cells):
            if len(cell) > 1:
                return k
        return -1

    def individualize(self, cells: Cells, k: int, v: int) -> Cells:
        rest = [w for w in cells[k] if w != v]
        return self.refine(cells[:k] + [[v], rest] + cells[k + 1:])

    @staticmethod
    def leaf_order(cells: Cells) -> list[int]:
        return [cell[0] for cell in cells]

    def certificate(self, order: Sequence[int]) -> tuple[Edge, ...]:
        pos = inverse(order)
        return tuple(sorted(edge(pos[u], pos[v]) for u, v in self.G.edges))

    # automorphisms

    def first_path(self) -> list[Cells]:
        path = [self.initial()]
        while True:
            k = self.target(path[-1])
            if k < 0:
                return path
            path.append(self.individualize(path[-1], k, path[-1][k][0]))

    def _match_below(self, cells: Cells, depth: int, path: list[Cells],
                     leaf: Sequence[int]) -> Optional[Permutation]:
        if depth >= len(path) or [len(c) for c in cells] != [len(c) for c in path[depth]]:
            return None
        k = self.target(cells)
        if k < 0:
            order = self.leaf_order(cells)
            perm = [0] * self.n
            for a, b in zip(leaf, order):
                perm[a] = b
            return tuple(perm) if is_automorphism(self.G, perm) else None
        for v in cells[k]:
            found = self._match_below(self.individualize(cells, k, v), depth + 1, path, leaf)
            if found is not None:
                return found
        return None

    def group(self) -> tuple[list[Permutation], int, list[int]]:
        path = self.first_path()
        leaf = self.leaf_order(path[-1])
        gens: list[Permutation] = []
        order = 1
        base = []
        for depth in range(len(path) - 2, -1, -1):
            cells = path[depth]
            k = self.target(cells)
            b = cells[k][0]
            base.append(b)
            orbit = orbit_of(b, gens)
            for v in cells[k]:
                if v in orbit:
                    continue
                g = self._match_below(self.individualize(cells, k, v), depth + 1, path, leaf)
                if g is not None:
                    gens.append(g)
                    orbit = orbit_of(b, gens)
            order *= len(orbit)
        return gens, order, base[::-1]

    # canonical form

    def canonical(self, gens: Sequence[Permutation]) -> list[int]:
        best: list = [None, None]

        def visit(cells: Cells, fixed: list[int]):
            k = self.target(cells)
            if k < 0:
                order = self.leaf_order(cells)
                cert = self.certificate(order)
                if best[0] is None or cert < best[0]:
                    best[0], best[1] = cert, order
                return
            stab = [g for g in gens if all(g[x] == x for x in fixed)]
            done: set[int] = set()
            for v in cells[k]:
                if v in done:
                    continue
                done |= orbit_of(v, stab)
                visit(self.individualize(cells, k, v), fixed + [v])

        visit(self.initial(), [])
        return best[1]


@dataclass(frozen=True)
class AutomorphismGroup:
    n: int
    generators: tuple[Permutation, ...]
    order: int
    base: tuple[int, ...]

    @property
    def name(self) -> str:
        return group_name(self)

    def as_json(self) -> dict:
        return {"order": self.order, "name": self.name,
                "generators": [list(g) for g in self.generators]}


def automorphism_group(G: Graph) -> AutomorphismGroup:
    """Generators and exact order of ``Aut(G)``; every generator is re-verified."""
    if G.n == 0:
        return AutomorphismGroup(0, (), 1, ())
    gens, order, base = _Engine(G).group()
    for g in gens:
        if not is_automorphism(G, g):
            raise AssertionError(f"search returned a non-automorphism {g}")
    return AutomorphismGroup(G.n, tuple(gens), order, tuple(base))


def group_elements(grp: AutomorphismGroup, limit: int = 100000) -> list[Permutation]:
    """All elements by closure under the generators."""
    ident = tuple(range(grp.n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in grp.generators:
                q = compose(g, p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if len(seen) > limit:
                        raise GraphError("group too large to enumerate")
        frontier = nxt
    return sorted(seen)


def _element_order(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    out = 1
    for i in range(len(p)):
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length:
            out = out * length // math.gcd(out, length)
    return out


def _order_profile(elements: Iterable[Sequence[int]]) -> Counter:
    return Counter(_element_order(p) for p in elements)


def group_name(grp: AutomorphismGroup, max_order: int = 5040) -> str:
    """Informational name: ``C<n>``, ``D<m>`` (order ``2m``), ``S<k>`` or ``order <N>``.

    Matching uses element-order statistics and commutativity only.
    """
    N = grp.order
    if N == 1:
        return "trivial"
    if N > max_order:
        return f"order {N}"
    elems = group_elements(grp)
    prof = _order_profile(elems)
    abelian = all(compose(a, b) == compose(b, a) for a in grp.generators for b in grp.generators)
    if prof.get(N):
        return f"C{N}"
    for k in range(3, 8):
        if math.factorial(k) == N and prof == _order_profile(itertools.permutations(range(k))):
            return f"S{k}"
    if N % 2 == 0:
        m = N // 2
        involutions = m + (1 if m % 2 == 0 else 0)
        if m >= 3 and not abelian and prof.get(m) and prof.get(2) == involutions:
            return f"D{m}"
        if m == 2 and prof.get(2) == 3:
            return "D2"
    return f"order {N}"


@dataclass(frozen=True)
class OrbitPartition:
    kind: str
    blocks: tuple[tuple, ...]
    group_order: int
    generators: tuple[Permutation, ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self, x) -> tuple:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def representatives(self) -> list:
        return [b[0] for b in self.blocks]

    def as_json(self) -> dict:
        blocks = [[list(x) if isinstance(x, tuple) else x for x in b] for b in self.blocks]
        return {"kind": self.kind, "count": len(self.blocks), "blocks": blocks,
                "group_order": self.group_order,
                "generators": [list(g) for g in self.generators]}


def vertex_orbits(G: Graph, grp: Optional[AutomorphismGroup] = None) -> OrbitPartition:
    grp = grp or automorphism_group(G)
    blocks = _orbit_blocks(G.n, grp.generators)
    return OrbitPartition("vertex", tuple(tuple(b) for b in blocks), grp.order, grp.generators)


def edge_image(perm: Sequence[int], e: Sequence[int]) -> Edge:
    return edge(perm[e[0]], perm[e[1]])


def edge_orbits(G: Graph, grp: Optional[AutomorphismGroup] = None) -> OrbitPartition:
    grp = grp or automorphism_group(G)
    idx = G.edge_index()
    on_edges = [[idx[edge_image(g, e)] for e in G.edges] for g in grp.generators]
    blocks = _orbit_blocks(G.m, on_edges)
    return OrbitPartition("edge", tuple(tuple(G.edges[i] for i in b) for b in blocks),
                          grp.order, grp.generators)


@dataclass(frozen=True)
class CanonicalForm:
    labeling: Permutation
    certificate: bytes

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.certificate).hexdigest()


def canonical_form(G: Graph, grp: Optional[AutomorphismGroup] = None) -> CanonicalForm:
    """``labeling[v]`` is the canonical name of ``v``; the certificate is the
    graph6 encoding of the relabeled graph."""
    if G.n == 0:
        return CanonicalForm((), emit_graph6(G))
    grp = grp or automorphism_group(G)
    order = _Engine(G).canonical(grp.generators)
    lab = inverse(order)
    return CanonicalForm(lab, emit_graph6(G.relabel(lab)))


def are_isomorphic(G: Graph, H: Graph) -> Optional[dict[int, int]]:
    """A vertex bijection ``G -> H`` preserving adjacency, or ``None``."""
    if G.n != H.n or G.m != H.m:
        return None
    cg, ch = canonical_form(G), canonical_form(H)
    if cg.certificate != ch.certificate:
        return None
    back = inverse(ch.labeling)
    mapping = {v: back[cg.labeling[v]] for v in range(G.n)}
    if not all(H.has_edge(mapping[u], mapping[v]) for u, v in G.edges):
        raise AssertionError("equal certificates but extracted map is not an isomorphism")
    return mapping
