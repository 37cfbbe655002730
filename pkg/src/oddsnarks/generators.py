"""Constructors for the base graphs, with fixed labelings.

Petersen graph: outer 5-cycle ``0-1-2-3-4``, spokes ``i - i+5`` and inner
pentagram ``5-7-9-6-8-5``.

Flower snark ``J(t)``: interchange ``i`` (1-based) occupies vertices
``4(i-1) .. 4(i-1)+3`` in the order hub ``h_i``, ``u_i``, ``v_i``, ``w_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Edge, Graph, GraphError, build_graph, delete_edges, edge, is_bipartite

PETERSEN_EDGES = (
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
    + [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
)

# lexicographically least of the five triples found by petersen_h_candidates()
PETERSEN_H: tuple[Edge, Edge, Edge] = ((0, 1), (3, 8), (7, 9))


def petersen() -> Graph:
    return build_graph(10, PETERSEN_EDGES)


def petersen_h_candidates() -> list[tuple[Edge, ...]]:
    """Every triple of pairwise independent edges whose removal leaves P10 bipartite."""
    P = petersen()
    found = []
    for triple in combinations(P.edges, 3):
        ends = {v for e in triple for v in e}
        if len(ends) == 6 and is_bipartite(delete_edges(P, triple)):
            found.append(triple)
    return found


def petersen_H() -> tuple[Edge, Edge, Edge]:
    return PETERSEN_H


@dataclass(frozen=True)
class FlowerLabels:
    t: int

    def hub(self, i: int) -> int:
        return 4 * ((i - 1) % self.t)

    def u(self, i: int) -> int:
        return 4 * ((i - 1) % self.t) + 1

    def v(self, i: int) -> int:
        return 4 * ((i - 1) % self.t) + 2

    def w(self, i: int) -> int:
        return 4 * ((i - 1) % self.t) + 3

    def name(self, x: int) -> str:
        return f"{'huvw'[x % 4]}{x // 4 + 1}"

    def vertex(self, name: str) -> int:
        kind, idx = name[0], int(name[1:])
        return getattr(self, "hub" if kind == "h" else kind)(idx)

    def interchange(self, i: int) -> tuple[int, int, int, int]:
        return self.hub(i), self.u(i), self.v(i), self.w(i)

    def spokes(self, i: int) -> tuple[Edge, Edge, Edge]:
        h = self.hub(i)
        return edge(h, self.u(i)), edge(h, self.v(i)), edge(h, self.w(i))

    def link(self, i: int) -> tuple[Edge, Edge, Edge]:
        """Edges joining interchange ``i`` to ``i+1``: u-, v- and w-channel."""
        if i % self.t == 0:
            # the last link is twisted: u_t v_1, v_t u_1, w_t w_1
            return (edge(self.u(self.t), self.v(1)), edge(self.v(self.t), self.u(1)),
                    edge(self.w(self.t), self.w(1)))
        return (edge(self.u(i), self.u(i + 1)), edge(self.v(i), self.v(i + 1)),
                edge(self.w(i), self.w(i + 1)))

    def base_cycles(self) -> tuple[list[int], list[int]]:
        """The ``u/v`` cycle of length 2t and the ``w`` cycle of length t."""
        uv = [self.u(i) for i in range(1, self.t + 1)] + [self.v(i) for i in range(1, self.t + 1)]
        return uv, [self.w(i) for i in range(1, self.t + 1)]


def flower(t: int, force: bool = False) -> tuple[Graph, FlowerLabels]:
    """The flower snark ``J(t)``.

    ``t`` must be odd and at least 5 unless ``force`` is set, which admits any
    ``t >= 3`` (the result is then generally not a snark).
    """
    if t < 3:
        raise GraphError(f"J(t) needs t >= 3, got {t}")
    if not force and (t % 2 == 0 or t < 5):
        raise GraphError(f"J(t) is a snark only for odd t >= 5, got {t}; pass force=True")
    lab = FlowerLabels(t)
    edges = []
    for i in range(1, t + 1):
        edges.extend(lab.spokes(i))
        edges.extend(lab.link(i))
    return build_graph(4 * t, edges), lab


CATALOG = ("P10", "J5", "J7", "J9", "P18", "P26", "P34", "Blanusa1", "Blanusa2")

_ALIASES = {"petersen": "P10", "blanusa1": "Blanusa1", "blanusa2": "Blanusa2"}


def canonical_name(name: str) -> str:
    key = _ALIASES.get(name.lower(), name)
    for entry in CATALOG:
        if entry.lower() == key.lower():
            return entry
    raise KeyError(f"unknown graph name {name!r}; known: {', '.join(CATALOG)}")


def named(name: str) -> Graph:
    """Catalog lookup; P18/P26/P34 replay their stored recipes."""
    key = canonical_name(name)
    if key == "P10":
        return petersen()
    if key[0] == "J":
        return flower(int(key[1:]))[0]
    from . import construction, recipes

    if key in ("P18", "P26", "P34"):
        return recipes.build_recipe(key)
    return construction.blanusa(int(key[-1]))
