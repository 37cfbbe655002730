"""Published drawings of P18, P26 and P34 as labeled edge lists.

Labels are 1-based as printed; :func:`figure_graph` shifts them to 0-based.
``NO_AVOIDING_FACTOR`` lists, per edge-orbit representative ``f``, the edges
``g`` for which the graph minus ``{f, g}`` has no 2-factor.
"""

from __future__ import annotations

from .graph import Edge, Graph, build_graph, edge

FIGURE_EDGES: dict[str, tuple[tuple[int, int], ...]] = {
    "P18": (
        (1, 2), (1, 4), (2, 3), (2, 6), (3, 8), (4, 5), (4, 8), (5, 6), (6, 7), (7, 8),
        (9, 10), (9, 14), (10, 11), (10, 12), (11, 18), (12, 13), (12, 16), (13, 14),
        (13, 18), (14, 15), (15, 16), (16, 17), (17, 18),
        (1, 9), (5, 15), (7, 17), (3, 11),
    ),
    "P26": (
        (1, 2), (2, 3), (4, 5), (5, 6), (2, 5),
        (7, 8), (7, 12), (8, 9), (8, 10), (9, 16), (10, 11), (10, 14), (11, 12), (11, 16),
        (12, 13), (13, 14), (14, 15), (15, 16),
        (1, 7), (3, 13), (6, 15), (4, 9),
        (17, 18), (17, 22), (18, 19), (18, 20), (19, 26), (20, 21), (20, 24), (21, 22),
        (21, 26), (22, 23), (23, 24), (24, 25), (25, 26),
        (17, 3), (25, 6), (23, 4), (1, 19),
    ),
    "P34": (
        (5, 6), (5, 10), (6, 7), (6, 8), (7, 14), (8, 9), (8, 12), (9, 10), (9, 14),
        (10, 11), (11, 12), (12, 13), (13, 14),
        (1, 5), (4, 11), (3, 13), (2, 7),
        (15, 16), (15, 20), (16, 17), (16, 18), (17, 24), (18, 19), (18, 22), (19, 20),
        (19, 24), (20, 21), (21, 22), (22, 23), (23, 24),
        (15, 4), (23, 3), (21, 2), (1, 17),
        (25, 26), (25, 34), (26, 27), (26, 28), (27, 30), (28, 29), (28, 32), (29, 30),
        (29, 34), (30, 31), (31, 32), (32, 33), (33, 34),
        (33, 2), (27, 3), (31, 4), (1, 25),
    ),
}

FIGURE_BOLD_EDGES: dict[str, tuple[tuple[int, int], ...]] = {
    "P18": ((2, 6), (4, 8)),
    "P26": ((2, 5),),
    "P34": (),
}

# published (|Aut|, edge orbits, vertex orbits)
FIGURE_SYMMETRY: dict[str, tuple[int, int, int]] = {
    "P18": (8, 6, 5),
    "P26": (8, 8, 7),
    "P34": (24, 4, 4),
}

NO_AVOIDING_FACTOR: dict[str, dict[tuple[int, int], tuple[tuple[int, int], ...]]] = {
    "P18": {
        (1, 2): ((7, 8),),
        (9, 1): ((12, 13),),
        (2, 6): ((4, 8), (12, 13)),
        (12, 13): ((4, 8), (11, 3), (15, 5), (17, 7)),
    },
    "P26": {
        (2, 5): ((10, 11), (20, 21)),
        (7, 8): ((13, 14),),
        (7, 12): ((9, 16),),
        (10, 11): ((1, 7), (3, 13), (4, 9), (6, 15), (20, 21)),
    },
    "P34": {
        (5, 6): ((11, 12),),
        (8, 9): ((1, 5), (2, 7), (3, 13), (4, 11), (18, 19), (28, 29)),
    },
}


def figure_graph(name: str) -> Graph:
    edges = FIGURE_EDGES[name]
    n = max(max(e) for e in edges)
    return build_graph(n, [(u - 1, v - 1) for u, v in edges])


def to_zero_based(e: tuple[int, int]) -> Edge:
    return edge(e[0] - 1, e[1] - 1)


def to_figure(e: Edge) -> tuple[int, int]:
    return (e[0] + 1, e[1] + 1)
