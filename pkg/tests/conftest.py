import random

import pytest
from hypothesis import settings

from oddsnarks.generators import flower, petersen
from oddsnarks.graph import Graph, build_graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def random_cubic(n: int, seed: int) -> Graph:
    """Random simple cubic graph by the pairing model with restarts."""
    rng = random.Random(seed)
    while True:
        points = [v for v in range(n) for _ in range(3)]
        rng.shuffle(points)
        edges = set()
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            e = (min(u, v), max(u, v))
            if u == v or e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return build_graph(n, edges)


def k4() -> Graph:
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def k33() -> Graph:
    return build_graph(6, [(i, j) for i in range(3) for j in range(3, 6)])


def cube() -> Graph:
    return build_graph(8, [(i, i ^ b) for i in range(8) for b in (1, 2, 4) if i < i ^ b])


def prism(k: int) -> Graph:
    edges = [(i, (i + 1) % k) for i in range(k)] + [(k + i, k + (i + 1) % k) for i in range(k)]
    return build_graph(2 * k, edges + [(i, k + i) for i in range(k)])


def small_cubic_fixtures() -> dict[str, Graph]:
    out = {"K4": k4(), "K33": k33(), "cube": cube(), "prism5": prism(5), "P10": petersen(),
           "J5": flower(5)[0], "J3": flower(3, force=True)[0], "J4": flower(4, force=True)[0]}
    for seed in range(4):
        out[f"rand12_{seed}"] = random_cubic(12, seed)
        out[f"rand16_{seed}"] = random_cubic(16, 100 + seed)
    return out


@pytest.fixture(scope="session")
def fixtures():
    return small_cubic_fixtures()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
