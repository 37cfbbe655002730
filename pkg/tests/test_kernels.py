import pytest
from hypothesis import given, strategies as st

from oddsnarks import kernels
from oddsnarks.coloring import _bfs_edge_order
from oddsnarks.factors import enumerate_two_factors
from oddsnarks.kernels import available_backends

from conftest import random_cubic, small_cubic_fixtures

BACKENDS = available_backends()


def brute_degree_subgraphs(n, edges, targets):
    out = []
    m = len(edges)
    for mask in range(1 << m):
        deg = [0] * n
        for i in range(m):
            if mask >> i & 1:
                deg[edges[i][0]] += 1
                deg[edges[i][1]] += 1
        if deg == list(targets):
            out.append(mask)
    # lexicographic order of sorted index lists
    return sorted(out, key=lambda mk: [i for i in range(m) if mk >> i & 1] + [m])


def test_backend_selected():
    assert kernels.BACKEND in ("python", "cython")
    assert "python" in BACKENDS


@pytest.mark.parametrize("name", list(BACKENDS))
def test_degree_subgraphs_match_brute_force(name):
    k = BACKENDS[name]
    G = small_cubic_fixtures()["prism5"]
    edges = list(G.edges)
    for t in (1, 2):
        got = k.degree_subgraphs(G.n, edges, [t] * G.n)
        assert got == brute_degree_subgraphs(G.n, edges, [t] * G.n)


@pytest.mark.parametrize("name", list(BACKENDS))
def test_degree_subgraphs_masks_and_limit(name):
    k = BACKENDS[name]
    G = small_cubic_fixtures()["P10"]
    edges = list(G.edges)
    full = k.degree_subgraphs(G.n, edges, [2] * G.n)
    assert len(full) == 6
    assert k.degree_subgraphs(G.n, edges, [2] * G.n, 1, 0, 0) == [m for m in full if m & 1]
    assert k.degree_subgraphs(G.n, edges, [2] * G.n, 0, 1, 0) == [m for m in full if not m & 1]
    assert k.degree_subgraphs(G.n, edges, [2] * G.n, 0, 0, 2) == full[:2]
    assert k.degree_subgraphs(G.n, edges, [4] * G.n) == []


@given(st.integers(0, 10_000), st.sampled_from([8, 10, 12, 14]))
def test_backends_agree_on_random_cubic(seed, n):
    G = random_cubic(n, seed)
    edges = list(G.edges)
    order = _bfs_edge_order(G)
    results = [(k.degree_subgraphs(G.n, edges, [2] * n), k.degree_subgraphs(G.n, edges, [1] * n),
                k.three_edge_coloring(G.n, edges, order, 3)) for k in BACKENDS.values()]
    assert all(r == results[0] for r in results)


@pytest.mark.parametrize("name", list(BACKENDS))
def test_coloring_is_proper_or_none(name):
    k = BACKENDS[name]
    for label, G in small_cubic_fixtures().items():
        edges = list(G.edges)
        col = k.three_edge_coloring(G.n, edges, _bfs_edge_order(G), 3)
        # class 1 iff some 2-factor has only even cycles
        even_factor = any(all(len(c) % 2 == 0 for c in F.cycles) for F in enumerate_two_factors(G))
        assert (col is not None) == even_factor, label
        if col is None:
            continue
        for v in range(G.n):
            seen = [col[i] for i, e in enumerate(edges) if v in e]
            assert sorted(seen) == [1, 2, 3]


def test_coloring_rejects_degree_four():
    for k in BACKENDS.values():
        edges = [(0, i) for i in range(1, 5)]
        assert k.three_edge_coloring(5, edges, [0, 1, 2, 3], 0) is None


def test_max_flow_unit_small():
    from oddsnarks.kernels import max_flow_unit

    G = small_cubic_fixtures()["cube"]
    adj = [sorted(a) for a in G.adj]
    value, reach = max_flow_unit(G.n, adj, {0}, {7}, 10)
    assert value == 3 and 0 in reach and 7 not in reach
    value, reach = max_flow_unit(G.n, adj, {0}, {7}, 1)
    assert value > 1 and reach == set()


def test_pure_python_fallback_selected_by_env():
    import os
    import subprocess
    import sys

    env = dict(os.environ, ODDSNARKS_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from oddsnarks import kernels; print(kernels.BACKEND)"],
                         capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "python"
