import pytest
from hypothesis import given, strategies as st

from oddsnarks.graph import (
    GraphError,
    add_edges,
    build_graph,
    components,
    delete_edges,
    delete_vertices,
    distances,
    edge,
    is_bipartite,
    is_connected,
    is_cubic,
    is_edge_cut,
    is_minimal_edge_cut,
    make_edge_cut,
)
from oddsnarks.generators import petersen

from conftest import cube, k33, k4


def test_edge_canonical():
    assert edge(5, 2) == (2, 5)
    with pytest.raises(GraphError):
        edge(3, 3)


@pytest.mark.parametrize("n, edges", [
    (-1, []),
    (3, [(0, 3)]),
    (3, [(0, 0)]),
    (3, [(0, 1), (1, 0)]),
    (3, [(0, 1, 2)]),
])
def test_build_graph_rejects(n, edges):
    with pytest.raises(GraphError):
        build_graph(n, edges)


def test_basic_queries():
    P = petersen()
    assert (P.n, P.m) == (10, 15)
    assert is_cubic(P) and is_connected(P) and not is_bipartite(P)
    assert P.has_edge(1, 0) and not P.has_edge(0, 2)
    assert is_bipartite(k33()) and is_bipartite(cube())
    d = distances(P)
    assert max(max(r) for r in d) == 2


def test_delete_vertices_relabels_ascending():
    H, relabel = delete_vertices(petersen(), {0, 7})
    assert H.n == 8 and H.m == 15 - 6
    assert relabel == {1: 0, 2: 1, 3: 2, 4: 3, 5: 4, 6: 5, 8: 6, 9: 7}


def test_delete_and_add_edges_errors():
    P = petersen()
    with pytest.raises(GraphError):
        delete_edges(P, [(0, 2)])
    with pytest.raises(GraphError):
        add_edges(P, [(0, 1)])
    assert add_edges(delete_edges(P, [(0, 1)]), [(1, 0)]) == P


def test_cuts():
    P = petersen()
    star = [(0, 1), (0, 4), (0, 5)]
    assert is_edge_cut(P, star) and is_minimal_edge_cut(P, star)
    bigger = star + [(1, 2)]
    assert is_edge_cut(P, bigger) and not is_minimal_edge_cut(P, bigger)
    assert not is_edge_cut(P, [(0, 1)])
    with pytest.raises(GraphError):
        make_edge_cut(P, [(0, 1)])
    assert make_edge_cut(P, star).minimal
    assert sorted(map(len, components(P, star))) == [1, 9]


def test_k4_components():
    assert components(k4()) == [[0, 1, 2, 3]]


edge_lists = st.integers(1, 12).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)))))


@given(edge_lists)
def test_build_graph_fuzz(case):
    n, pairs = case
    canon = [tuple(sorted(p)) for p in pairs]
    valid = all(u != v for u, v in pairs) and len(set(canon)) == len(canon)
    if valid:
        G = build_graph(n, pairs)
        assert G.edges == tuple(sorted(set(canon)))
        assert sum(G.degree(v) for v in range(n)) == 2 * G.m
    else:
        with pytest.raises(GraphError):
            build_graph(n, pairs)


@given(st.permutations(range(10)))
def test_relabel_preserves_structure(perm):
    P = petersen()
    Q = P.relabel(perm)
    assert Q.m == P.m and is_cubic(Q)
    assert all(Q.has_edge(perm[u], perm[v]) for u, v in P.edges)
