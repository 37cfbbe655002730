import random

import pytest
from hypothesis import given, strategies as st

from oddsnarks.generators import flower, named, petersen
from oddsnarks.reference import figure_graph
from oddsnarks.symmetry import (
    are_isomorphic,
    automorphism_group,
    canonical_form,
    edge_orbits,
    group_elements,
    is_automorphism,
    vertex_orbits,
)

from conftest import cube, k33, k4, prism, random_cubic


def brute_automorphisms(G):
    """All automorphisms by naive backtracking over vertex images."""
    n = G.n
    found = []
    image = [-1] * n
    used = [False] * n

    def extend(v):
        if v == n:
            found.append(tuple(image))
            return
        for w in range(n):
            if used[w] or len(G.adj[w]) != len(G.adj[v]):
                continue
            if all(G.has_edge(w, image[u]) == G.has_edge(v, u) for u in range(v)):
                image[v], used[w] = w, True
                extend(v + 1)
                image[v], used[w] = -1, False

    extend(0)
    return found


ORACLE_GRAPHS = {
    "K4": k4(), "K33": k33(), "cube": cube(), "prism5": prism(5), "P10": petersen(),
    "J5": flower(5)[0], "Blanusa1": named("Blanusa1"), "Blanusa2": named("Blanusa2"),
    "rand12": random_cubic(12, 3), "rand16": random_cubic(16, 9),
}


@pytest.mark.parametrize("name", list(ORACLE_GRAPHS))
def test_group_order_matches_brute_force(name):
    G = ORACLE_GRAPHS[name]
    grp = automorphism_group(G)
    brute = brute_automorphisms(G)
    assert grp.order == len(brute)
    assert sorted(group_elements(grp)) == sorted(brute)
    assert all(is_automorphism(G, g) for g in grp.generators)


def test_orbit_blocks_are_invariant_and_ordered():
    G = figure_graph("P26")
    grp = automorphism_group(G)
    for orb in (vertex_orbits(G, grp), edge_orbits(G, grp)):
        firsts = [min(b) for b in orb.blocks]
        assert firsts == sorted(firsts)
        assert sum(len(b) for b in orb.blocks) == (G.n if orb.kind == "vertex" else G.m)
        for g in grp.generators:
            for b in orb.blocks:
                if orb.kind == "vertex":
                    assert {g[v] for v in b} == set(b)
                else:
                    assert {tuple(sorted((g[u], g[v]))) for u, v in b} == set(b)


@pytest.mark.parametrize("name, order, eorb, vorb, label", [
    ("P18", 8, 6, 5, "D4"), ("P26", 8, 8, 7, "D4"), ("P34", 24, 4, 4, "S4"),
])
def test_published_symmetry_numbers(name, order, eorb, vorb, label):
    G = figure_graph(name)
    grp = automorphism_group(G)
    assert (grp.order, len(edge_orbits(G, grp)), len(vertex_orbits(G, grp))) == (order, eorb, vorb)
    assert grp.name == label


@pytest.mark.parametrize("t", [5, 7, 9])
def test_flower_group(t):
    G, lab = flower(t)
    grp = automorphism_group(G)
    assert grp.order == 4 * t and grp.name == f"D{2 * t}"
    reps = [b[0] for b in vertex_orbits(G, grp).blocks]
    assert [lab.name(v) for v in reps] == ["h1", "u1", "w1"]
    assert len(edge_orbits(G, grp)) == 4


def test_petersen_transitive():
    P = petersen()
    assert len(vertex_orbits(P)) == 1 and len(edge_orbits(P)) == 1
    assert automorphism_group(P).name == "S5"


@given(st.integers(0, 10**6))
def test_orbit_counts_relabel_invariant(seed):
    G = figure_graph("P18")
    perm = list(range(G.n))
    random.Random(seed).shuffle(perm)
    H = G.relabel(perm)
    assert len(vertex_orbits(H)) == 5 and len(edge_orbits(H)) == 6
    assert canonical_form(H).certificate == canonical_form(G).certificate


@pytest.mark.parametrize("name", ["P10", "J5", "Blanusa2", "rand16"])
def test_isomorphism_of_relabelings(name):
    G = ORACLE_GRAPHS[name]
    perm = list(range(G.n))
    random.Random(11).shuffle(perm)
    H = G.relabel(perm)
    mapping = are_isomorphic(G, H)
    assert mapping is not None
    assert all(H.has_edge(mapping[u], mapping[v]) for u, v in G.edges)


def test_non_isomorphic_pairs():
    assert are_isomorphic(named("Blanusa1"), named("Blanusa2")) is None
    assert are_isomorphic(figure_graph("P26"), figure_graph("P34")) is None
    assert canonical_form(figure_graph("P26")).certificate != canonical_form(figure_graph("P34")).certificate
    assert are_isomorphic(cube(), prism(4)) is not None


def test_canonical_form_deterministic():
    a = canonical_form(figure_graph("P34"))
    b = canonical_form(figure_graph("P34"))
    assert a == b and len(a.digest) == 64
    assert sorted(a.labeling) == list(range(34))
