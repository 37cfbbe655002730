import random

import pytest

from oddsnarks.coloring import EdgeColoring, find_3_edge_coloring, is_snark, verify_parity_lemma
from oddsnarks.connectivity import boundary
from oddsnarks.generators import flower, named, petersen
from oddsnarks.graph import GraphError, build_graph

from conftest import cube, k33, prism, random_cubic


@pytest.mark.parametrize("G", [petersen(), flower(5)[0], flower(7)[0], named("Blanusa1"), named("Blanusa2")])
def test_snarks_are_class_two(G):
    assert find_3_edge_coloring(G) is None


@pytest.mark.parametrize("G", [cube(), k33(), prism(5), flower(4, force=True)[0]])
def test_class_one_colorings_are_proper(G):
    col = find_3_edge_coloring(G)
    assert col is not None and col.is_proper(G)
    classes = col.classes()
    assert all(len(classes[c]) == G.n // 2 for c in (1, 2, 3))


def test_parity_lemma_on_random_cuts():
    rng = random.Random(7)
    for G in (cube(), prism(6), k33()):
        col = find_3_edge_coloring(G)
        for _ in range(40):
            side = {v for v in range(G.n) if rng.random() < 0.5}
            if not side or len(side) == G.n:
                continue
            cut = boundary(G, side)
            if cut:
                assert verify_parity_lemma(G, col, cut)


def test_parity_lemma_errors():
    G = cube()
    col = find_3_edge_coloring(G)
    with pytest.raises(GraphError):
        verify_parity_lemma(G, col, [(0, 1)])
    bad = EdgeColoring({e: 1 for e in G.edges})
    with pytest.raises(GraphError):
        verify_parity_lemma(G, bad, boundary(G, {0}))


def test_is_snark_reports_each_condition():
    rep = is_snark(petersen())
    assert rep.is_snark and rep.girth == 5 and rep.class2
    rep = is_snark(flower(3, force=True)[0])
    assert not rep.is_snark and rep.girth == 3
    rep = is_snark(cube())
    assert not rep.is_snark and not rep.class2 and rep.coloring is not None
    rep = is_snark(build_graph(4, [(0, 1), (1, 2)]))
    assert not rep.cubic and not rep.is_snark
    assert is_snark(flower(7)[0]).as_json()["snark"] is True


def test_snark_conditions_independent_of_labels():
    G = named("Blanusa1")
    perm = list(range(G.n))
    random.Random(3).shuffle(perm)
    a, b = is_snark(G.relabel(perm)), is_snark(G)
    keys = ("cubic", "connected", "bridgeless", "girth", "class2", "is_snark")
    assert [getattr(a, k) for k in keys] == [getattr(b, k) for k in keys]
    assert a.cyclic_connectivity.value == b.cyclic_connectivity.value
