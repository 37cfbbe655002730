from itertools import combinations

import pytest

from oddsnarks.coloring import is_snark
from oddsnarks.connectivity import cyclic_edge_connectivity, verify_cut_cycle_parity
from oddsnarks.construction import (
    ConstructionError,
    DotProductSpec,
    augmented_ends,
    augmented_graph,
    blanusa,
    bold_edges,
    bold_gadget_dot_product,
    dot_product,
    four_cut_case_audit,
    gadget_pairs,
    independent_pairs,
    is_bold_edge,
    is_gadget_pair,
)
from oddsnarks.factors import FactorConstraint, TwoFactor, enumerate_two_factors, is_odd_two_factored
from oddsnarks.generators import PETERSEN_H, flower, petersen, petersen_h_candidates
from oddsnarks.graph import GraphError, delete_edges
from oddsnarks.recipes import build_recipe, load_recipe, parse_recipe
from oddsnarks.reference import NO_AVOIDING_FACTOR, figure_graph, to_zero_based
from oddsnarks.symmetry import are_isomorphic, canonical_form

import flower_tables


def oracle_gadget(R, f, g):
    """Gadget-pair conditions straight from the definition, using the
    augmented graph itself for (iv); requires ac, ad, bc, bd to be non-edges."""
    fs = enumerate_two_factors(R)
    if any(f not in F.edges and g not in F.edges for F in fs):
        return False
    for F in fs:
        has_f, has_g = f in F.edges, g in F.edges
        if (has_f or has_g) and not F.is_odd:
            return False
        if has_f and has_g and F.cycle_containing(f) == F.cycle_containing(g):
            return False
    A = augmented_graph(R, f, g)
    new = [tuple(sorted(e)) for e in augmented_ends(f, g)]
    for e in new:
        cons = FactorConstraint.of([e], [x for x in new if x != e])
        for F in enumerate_two_factors(A, cons):
            c = F.cycle_containing(e)
            if len(c) % 2 or any(len(o) % 2 == 0 for o in F.cycles if o != c):
                return False
    return True


# dot product


def test_dot_product_shape_and_cut():
    P = petersen()
    G, cut = dot_product(DotProductSpec(P, 0, 5, P, (0, 1), (3, 8)))
    assert (G.n, G.m) == (18, 27)
    T = cut.edges
    assert len(T) == 4 and cut.as_edge_cut(G).minimal
    assert all(cut.side(u) != cut.side(v) for u, v in T)
    n = cut.names
    assert {edge for edge in T} == {tuple(sorted((n[p], n[q]))) for p, q in ("ra", "sb", "tc", "ud")}
    for F in enumerate_two_factors(G):
        assert len(F.edges & T) in (0, 2, 4)
        for cyc in F.cycles:
            assert verify_cut_cycle_parity(G, T, cyc)


def test_dot_product_labeling_rule():
    P = petersen()
    G, cut = dot_product(DotProductSpec(P, 0, 5, P, (0, 1), (3, 8)))
    assert cut.L_map == {i: v for i, v in enumerate(v for v in range(10) if v not in (0, 5))}
    assert cut.R_map == {8 + v: v for v in range(10)}


@pytest.mark.parametrize("kwargs, msg", [
    (dict(x=0, y=2), "not adjacent"),
    (dict(f=(0, 1), g=(1, 2)), "independent"),
    (dict(f=(0, 2), g=(3, 8)), "edges of R"),
    (dict(pattern="C"), "pattern"),
])
def test_dot_product_errors(kwargs, msg):
    P = petersen()
    base = dict(L=P, x=0, y=5, R=P, f=(0, 1), g=(3, 8))
    base.update(kwargs)
    with pytest.raises(ConstructionError, match=msg):
        dot_product(DotProductSpec(**base))


def test_dot_product_rejects_weak_operands():
    from conftest import k33, prism
    P = petersen()
    with pytest.raises(ConstructionError, match="cyclic"):
        dot_product(DotProductSpec(prism(3), 0, 1, P, (0, 1), (3, 8)))
    with pytest.raises(ConstructionError, match="cyclic"):
        dot_product(DotProductSpec(P, 0, 5, k33(), (0, 3), (1, 4)))


def test_dot_products_of_snarks_are_snarks():
    P = petersen()
    J = flower(5)[0]
    for L, R, e, f, g in [(P, P, (0, 5), (0, 1), (2, 3)), (J, P, (0, 1), (0, 1), (3, 8)),
                          (P, J, (0, 1), (1, 5), (9, 13))]:
        G, cut = dot_product(DotProductSpec(L, *e, R, f, g))
        rep = is_snark(G)
        assert rep.is_snark
        assert cyclic_edge_connectivity(G, cap=5).value == 4


# bold edges


def test_petersen_all_bold_with_and_without_shortcut():
    P = petersen()
    for e in P.edges:
        full = is_bold_edge(P, e, force_full=True)
        short = is_bold_edge(P, e)
        assert full.verdict and short.verdict and short.shortcut and not full.shortcut
    assert bold_edges(P) == list(P.edges) == bold_edges(P, prune=False)


def test_bold_reports_carry_witnesses():
    J = flower(5)[0]
    rep = is_bold_edge(J, J.edges[0], force_full=True)
    assert not rep.verdict and not rep.i
    host, F = rep.witnesses["i"]
    assert not F.is_odd
    B1 = blanusa(1)
    reps = [is_bold_edge(B1, e, force_full=True) for e in B1.edges]
    failing = [r for r in reps if not (r.ii and r.iii)]
    assert failing and all(not w.is_odd for r in failing for k, (h, w) in r.witnesses.items() if k != "i")
    with pytest.raises(GraphError):
        is_bold_edge(J, (0, 5))


@pytest.mark.parametrize("name", ["P18", "P26"])
def test_bold_pruning_sound(name):
    G = figure_graph(name)
    assert bold_edges(G) == bold_edges(G, prune=False)


def test_bold_edges_not_odd_graph_uses_full_conditions():
    B1 = blanusa(1)
    assert bold_edges(B1) == bold_edges(B1, prune=False) == []


# gadget pairs


def test_h_triples():
    cands = petersen_h_candidates()
    assert len(cands) == 5 and PETERSEN_H in cands
    P = petersen()
    for f, g in combinations(PETERSEN_H, 2):
        assert not enumerate_two_factors(P, FactorConstraint.of(avoid=[f, g]))


def test_petersen_gadget_pairs_are_the_h_pairs():
    P = petersen()
    found = gadget_pairs(P)
    within_h = sorted({tuple(sorted(p)) for H in petersen_h_candidates() for p in combinations(H, 2)})
    assert found == within_h and len(found) == 15
    assert found == gadget_pairs(P, prune=False)
    for f, g in independent_pairs(P):
        assert oracle_gadget(P, f, g) == ((f, g) in found)


def test_petersen_h_pair_report_vacuity():
    rep = is_gadget_pair(petersen(), *PETERSEN_H[:2])
    assert rep.verdict and rep.complete
    # every 2-factor holds exactly two H edges, so some hold exactly one of f, g
    assert rep.vacuous == {"ii": False, "iii": False, "iv": False}


def test_p18_pair_fails_only_iv():
    G = figure_graph("P18")
    rep = is_gadget_pair(G, to_zero_based((1, 2)), to_zero_based((7, 8)))
    assert rep.i and not rep.iv and not rep.verdict
    w = rep.witnesses["iv"]
    assert len(w["cycle_through_new_edge"]) % 2 or any(len(c) % 2 == 0 for c in w["other_cycles"])


@pytest.mark.parametrize("t", [5, 7])
def test_flower_same_link_pairs(t):
    G, lab = flower(t)
    for build in (flower_tables.same_link_uv, flower_tables.same_link_uw):
        (f, g, new), cycles = build(lab)
        rep = is_gadget_pair(G, f, g)
        assert rep.i and not rep.iv
        A = augmented_graph(G, f, g)
        F = TwoFactor.from_cycles(cycles)
        F.validate(A)
        assert len(F.edges & {tuple(sorted(e)) for e in augmented_ends(tuple(sorted(f)), tuple(sorted(g)))}) == 1
        assert len(F.cycle_containing(new)) == 3


@pytest.mark.parametrize("name", ["P18", "P26", "P34"])
def test_no_avoiding_factor_tables(name):
    # the tables list each unordered pair once, under the first representative
    G = figure_graph(name)
    computed, listed = set(), set()
    for f_fig, gs in NO_AVOIDING_FACTOR[name].items():
        f = to_zero_based(f_fig)
        got = {g for g in G.edges if not set(f) & set(g)
               and not enumerate_two_factors(G, FactorConstraint.of(avoid=[f, g]), limit=1)}
        expect = {to_zero_based(g) for g in gs}
        assert expect <= got
        computed |= {frozenset((f, g)) for g in got}
        listed |= {frozenset((f, g)) for g in expect}
    assert computed == listed


def test_gadget_pruning_sound_on_p18():
    G = figure_graph("P18")
    assert gadget_pairs(G) == gadget_pairs(G, prune=False) == []


def test_gadget_errors():
    P = petersen()
    with pytest.raises(GraphError):
        is_gadget_pair(P, (0, 1), (1, 2))
    with pytest.raises(GraphError):
        is_gadget_pair(P, (0, 2), (3, 8))
    with pytest.raises(GraphError):
        augmented_graph(P, (0, 1), (2, 3))


# bold-gadget dot product


def test_preconditions_verified():
    P, J = petersen(), flower(5)[0]
    with pytest.raises(ConstructionError) as info:
        bold_gadget_dot_product(J, J.edges[0], P, *PETERSEN_H[:2])
    assert len(info.value.reports) == 2 and not info.value.reports[0].verdict
    with pytest.raises(ConstructionError):
        bold_gadget_dot_product(P, (0, 1), P, (0, 1), (2, 3))


def test_all_petersen_wirings_odd_and_isomorphic():
    P = petersen()
    target = canonical_form(blanusa(2)).certificate
    seen = 0
    for e in P.edges:
        for f, g in combinations(PETERSEN_H, 2):
            for spec in DotProductSpec.wirings(P, *e, P, f, g):
                res = bold_gadget_dot_product(P, e, P, f, g, spec.pattern, spec.flip_rs, spec.flip_tu)
                assert res.odd.verdict and res.snark.is_snark
                assert canonical_form(res.graph).certificate == target
                seen += 1
    assert seen == 15 * 3 * 8


def test_blanusa_pair():
    B1, B2 = blanusa(1), blanusa(2)
    assert is_snark(B1).is_snark and is_snark(B2).is_snark
    assert not is_odd_two_factored(B1).verdict and is_odd_two_factored(B2).verdict
    with pytest.raises(GraphError):
        blanusa(3)


@pytest.mark.parametrize("name", ["P18", "P26", "P34"])
def test_case_audit(name):
    from oddsnarks.recipes import replay
    res = replay(load_recipe(name))
    audit = four_cut_case_audit(res.graph, res.cut)
    assert audit.ok and audit.cases["1"] == 0
    assert audit.cases["2.1"] + audit.cases["2.2"] + audit.cases["3.1"] + audit.cases["3.2"] == audit.total


def test_case_audit_detects_non_odd_product():
    P = petersen()
    G, cut = dot_product(DotProductSpec(P, 0, 5, P, (0, 1), (2, 3)))
    audit = four_cut_case_audit(G, cut)
    assert not audit.ok


# recipes


def test_recipe_roundtrip_and_errors():
    r = load_recipe("P26")
    assert parse_recipe(r.format()) == r
    with pytest.raises(GraphError):
        parse_recipe("name X\nleft P10\n")
    with pytest.raises(GraphError):
        parse_recipe("name X\nname Y\n")
    with pytest.raises(KeyError):
        load_recipe("P42")


@pytest.mark.parametrize("name", ["P18", "P26", "P34"])
def test_recipes_match_golden_and_figures(name):
    G = build_recipe(name)
    r = load_recipe(name)
    assert canonical_form(G).digest == r.certificate
    fig = figure_graph(name)
    assert all(fig.has_edge(r.figure_map[u] - 1, r.figure_map[v] - 1) for u, v in G.edges)
    assert are_isomorphic(G, fig) is not None


def test_construction_exhausted_at_p34():
    G = build_recipe("P34")
    assert bold_edges(G) == [] and gadget_pairs(G) == []
