"""Dot products, bold-edges, gadget-pairs and the bold-gadget dot product.

Dot product wiring.  With ``N(x) - y = {r, s}`` and ``N(y) - x = {t, u}``
(each pair sorted ascending) and ``f = (a, b)``, ``g = (c, d)`` as given:

* pattern ``A`` joins ``{r, s}`` to ``{a, b}`` and ``{t, u}`` to ``{c, d}``;
* pattern ``B`` joins ``{r, s}`` to ``{c, d}`` and ``{t, u}`` to ``{a, b}``;
* ``flip_rs`` / ``flip_tu`` swap the partners of ``r, s`` / ``t, u``.

The resulting :class:`FourCut` is always renamed so that its join edges read
``ra, sb, tc, ud``; ``a, b`` then name whichever of ``f, g`` meets ``{r, s}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .coloring import is_snark
from .connectivity import SnarkReport, cyclic_edge_connectivity
from .factors import (
    FactorConstraint,
    OddReport,
    TwoFactor,
    enumerate_path_cycle_factors,
    enumerate_two_factors,
    has_two_factor,
    is_odd_two_factored,
    two_factors_of_vertex_deleted,
)
from .graph import (
    Edge,
    EdgeCut,
    Graph,
    GraphError,
    add_edges,
    build_graph,
    delete_edges,
    delete_vertices,
    edge,
    is_cubic,
    is_minimal_edge_cut,
)
from .symmetry import AutomorphismGroup, automorphism_group, edge_image, edge_orbits, group_elements, vertex_orbits


class ConstructionError(GraphError):
    """A precondition of a construction does not hold."""

    def __init__(self, message: str, reports: Sequence = ()):
        super().__init__(message)
        self.reports = tuple(reports)


class TheoremViolation(AssertionError):
    """A verified bold-gadget dot product is not an odd 2-factored snark."""


PATTERNS = ("A", "B")


@dataclass(frozen=True)
class DotProductSpec:
    L: Graph
    x: int
    y: int
    R: Graph
    f: tuple[int, int]
    g: tuple[int, int]
    pattern: str = "A"
    flip_rs: bool = False
    flip_tu: bool = False

    @classmethod
    def wirings(cls, L: Graph, x: int, y: int, R: Graph, f, g) -> list["DotProductSpec"]:
        """All eight wirings, pattern-major, identity orientation first."""
        return [cls(L, x, y, R, tuple(f), tuple(g), p, a, b)
                for p in PATTERNS for a in (False, True) for b in (False, True)]

    @property
    def wiring(self) -> str:
        return f"{self.pattern}{int(self.flip_rs)}{int(self.flip_tu)}"


@dataclass(frozen=True)
class FourCut:
    """The join edges ``ra, sb, tc, ud`` of a dot product, in product labels.

    ``L_map`` / ``R_map`` send product vertices back to operand vertices.
    ``f`` and ``g`` are the removed edges of ``R`` with ``f`` joined to
    ``{r, s}``; ``x, y`` are the removed vertices of ``L``.
    """

    names: dict[str, int]
    L_map: dict[int, int]
    R_map: dict[int, int]
    x: int
    y: int
    f: Edge
    g: Edge
    L: Graph = field(repr=False)
    R: Graph = field(repr=False)

    @property
    def edges(self) -> frozenset[Edge]:
        n = self.names
        return frozenset(edge(n[p], n[q]) for p, q in (("r", "a"), ("s", "b"), ("t", "c"), ("u", "d")))

    def as_edge_cut(self, G: Graph) -> EdgeCut:
        return EdgeCut(self.edges, is_minimal_edge_cut(G, self.edges))

    def side(self, v: int) -> str:
        return "L" if v in self.L_map else "R"

    def as_json(self) -> dict:
        return {"T": [list(e) for e in sorted(self.edges)],
                "names": dict(sorted(self.names.items())),
                "x": self.x, "y": self.y, "f": list(self.f), "g": list(self.g)}


def _operand_check(G: Graph, role: str) -> None:
    if not is_cubic(G):
        raise ConstructionError(f"{role} operand is not cubic")
    cc = cyclic_edge_connectivity(G, cap=3)
    if not cc.at_least(4):
        raise ConstructionError(f"{role} operand has cyclic edge-connectivity {cc}, need >= 4")


def dot_product(spec: DotProductSpec, check_operands: bool = True) -> tuple[Graph, FourCut]:
    """``L`` minus ``x, y`` joined to ``R`` minus ``f, g`` by four new edges.

    Product labels: the vertices of ``L - {x, y}`` in ascending order, then
    those of ``R - {f, g}`` (all of ``R``) shifted by ``|V(L)| - 2``.
    """
    L, R, x, y = spec.L, spec.R, spec.x, spec.y
    if spec.pattern not in PATTERNS:
        raise ConstructionError(f"pattern must be one of {PATTERNS}, got {spec.pattern!r}")
    if not L.has_edge(x, y):
        raise ConstructionError(f"x={x} and y={y} are not adjacent in L")
    a, b = spec.f
    c, d = spec.g
    if not (R.has_edge(a, b) and R.has_edge(c, d)):
        raise ConstructionError("f and g must be edges of R")
    if len({a, b, c, d}) != 4:
        raise ConstructionError(f"f={spec.f} and g={spec.g} are not independent")
    if check_operands:
        _operand_check(L, "left")
        _operand_check(R, "right")
    r, s = sorted(L.adj[x] - {y})
    t, u = sorted(L.adj[y] - {x})
    if len({r, s, t, u}) != 4:
        raise ConstructionError("x and y lie on a triangle; the join would be degenerate")
    near, far = ((a, b), (c, d)) if spec.pattern == "A" else ((c, d), (a, b))
    if spec.flip_rs:
        near = near[::-1]
    if spec.flip_tu:
        far = far[::-1]

    L0, lmap = delete_vertices(L, {x, y})
    off = L0.n
    R0 = delete_edges(R, [spec.f, spec.g])
    edges = list(L0.edges) + [(p + off, q + off) for p, q in R0.edges]
    joins = {"r": near[0], "s": near[1], "t": far[0], "u": far[1]}
    names = {k: lmap[v] for k, v in (("r", r), ("s", s), ("t", t), ("u", u))}
    for lk, rk in (("r", "a"), ("s", "b"), ("t", "c"), ("u", "d")):
        names[rk] = joins[lk] + off
        edges.append((names[lk], names[rk]))
    G = build_graph(L0.n + R.n, edges)
    cut = FourCut(
        names=names,
        L_map={new: old for old, new in lmap.items()},
        R_map={v + off: v for v in range(R.n)},
        x=x, y=y,
        f=edge(*near), g=edge(*far),
        L=L, R=R,
    )
    return G, cut


# bold edges


@dataclass(frozen=True)
class BoldReport:
    edge: Edge
    i: bool
    ii: bool
    iii: bool
    shortcut: bool = False
    witnesses: dict = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return self.i and self.ii and self.iii

    def as_json(self) -> dict:
        return {"edge": list(self.edge), "bold": self.verdict,
                "conditions": {"i": self.i, "ii": self.ii, "iii": self.iii},
                "shortcut_ii_iii": self.shortcut,
                "witnesses": {k: {"host": h, **F.as_json()} for k, (h, F) in sorted(self.witnesses.items())}}


def _first_even(factors: Iterable[TwoFactor]) -> Optional[TwoFactor]:
    for F in factors:
        if not F.is_odd:
            return F
    return None


def _vertex_condition(L: Graph, v: int) -> Optional[TwoFactor]:
    """An even-cycled 2-factor of ``L - v``, or ``None`` if all are odd."""
    return _first_even(two_factors_of_vertex_deleted(L, v))


def is_bold_edge(L: Graph, e: Sequence[int], force_full: bool = False,
                 odd: Optional[bool] = None) -> BoldReport:
    """Evaluate the three bold-edge conditions for ``e = xy``.

    If ``L`` is odd 2-factored, conditions (ii) and (iii) follow and are not
    enumerated unless ``force_full`` is set.  ``odd`` may carry a known
    verdict for ``L``.
    """
    x, y = e
    if not L.has_edge(x, y):
        raise GraphError(f"{tuple(e)} is not an edge")
    e = edge(x, y)
    witnesses = {}
    wx = _vertex_condition(L, x)
    wy = _vertex_condition(L, y) if wx is None else None
    if wx is not None:
        witnesses["i"] = (f"L-{x}", wx)
    elif wy is not None:
        witnesses["i"] = (f"L-{y}", wy)
    cond_i = wx is None and wy is None
    if odd is None and not force_full:
        odd = is_odd_two_factored(L).verdict
    if odd and not force_full:
        return BoldReport(e, cond_i, True, True, True, witnesses)
    w2 = _first_even(enumerate_two_factors(L, FactorConstraint.of(contain=[e])))
    w3 = _first_even(enumerate_two_factors(L, FactorConstraint.of(avoid=[e])))
    if w2 is not None:
        witnesses["ii"] = ("L", w2)
    if w3 is not None:
        witnesses["iii"] = ("L", w3)
    return BoldReport(e, cond_i, w2 is None, w3 is None, False, witnesses)


def _expand_edges(G: Graph, grp: AutomorphismGroup, edges: Iterable[Edge]) -> list[Edge]:
    out = set()
    for e in edges:
        for p in group_elements(grp):
            out.add(edge_image(p, e))
    return sorted(out)


def bold_edges(L: Graph, prune: bool = True) -> list[Edge]:
    """All bold-edges of ``L``.

    With pruning, condition (i) is evaluated once per vertex orbit and (ii),
    (iii) once per edge orbit; the result is expanded through the group.
    """
    odd = is_odd_two_factored(L).verdict
    if not prune:
        return [e for e in L.edges if is_bold_edge(L, e, odd=odd).verdict]
    grp = automorphism_group(L)
    vorb = vertex_orbits(L, grp)
    good_vertex = {}
    for block in vorb.blocks:
        ok = _vertex_condition(L, block[0]) is None
        for v in block:
            good_vertex[v] = ok
    found = []
    for block in edge_orbits(L, grp).blocks:
        x, y = block[0]
        if not (good_vertex[x] and good_vertex[y]):
            continue
        if odd or is_bold_edge(L, (x, y), odd=odd).verdict:
            found.append(block[0])
    return _expand_edges(L, grp, found)


# gadget pairs


@dataclass(frozen=True)
class GadgetReport:
    f: Edge
    g: Edge
    i: bool
    ii: bool
    iii: bool
    iv: bool
    vacuous: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    complete: bool = True

    @property
    def verdict(self) -> bool:
        return self.i and self.ii and self.iii and self.iv

    def as_json(self) -> dict:
        wit = {}
        for k, w in sorted(self.witnesses.items()):
            if isinstance(w, TwoFactor):
                wit[k] = w.as_json()
            else:
                wit[k] = w
        return {"f": list(self.f), "g": list(self.g), "gadget_pair": self.verdict,
                "conditions": {"i": self.i, "ii": self.ii, "iii": self.iii, "iv": self.iv},
                "vacuous": dict(sorted(self.vacuous.items())), "complete": self.complete,
                "witnesses": wit}


def _check_pair(R: Graph, f: Sequence[int], g: Sequence[int]) -> tuple[Edge, Edge]:
    if not R.has_edge(*f) or not R.has_edge(*g):
        raise GraphError("f and g must be edges of R")
    f, g = edge(*f), edge(*g)
    if set(f) & set(g):
        raise GraphError(f"{f} and {g} are not independent")
    return f, g


def augmented_ends(f: Edge, g: Edge) -> list[tuple[int, int]]:
    """The endpoint pairs ``ac, ad, bc, bd`` of the four new edges."""
    (a, b), (c, d) = f, g
    return [(a, c), (a, d), (b, c), (b, d)]


def _condition_iv(R: Graph, f: Edge, g: Edge, stop_early: bool):
    """Check (iv) through path-plus-cycles factors of ``R - {f, g}``.

    A 2-factor of the augmented graph using exactly one new edge ``pq`` is a
    spanning path from ``p`` to ``q`` in ``R - {f, g}`` plus cycles; the cycle
    through the new edge has as many edges as the path has vertices.
    """
    total = 0
    for ends in augmented_ends(f, g):
        for pc in enumerate_path_cycle_factors(R, ends, avoid=(f, g)):
            total += 1
            even_new = len(pc.path) % 2 == 0
            others_odd = all(len(c) % 2 for c in pc.cycles)
            if not (even_new and others_odd):
                w = {"new_edge": list(ends), "cycle_through_new_edge": list(pc.path),
                     "other_cycles": [list(c) for c in pc.cycles],
                     "type": sorted([len(pc.path)] + [len(c) for c in pc.cycles])}
                return False, total, w
    return True, total, None


def is_gadget_pair(R: Graph, f: Sequence[int], g: Sequence[int], stop_early: bool = False) -> GadgetReport:
    """Evaluate the four gadget-pair conditions for ``f = ab``, ``g = cd``.

    With ``stop_early`` the evaluation stops at the first failed condition
    and the remaining verdicts are reported false with ``complete = False``.
    """
    f, g = _check_pair(R, f, g)
    witnesses: dict = {}
    avoiding = enumerate_two_factors(R, FactorConstraint.of(avoid=[f, g]), limit=1)
    cond_i = not avoiding
    if avoiding:
        witnesses["i"] = avoiding[0]
        if stop_early:
            return GadgetReport(f, g, False, False, False, False, {}, witnesses, complete=False)
    factors = enumerate_two_factors(R)
    one = [F for F in factors if (f in F.edges) != (g in F.edges)]
    both = [F for F in factors if f in F.edges and g in F.edges]
    w2 = _first_even(one)
    cond_ii = w2 is None
    if w2 is not None:
        witnesses["ii"] = w2
    cond_iii = True
    for F in both:
        if not F.is_odd:
            witnesses["iii"] = F
            cond_iii = False
            break
        if F.cycle_containing(f) == F.cycle_containing(g):
            witnesses["iii"] = {"same_cycle": list(F.cycle_containing(f))}
            cond_iii = False
            break
    if stop_early and not (cond_ii and cond_iii):
        return GadgetReport(f, g, cond_i, cond_ii, cond_iii, False,
                            {"ii": not one, "iii": not both}, witnesses, complete=False)
    cond_iv, n_iv, w4 = _condition_iv(R, f, g, stop_early)
    if w4 is not None:
        witnesses["iv"] = w4
    vacuous = {"ii": not one, "iii": not both, "iv": n_iv == 0}
    return GadgetReport(f, g, cond_i, cond_ii, cond_iii, cond_iv, vacuous, witnesses)


def augmented_graph(R: Graph, f: Sequence[int], g: Sequence[int]) -> Graph:
    """``(R - {f, g}) + {ac, ad, bc, bd}``; fails if a new edge already exists."""
    f, g = _check_pair(R, f, g)
    return add_edges(delete_edges(R, [f, g]), augmented_ends(f, g))


def independent_pairs(R: Graph) -> list[tuple[Edge, Edge]]:
    return [(f, g) for f, g in combinations(R.edges, 2) if not set(f) & set(g)]


def gadget_pairs(R: Graph, prune: bool = True) -> list[tuple[Edge, Edge]]:
    """All unordered gadget-pairs ``(f, g)`` with ``f < g``.

    With pruning, ``f`` ranges over edge-orbit representatives only and the
    pairs found are expanded through the group.  Condition (i), the cheapest,
    is tested first.
    """
    def passes(f, g):
        if has_two_factor(R, FactorConstraint.of(avoid=[f, g])):
            return False
        return is_gadget_pair(R, f, g, stop_early=True).verdict

    if not prune:
        return [(f, g) for f, g in independent_pairs(R) if passes(f, g)]
    grp = automorphism_group(R)
    found = set()
    for block in edge_orbits(R, grp).blocks:
        f = block[0]
        for g in R.edges:
            if set(f) & set(g):
                continue
            if passes(f, g):
                found.add(tuple(sorted((f, g))))
    out = set()
    for p in group_elements(grp):
        for f, g in found:
            out.add(tuple(sorted((edge_image(p, f), edge_image(p, g)))))
    return sorted(out)


# the bold-gadget dot product


@dataclass(frozen=True)
class BoldGadgetResult:
    graph: Graph
    cut: FourCut
    spec: DotProductSpec
    bold: BoldReport
    gadget: GadgetReport
    odd: Optional[OddReport]
    snark: Optional[SnarkReport]


def bold_gadget_dot_product(
    L: Graph, e: Sequence[int], R: Graph, f: Sequence[int], g: Sequence[int],
    pattern: str = "A", flip_rs: bool = False, flip_tu: bool = False, verify: bool = True,
) -> BoldGadgetResult:
    """Dot product along a verified bold-edge and gadget-pair.

    Both preconditions are evaluated, never assumed.  With ``verify`` the
    product is checked to be an odd 2-factored snark and
    :class:`TheoremViolation` is raised otherwise.
    """
    bold = is_bold_edge(L, e)
    gadget = is_gadget_pair(R, f, g)
    if not bold.verdict or not gadget.verdict:
        raise ConstructionError(
            f"preconditions fail: bold={bold.verdict} gadget={gadget.verdict}", [bold, gadget])
    x, y = e
    spec = DotProductSpec(L, x, y, R, tuple(f), tuple(g), pattern, flip_rs, flip_tu)
    G, cut = dot_product(spec)
    odd = snark = None
    if verify:
        odd = is_odd_two_factored(G)
        snark = is_snark(G, cec_cap=4)
        if not odd.verdict or not snark.is_snark:
            raise TheoremViolation(
                f"product of bold edge {bold.edge} and gadget pair {gadget.f},{gadget.g} "
                f"(wiring {spec.wiring}): odd={odd.verdict} snark={snark.is_snark}")
    return BoldGadgetResult(G, cut, spec, bold, gadget, odd, snark)


def blanusa(k: int) -> Graph:
    """The two 18-vertex products of the Petersen graph with itself.

    ``blanusa(2)`` removes two edges of ``H`` (distance 2 apart, odd
    2-factored result); ``blanusa(1)`` removes two edges joined by a third.
    """
    from .generators import PETERSEN_H, petersen

    P = petersen()
    if k == 2:
        f, g = PETERSEN_H[0], PETERSEN_H[1]
    elif k == 1:
        f, g = (0, 1), (2, 3)
    else:
        raise GraphError(f"no Blanusa snark number {k}")
    G, _ = dot_product(DotProductSpec(P, 0, 5, P, f, g), check_operands=False)
    return G


# case audit of the odd 2-factored dot product


@dataclass
class CaseAudit:
    total: int = 0
    cases: dict = field(default_factory=lambda: {"1": 0, "2.1": 0, "2.2": 0, "3.1": 0, "3.2": 0})
    excluded_wirings: int = 0
    even_factors: int = 0
    formula_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.cases["1"] == 0 and self.excluded_wirings == 0
                and self.even_factors == 0 and not self.formula_failures)

    def as_json(self) -> dict:
        return {"two_factors": self.total, "cases": dict(self.cases),
                "case3_same_R_cycle": self.excluded_wirings, "even_factors": self.even_factors,
                "formula_failures": self.formula_failures, "ok": self.ok}


def _paths(edges: Iterable[Edge], ends: Sequence[int]) -> dict[int, tuple[int, list[int]]]:
    """Follow each path of a linear forest from the given ends: end -> (other end, vertices)."""
    nbrs: dict[int, list[int]] = {}
    for u, v in edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    out = {}
    for s in ends:
        path = [s]
        prev, cur = None, s
        while True:
            nxt = [w for w in nbrs.get(cur, []) if w != prev]
            if not nxt or (cur != s and cur in ends):
                break
            prev, cur = cur, nxt[0]
            path.append(cur)
        out[s] = (cur, path)
    return out


def _lift(edges: Iterable[Edge], mapping: dict[int, int], extra: Iterable[Edge]) -> list[Edge]:
    return [edge(mapping[u], mapping[v]) for u, v in edges] + [edge(*e) for e in extra]


def four_cut_case_audit(G: Graph, cut: FourCut) -> CaseAudit:
    """Classify every 2-factor of ``G`` by how it meets the four join edges.

    Each factor is lifted to the operands (closing paths through ``x, y`` on
    the left and through ``f, g`` or a virtual ``R`` edge on the right), the
    lifted factors are validated, and the cycle length identities for the
    crossing cycles are checked against the cycles of ``G``.
    """
    n = cut.names
    T = cut.edges
    lside = set(cut.L_map)
    rside = set(cut.R_map)
    inv_L = {v: k for k, v in cut.L_map.items()}
    x, y = cut.x, cut.y
    L_of = {k: cut.L_map[n[k]] for k in "rstu"}
    R_of = {k: cut.R_map[n[k]] for k in "abcd"}
    audit = CaseAudit()
    for F in enumerate_two_factors(G):
        audit.total += 1
        used = sorted(F.edges & T)
        FL = [e for e in F.edges if e[0] in lside and e[1] in lside]
        FR = [e for e in F.edges if e[0] in rside and e[1] in rside]
        if not F.is_odd:
            audit.even_factors += 1
        if not used:
            audit.cases["1"] += 1
            continue
        joined = {k for k in "rstu" if any(n[k] in e for e in used)}
        rjoined = {k for k in "abcd" if any(n[k] in e for e in used)}

        def crossing_cycle(k):
            return len(F.cycle_of(n[k]))

        if len(used) == 2:
            if joined in ({"r", "s"}, {"t", "u"}):
                case = "2.1"
                hub = x if joined == {"r", "s"} else y
                removed = y if hub == x else x
                p, q = sorted(joined)
                F1 = TwoFactor.from_edges(_lift(FL, cut.L_map, [(L_of[p], hub), (L_of[q], hub)]))
                F1.validate(cut.L, set(range(cut.L.n)) - {removed})
                redge = cut.f if rjoined == {"a", "b"} else cut.g
                F2 = TwoFactor.from_edges(_lift(FR, cut.R_map, [redge]))
                F2.validate(cut.R)
                want = len(F1.cycle_of(hub)) + len(F2.cycle_containing(redge)) - 1
            else:
                case = "2.2"
                p = next(k for k in joined if k in "rs")
                q = next(k for k in joined if k in "tu")
                F1 = TwoFactor.from_edges(_lift(FL, cut.L_map, [(L_of[p], x), (x, y), (y, L_of[q])]))
                F1.validate(cut.L)
                ra, rc = sorted(rjoined)
                virtual = edge(R_of[ra], R_of[rc])
                lifted_R = _lift(FR, cut.R_map, [])
                # the virtual edge may be parallel to an R edge; measure the path instead
                path = _paths(lifted_R, [R_of[ra], R_of[rc]])[R_of[ra]][1]
                rest = [e for e in lifted_R if e[0] not in path and e[1] not in path]
                others = TwoFactor.from_edges(rest).cycles if rest else ()
                if any(len(c) % 2 == 0 for c in others) or len(path) % 2:
                    audit.formula_failures.append({"case": case, "reason": "R side violates (iv)",
                                                   "virtual_edge": list(virtual)})
                want = len(F1.cycle_containing((x, y))) + len(path) - 2
            got = crossing_cycle(p if case == "2.2" else sorted(joined)[0])
        else:
            # all four join edges used
            lpaths = _paths(FL, [n[k] for k in "rstu"])
            rpaths = _paths(FR, [n[k] for k in "abcd"])
            l_partner = {k: next(j for j in "rstu" if n[j] == lpaths[n[k]][0]) for k in "rstu"}
            r_partner = {k: next(j for j in "abcd" if n[j] == rpaths[n[k]][0]) for k in "abcd"}
            if r_partner["a"] != "b":
                audit.excluded_wirings += 1
                continue
            F1 = TwoFactor.from_edges(_lift(FL, cut.L_map, [(L_of["r"], x), (L_of["s"], x),
                                                             (L_of["t"], y), (L_of["u"], y)]))
            F1.validate(cut.L)
            F2 = TwoFactor.from_edges(_lift(FR, cut.R_map, [cut.f, cut.g]))
            F2.validate(cut.R)
            Cf, Cg = F2.cycle_containing(cut.f), F2.cycle_containing(cut.g)
            if Cf == Cg:
                audit.excluded_wirings += 1
                continue
            if l_partner["r"] == "s":
                case = "3.2"
                want = len(F1.cycle_of(x)) + len(Cf) - 1
                want2 = len(F1.cycle_of(y)) + len(Cg) - 1
                if crossing_cycle("t") != want2:
                    audit.formula_failures.append({"case": case, "cycle": "y-side"})
            else:
                case = "3.1"
                want = len(F1.cycle_of(x)) + len(Cf) + len(Cg) - 2
            got = crossing_cycle("r")
        audit.cases[case] += 1
        if got != want:
            audit.formula_failures.append({"case": case, "expected": want, "found": got})
    return audit
