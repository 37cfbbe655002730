"""Perfect matchings, 2-factors and 2-factor based classification.

All enumerations are exhaustive backtracking over the canonical (sorted) edge
list, branching "include" before "exclude".  Results are therefore returned in
lexicographic order of their sorted edge lists, and the same order is produced
by the compiled and the pure-Python kernel.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from . import kernels
from .graph import Edge, Graph, GraphError, delete_vertices, edge


@dataclass(frozen=True)
class FactorConstraint:
    must_contain: frozenset[Edge] = frozenset()
    must_avoid: frozenset[Edge] = frozenset()

    @classmethod
    def of(cls, contain: Iterable[Sequence[int]] = (), avoid: Iterable[Sequence[int]] = ()):
        return cls(frozenset(edge(*e) for e in contain), frozenset(edge(*e) for e in avoid))

    def check(self, G: Graph) -> None:
        both = self.must_contain & self.must_avoid
        if both:
            raise GraphError(f"edges both required and forbidden: {sorted(both)}")
        present = set(G.edges)
        missing = (self.must_contain | self.must_avoid) - present
        if missing:
            raise GraphError(f"constraint refers to non-edges {sorted(missing)}")

    def masks(self, G: Graph) -> tuple[int, int]:
        idx = G.edge_index()
        inc = sum(1 << idx[e] for e in self.must_contain)
        exc = sum(1 << idx[e] for e in self.must_avoid)
        return inc, exc

    def admits(self, edges: Iterable[Edge]) -> bool:
        s = set(edges)
        return self.must_contain <= s and not (self.must_avoid & s)


NO_CONSTRAINT = FactorConstraint()


def _normalize_cycle(cyc: Sequence[int]) -> tuple[int, ...]:
    k = cyc.index(min(cyc))
    rot = list(cyc[k:]) + list(cyc[:k])
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


def _cycle_edges(cyc: Sequence[int]) -> list[Edge]:
    return [edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]


@dataclass(frozen=True)
class TwoFactor:
    """A spanning 2-regular subgraph, stored as its vertex-disjoint cycles.

    Each cycle starts at its least vertex and continues towards the smaller
    of that vertex's two cycle-neighbours; cycles are sorted by first vertex.
    """

    cycles: tuple[tuple[int, ...], ...]
    edges: frozenset[Edge] = field(compare=False)

    @classmethod
    def from_edges(cls, edges: Iterable[Edge]) -> "TwoFactor":
        edges = [edge(*e) for e in edges]
        nbrs: dict[int, list[int]] = {}
        for u, v in edges:
            nbrs.setdefault(u, []).append(v)
            nbrs.setdefault(v, []).append(u)
        for v, ns in nbrs.items():
            if len(ns) != 2:
                raise GraphError(f"vertex {v} has degree {len(ns)} in a would-be 2-factor")
        seen: set[int] = set()
        cycles = []
        for start in sorted(nbrs):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            prev, cur = start, min(nbrs[start])
            while cur != start:
                cyc.append(cur)
                seen.add(cur)
                a, b = nbrs[cur]
                prev, cur = cur, (b if a == prev else a)
            cycles.append(_normalize_cycle(cyc))
        return cls(tuple(sorted(cycles)), frozenset(edges))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> "TwoFactor":
        es = [e for c in cycles for e in _cycle_edges(c)]
        return cls.from_edges(es)

    @property
    def spectrum(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles))

    @property
    def is_odd(self) -> bool:
        return all(len(c) % 2 for c in self.cycles)

    def even_cycles(self) -> list[tuple[int, ...]]:
        return [c for c in self.cycles if len(c) % 2 == 0]

    def cycle_of(self, v: int) -> tuple[int, ...]:
        for c in self.cycles:
            if v in c:
                return c
        raise KeyError(v)

    def cycle_containing(self, e: Sequence[int]) -> tuple[int, ...]:
        e = edge(*e)
        for c in self.cycles:
            if e in _cycle_edges(c):
                return c
        raise KeyError(e)

    def relabel(self, mapping: dict[int, int] | Sequence[int]) -> "TwoFactor":
        return TwoFactor.from_cycles([[mapping[v] for v in c] for c in self.cycles])

    def validate(self, G: Graph, vertices: Optional[Iterable[int]] = None) -> None:
        """Check disjointness, coverage of ``vertices`` (default all) and adjacency."""
        covered = [v for c in self.cycles for v in c]
        if len(covered) != len(set(covered)):
            raise GraphError("cycles are not vertex-disjoint")
        want = set(range(G.n)) if vertices is None else set(vertices)
        if set(covered) != want:
            raise GraphError("cycles do not cover the vertex set exactly")
        for c in self.cycles:
            if len(c) < 3:
                raise GraphError(f"cycle {c} shorter than 3")
            for u, v in _cycle_edges(c):
                if not G.has_edge(u, v):
                    raise GraphError(f"({u}, {v}) is not an edge of the host graph")

    def as_json(self) -> dict:
        return {"cycles": [list(c) for c in self.cycles], "spectrum": list(self.spectrum)}


def _masks_to_edges(G: Graph, masks: list[int]) -> list[list[Edge]]:
    out = []
    for mask in masks:
        es = []
        i = 0
        while mask:
            if mask & 1:
                es.append(G.edges[i])
            mask >>= 1
            i += 1
        out.append(es)
    return out


def enumerate_perfect_matchings(G: Graph) -> list[tuple[Edge, ...]]:
    """All perfect matchings, each as a sorted edge tuple, in lexicographic order."""
    if G.n % 2:
        return []
    masks = kernels.degree_subgraphs(G.n, list(G.edges), [1] * G.n, 0, 0, 0)
    return [tuple(es) for es in _masks_to_edges(G, masks)]


def enumerate_two_factors(
    G: Graph, constraint: FactorConstraint = NO_CONSTRAINT, limit: int = 0
) -> list[TwoFactor]:
    """All 2-factors of ``G`` meeting ``constraint`` (any maximum degree)."""
    constraint.check(G)
    inc, exc = constraint.masks(G)
    masks = kernels.degree_subgraphs(G.n, list(G.edges), [2] * G.n, inc, exc, limit)
    return [TwoFactor.from_edges(es) for es in _masks_to_edges(G, masks)]


def has_two_factor(G: Graph, constraint: FactorConstraint = NO_CONSTRAINT) -> bool:
    return bool(enumerate_two_factors(G, constraint, limit=1))


def two_factors_of_vertex_deleted(G: Graph, v: int) -> list[TwoFactor]:
    """2-factors of ``G - v``, reported in the labels of ``G``."""
    H, relabel = delete_vertices(G, {v})
    back = {new: old for old, new in relabel.items()}
    return [F.relabel(back) for F in enumerate_two_factors(H)]


@dataclass(frozen=True)
class PathCycleFactor:
    """A spanning subgraph made of one path between two ends plus cycles."""

    path: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]


def enumerate_path_cycle_factors(
    G: Graph, ends: tuple[int, int], avoid: Iterable[Edge] = ()
) -> list[PathCycleFactor]:
    """Spanning subgraphs with degree 1 at both ``ends`` and 2 elsewhere.

    Closing the path with a virtual edge between the ends turns each result
    into a 2-factor of ``G + end0 end1`` that uses the virtual edge, even when
    that edge would be parallel to an existing one.
    """
    a, c = ends
    if a == c:
        raise GraphError("path ends must differ")
    targets = [2] * G.n
    targets[a] = targets[c] = 1
    exc = FactorConstraint.of(avoid=avoid)
    exc.check(G)
    _, exc_mask = exc.masks(G)
    masks = kernels.degree_subgraphs(G.n, list(G.edges), targets, 0, exc_mask, 0)
    out = []
    for es in _masks_to_edges(G, masks):
        nbrs: dict[int, list[int]] = {}
        for u, v in es:
            nbrs.setdefault(u, []).append(v)
            nbrs.setdefault(v, []).append(u)
        path = [a]
        prev, cur = None, a
        while cur != c:
            nxt = [w for w in nbrs[cur] if w != prev]
            prev, cur = cur, nxt[0]
            path.append(cur)
        on_path = set(path)
        rest = [e for e in es if e[0] not in on_path]
        cycles = TwoFactor.from_edges(rest).cycles if rest else ()
        out.append(PathCycleFactor(tuple(path), cycles))
    return out


@dataclass(frozen=True)
class OddReport:
    verdict: bool
    vacuous: bool
    count: int
    witness: Optional[TwoFactor] = None
    even_cycle: Optional[tuple[int, ...]] = None

    def as_json(self) -> dict:
        out = {"odd_two_factored": self.verdict, "vacuous": self.vacuous,
               "two_factor_count": self.count}
        if self.witness is not None:
            out["witness"] = self.witness.as_json()
            out["even_cycle"] = list(self.even_cycle)
        return out


def odd_report(factors: list[TwoFactor]) -> OddReport:
    for F in factors:
        if not F.is_odd:
            return OddReport(False, False, len(factors), F, F.even_cycles()[0])
    return OddReport(True, not factors, len(factors))


def is_odd_two_factored(G: Graph) -> OddReport:
    """Whether every cycle of every 2-factor has odd length.

    A graph without 2-factors is reported as vacuously odd 2-factored.
    """
    return odd_report(enumerate_two_factors(G))


@dataclass(frozen=True)
class TwoFactorClass:
    two_factor_hamiltonian: bool
    two_factor_isomorphic: bool
    pseudo_two_factor_isomorphic: bool
    odd_two_factored: bool
    spectra: tuple[tuple[int, ...], ...]

    def as_json(self) -> dict:
        return {
            "two_factor_hamiltonian": self.two_factor_hamiltonian,
            "two_factor_isomorphic": self.two_factor_isomorphic,
            "pseudo_two_factor_isomorphic": self.pseudo_two_factor_isomorphic,
            "odd_two_factored": self.odd_two_factored,
            "spectra": [list(s) for s in self.spectra],
        }


def classify_two_factor_behavior(G: Graph) -> TwoFactorClass:
    factors = enumerate_two_factors(G)
    if not factors:
        raise GraphError("graph has no 2-factor")
    spectra = [F.spectrum for F in factors]
    distinct = tuple(sorted(set(spectra)))
    ham = all(s == (G.n,) for s in spectra)
    iso = len(distinct) == 1
    pseudo = len({len(s) % 2 for s in spectra}) == 1
    odd = all(x % 2 for s in spectra for x in s)
    assert not odd or pseudo, "all-odd spectra have cycle count congruent to n mod 2"
    return TwoFactorClass(ham, iso, pseudo, odd, distinct)
