"""Stored construction recipes for P18, P26 and P34.

A recipe is a small line-based text file::

    name P26
    left P18            # catalog name, built first (recursively for recipes)
    edge 1 5            # bold edge of the left operand, in its labels
    right P10
    pair 0 1 3 8        # gadget pair f = (0, 1), g = (3, 8) of the right operand
    pattern A
    orientation 0 0     # flip_rs flip_tu
    graph6 <record>     # expected product, construction labels
    certificate <hex>   # sha256 of the canonical form
    figure-map 12 3 ... # 1-based figure label of each construction vertex

Run ``python -m oddsnarks.recipes --freeze`` to regenerate the derived lines
(graph6, certificate, figure-map) from the choice lines.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, replace
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Optional

from .graph import Edge, Graph, GraphError, edge
from .graph6 import emit_graph6

RECIPE_NAMES = ("P18", "P26", "P34")


@dataclass(frozen=True)
class Recipe:
    name: str
    left: str
    edge: Edge
    right: str
    f: Edge
    g: Edge
    pattern: str = "A"
    flip_rs: bool = False
    flip_tu: bool = False
    graph6: Optional[str] = None
    certificate: Optional[str] = None
    figure_map: Optional[tuple[int, ...]] = None

    def format(self) -> str:
        lines = [
            f"name {self.name}",
            f"left {self.left}",
            f"edge {self.edge[0]} {self.edge[1]}",
            f"right {self.right}",
            f"pair {self.f[0]} {self.f[1]} {self.g[0]} {self.g[1]}",
            f"pattern {self.pattern}",
            f"orientation {int(self.flip_rs)} {int(self.flip_tu)}",
        ]
        if self.graph6 is not None:
            lines.append(f"graph6 {self.graph6}")
        if self.certificate is not None:
            lines.append(f"certificate {self.certificate}")
        if self.figure_map is not None:
            lines.append("figure-map " + " ".join(map(str, self.figure_map)))
        return "\n".join(lines) + "\n"

    def to_figure(self, e: Edge) -> tuple[int, int]:
        """Construction-label edge to its 1-based figure label."""
        if self.figure_map is None:
            raise GraphError(f"recipe {self.name} has no figure map")
        a, b = sorted((self.figure_map[e[0]], self.figure_map[e[1]]))
        return (a, b)


def parse_recipe(text: str) -> Recipe:
    fields: dict[str, list[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *vals = line.split()
        if key in fields:
            raise GraphError(f"recipe line {lineno}: duplicate key {key!r}")
        fields[key] = vals
    try:
        ints = lambda k: [int(v) for v in fields[k]]
        e = ints("edge")
        pair = ints("pair")
        orient = ints("orientation") if "orientation" in fields else [0, 0]
        if len(e) != 2 or len(pair) != 4 or len(orient) != 2:
            raise GraphError("recipe: edge needs 2, pair 4 and orientation 2 integers")
        return Recipe(
            name=fields["name"][0],
            left=fields["left"][0],
            edge=(e[0], e[1]),
            right=fields["right"][0],
            f=(pair[0], pair[1]),
            g=(pair[2], pair[3]),
            pattern=fields.get("pattern", ["A"])[0],
            flip_rs=bool(orient[0]),
            flip_tu=bool(orient[1]),
            graph6=fields["graph6"][0] if "graph6" in fields else None,
            certificate=fields["certificate"][0] if "certificate" in fields else None,
            figure_map=tuple(ints("figure-map")) if "figure-map" in fields else None,
        )
    except KeyError as exc:
        raise GraphError(f"recipe is missing the {exc.args[0]!r} line") from None
    except ValueError as exc:
        raise GraphError(f"recipe has a malformed number: {exc}") from None


def _recipe_dir():
    return resources.files(__package__).joinpath("recipes")


def load_recipe(name: str) -> Recipe:
    if name not in RECIPE_NAMES:
        raise KeyError(f"no recipe named {name!r}; known: {', '.join(RECIPE_NAMES)}")
    return parse_recipe(_recipe_dir().joinpath(f"{name}.recipe").read_text())


def replay(recipe: Recipe, verify: bool = True):
    """Run the bold-gadget dot product a recipe describes."""
    from .construction import bold_gadget_dot_product
    from .generators import named

    L = build_recipe(recipe.left, verify) if recipe.left in RECIPE_NAMES else named(recipe.left)
    R = build_recipe(recipe.right, verify) if recipe.right in RECIPE_NAMES else named(recipe.right)
    return bold_gadget_dot_product(L, recipe.edge, R, recipe.f, recipe.g, recipe.pattern,
                                   recipe.flip_rs, recipe.flip_tu, verify=verify)


@lru_cache(maxsize=None)
def _build(name: str, verify: bool) -> Graph:
    from .symmetry import canonical_form

    recipe = load_recipe(name)
    G = replay(recipe, verify).graph
    if recipe.graph6 is not None and emit_graph6(G).decode() != recipe.graph6:
        raise GraphError(f"recipe {name}: product differs from the stored graph6 record")
    if verify and recipe.certificate is not None and canonical_form(G).digest != recipe.certificate:
        raise GraphError(f"recipe {name}: canonical certificate differs from the stored one")
    return G


def build_recipe(name: str, verify: bool = True) -> Graph:
    """Replay a stored recipe; with ``verify`` every theorem precondition and
    the odd 2-factored snark outcome are checked, as is the stored certificate."""
    return _build(name, verify)


def freeze(recipe: Recipe) -> Recipe:
    """Fill the derived lines of a recipe from its choices."""
    from .reference import figure_graph
    from .symmetry import are_isomorphic, canonical_form

    G = replay(replace(recipe, graph6=None, certificate=None, figure_map=None)).graph
    mapping = are_isomorphic(G, figure_graph(recipe.name))
    if mapping is None:
        raise GraphError(f"recipe {recipe.name} does not reproduce the figure graph")
    return replace(recipe, graph6=emit_graph6(G).decode(), certificate=canonical_form(G).digest,
                   figure_map=tuple(mapping[v] + 1 for v in range(G.n)))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="python -m oddsnarks.recipes")
    ap.add_argument("--freeze", action="store_true", help="rewrite derived recipe lines in place")
    args = ap.parse_args(argv)
    for name in RECIPE_NAMES:
        recipe = load_recipe(name)
        if args.freeze:
            _build.cache_clear()
            recipe = freeze(recipe)
            Path(str(_recipe_dir().joinpath(f"{name}.recipe"))).write_text(recipe.format())
            _build.cache_clear()
        G = build_recipe(name)
        print(name, G.n, G.m, recipe.certificate)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
