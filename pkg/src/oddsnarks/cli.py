"""Command-line front end: ``oddsnarks <command> ...``.

Graph arguments accept a graph6 file, ``-`` for standard input, or a catalog
name (``P10``, ``J7``, ``P26``, ``Blanusa1`` ...).  Multi-record inputs are
processed per record, optionally in parallel with ``--jobs``; output order and
bytes never depend on the job count.  Exit status: 0 when every verdict holds,
1 when some verdict is false, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Optional

from .graph import Graph, GraphError, edge
from .graph6 import emit_graph6, parse_graph6, read_graph6_records

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _identity(G: Graph) -> dict:
    from .symmetry import canonical_form

    return {"n": G.n, "m": G.m, "certificate": canonical_form(G).digest}


def load_records(source: str) -> list[tuple[str, int, bytes]]:
    """``(source, line, graph6 bytes)`` for each record of a file, stdin or catalog name."""
    from .generators import CATALOG, canonical_name, named

    if source == "-":
        return [(source, ln, rec) for ln, rec in read_graph6_records(sys.stdin.buffer)]
    path = Path(source)
    if path.is_file():
        with path.open("rb") as fh:
            return [(source, ln, rec) for ln, rec in read_graph6_records(fh)]
    try:
        key = canonical_name(source)
    except KeyError:
        raise InputError(f"{source!r} is neither a readable file nor a catalog name "
                         f"({', '.join(CATALOG)})") from None
    return [(source, 1, emit_graph6(named(key)))]


def load_one(source: str) -> Graph:
    records = load_records(source)
    if len(records) != 1:
        raise InputError(f"{source}: expected exactly one graph, found {len(records)}")
    try:
        return parse_graph6(records[0][2])
    except GraphError as exc:
        raise InputError(f"{source}: {exc}") from None


# per-record tasks (top level so worker processes can import them)


def task_check(G: Graph, kind: str) -> tuple[dict, Optional[bool]]:
    from .coloring import is_snark
    from .factors import classify_two_factor_behavior, is_odd_two_factored

    if kind == "snark":
        rep = is_snark(G)
        return rep.as_json(), rep.is_snark
    if kind == "odd2f":
        rep = is_odd_two_factored(G)
        return rep.as_json(), rep.verdict
    try:
        return classify_two_factor_behavior(G).as_json(), None
    except GraphError as exc:
        return {"error": str(exc)}, False


def task_enumerate(G: Graph, kind: str, contain, avoid, limit: int) -> tuple[dict, None]:
    from .factors import FactorConstraint, enumerate_perfect_matchings, enumerate_two_factors

    if kind == "pm":
        pms = enumerate_perfect_matchings(G)
        return {"kind": "perfect_matchings", "count": len(pms),
                "items": [[list(e) for e in pm] for pm in pms]}, None
    cons = FactorConstraint.of(contain, avoid)
    fs = enumerate_two_factors(G, cons, limit)
    return {"kind": "two_factors", "count": len(fs), "items": [F.as_json() for F in fs]}, None


def task_bold(G: Graph, edges, prune: bool) -> tuple[dict, Optional[bool]]:
    from .construction import bold_edges, is_bold_edge

    if edges:
        reps = [is_bold_edge(G, e, force_full=True) for e in edges]
        return {"reports": [r.as_json() for r in reps]}, all(r.verdict for r in reps)
    found = bold_edges(G, prune=prune)
    return {"bold_edges": [list(e) for e in found], "count": len(found)}, None


def task_gadget(G: Graph, pairs, prune: bool) -> tuple[dict, Optional[bool]]:
    from .construction import gadget_pairs, is_gadget_pair

    if pairs:
        reps = [is_gadget_pair(G, f, g) for f, g in pairs]
        return {"reports": [r.as_json() for r in reps]}, all(r.verdict for r in reps)
    found = gadget_pairs(G, prune=prune)
    return {"gadget_pairs": [[list(f), list(g)] for f, g in found], "count": len(found)}, None


def task_orbits(G: Graph) -> tuple[dict, None]:
    from .symmetry import automorphism_group, edge_orbits, vertex_orbits

    grp = automorphism_group(G)
    vo, eo = vertex_orbits(G, grp), edge_orbits(G, grp)
    return {"group": grp.as_json(),
            "vertex_orbits": {"count": len(vo), "blocks": [list(b) for b in vo.blocks]},
            "edge_orbits": {"count": len(eo), "blocks": [[list(e) for e in b] for b in eo.blocks]}}, None


TASKS: dict[str, Callable] = {
    "check": task_check, "enumerate": task_enumerate, "bold": task_bold,
    "gadget": task_gadget, "orbits": task_orbits,
}


def _run_record(job) -> tuple[dict, int]:
    command, params, source, line, record, timing = job
    head = {"schema_version": SCHEMA_VERSION, "command": command, "source": source, "record": line}
    try:
        G = parse_graph6(record)
    except GraphError as exc:
        return {**head, "error": f"parse error: {exc}"}, EXIT_INPUT
    t0 = time.perf_counter()
    try:
        result, verdict = TASKS[command](G, *params)
    except GraphError as exc:
        return {**head, "input": _identity(G), "error": str(exc)}, EXIT_INPUT
    out = {**head, "input": _identity(G), "result": result}
    if verdict is not None:
        out["verdict"] = verdict
    if timing:
        out["seconds"] = round(time.perf_counter() - t0, 6)
    return out, EXIT_OK if verdict is not False else EXIT_FALSE


def _emit(obj: dict, jsonl: bool) -> None:
    if jsonl:
        sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")
    else:
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def run_batch(args, command: str, params: tuple) -> int:
    jobs = []
    for src in args.inputs:
        for source, line, rec in load_records(src):
            jobs.append((command, params, source, line, rec, args.timing))
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_record, jobs))
    else:
        results = [_run_record(j) for j in jobs]
    status = EXIT_OK
    for obj, st in results:
        _emit(obj, args.jsonl)
        status = max(status, st)
    return status


# single-shot commands


def cmd_gen(args) -> int:
    from .generators import flower, named

    if args.name == "flower":
        if args.t is None:
            raise InputError("gen flower needs --t")
        G = flower(args.t, force=args.force)[0]
    else:
        G = named(args.name)
    sys.stdout.write(emit_graph6(G).decode() + "\n")
    return EXIT_OK


def _spec_from_args(args):
    from .construction import DotProductSpec

    L, R = load_one(args.left), load_one(args.right)
    return DotProductSpec(L, args.x, args.y, R, tuple(args.f), tuple(args.g),
                          args.pattern, args.flip_rs, args.flip_tu)


def cmd_dot(args) -> int:
    from .construction import bold_gadget_dot_product, dot_product

    spec = _spec_from_args(args)
    if args.bold_gadget:
        G = bold_gadget_dot_product(spec.L, (spec.x, spec.y), spec.R, spec.f, spec.g,
                                    spec.pattern, spec.flip_rs, spec.flip_tu).graph
    else:
        G = dot_product(spec)[0]
    sys.stdout.write(emit_graph6(G).decode() + "\n")
    return EXIT_OK


def cmd_construct(args) -> int:
    from .recipes import build_recipe

    sys.stdout.write(emit_graph6(build_recipe(args.recipe)).decode() + "\n")
    return EXIT_OK


def cmd_iso(args) -> int:
    from .symmetry import are_isomorphic

    G, H = load_one(args.first), load_one(args.second)
    mapping = are_isomorphic(G, H)
    out = {"schema_version": SCHEMA_VERSION, "command": "iso",
           "inputs": [_identity(G), _identity(H)], "isomorphic": mapping is not None}
    if mapping is not None:
        out["mapping"] = [mapping[v] for v in range(G.n)]
    _emit(out, args.jsonl)
    return EXIT_OK if mapping is not None else EXIT_FALSE


def cmd_audit(args) -> int:
    from .construction import dot_product, four_cut_case_audit
    from .recipes import load_recipe, replay

    if args.recipe:
        res = replay(load_recipe(args.recipe))
        G, cut = res.graph, res.cut
    else:
        if not (args.left and args.right and args.x is not None and args.f and args.g):
            raise InputError("audit needs --recipe or LEFT RIGHT --x --y --f --g")
        G, cut = dot_product(_spec_from_args(args))
    audit = four_cut_case_audit(G, cut)
    out = {"schema_version": SCHEMA_VERSION, "command": "audit", "input": _identity(G),
           "four_cut": cut.as_json(), "result": audit.as_json(), "verdict": audit.ok}
    _emit(out, args.jsonl)
    return EXIT_OK if audit.ok else EXIT_FALSE


def _pair(values):
    if len(values) != 4:
        raise argparse.ArgumentTypeError("a pair is four integers a b c d")
    return (edge(values[0], values[1]), edge(values[2], values[3]))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="oddsnarks", description="Odd 2-factored snark toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    def batch(name, help_, kinds=None):
        p = sub.add_parser(name, help=help_)
        if kinds:
            p.add_argument("kind", choices=kinds)
        p.add_argument("inputs", nargs="+", help="graph6 file, '-' for stdin, or catalog name")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--jsonl", action="store_true", help="one compact JSON object per line")
        p.add_argument("--timing", action="store_true", help="add per-record wall time")
        return p

    p = sub.add_parser("gen", help="emit a catalog graph or a flower snark as graph6")
    p.add_argument("name", help="catalog name, or 'flower'")
    p.add_argument("--t", type=int)
    p.add_argument("--force", action="store_true", help="allow even t or t = 3")
    p.set_defaults(func=cmd_gen)

    p = batch("check", "snark / odd 2-factored / 2-factor classification reports",
              kinds=("snark", "odd2f", "classify"))
    p.set_defaults(params=lambda a: (a.kind,))

    p = batch("enumerate", "list perfect matchings or 2-factors")
    p.add_argument("--kind", choices=("2f", "pm"), default="2f")
    p.add_argument("--contain", type=int, nargs=2, action="append", default=[], metavar=("U", "V"))
    p.add_argument("--avoid", type=int, nargs=2, action="append", default=[], metavar=("U", "V"))
    p.add_argument("--limit", type=int, default=0)
    p.set_defaults(params=lambda a: (a.kind, [tuple(e) for e in a.contain],
                                     [tuple(e) for e in a.avoid], a.limit))

    p = batch("bold", "bold-edges of each graph, or reports for chosen edges")
    p.add_argument("--edge", type=int, nargs=2, action="append", default=[], metavar=("X", "Y"))
    p.add_argument("--no-prune", action="store_true")
    p.set_defaults(params=lambda a: ([tuple(e) for e in a.edge], not a.no_prune))

    p = batch("gadget", "gadget-pairs of each graph, or reports for chosen pairs")
    p.add_argument("--pair", type=int, nargs=4, action="append", default=[], metavar="N")
    p.add_argument("--no-prune", action="store_true")
    p.set_defaults(params=lambda a: ([_pair(v) for v in a.pair], not a.no_prune))

    p = batch("orbits", "automorphism group order, vertex and edge orbits")
    p.set_defaults(params=lambda a: ())

    def dot_args(p, required=True):
        p.add_argument("left", nargs=None if required else "?")
        p.add_argument("right", nargs=None if required else "?")
        p.add_argument("--x", type=int, required=required)
        p.add_argument("--y", type=int, required=required)
        p.add_argument("--f", type=int, nargs=2, required=required)
        p.add_argument("--g", type=int, nargs=2, required=required)
        p.add_argument("--pattern", choices=("A", "B"), default="A")
        p.add_argument("--flip-rs", action="store_true")
        p.add_argument("--flip-tu", action="store_true")

    p = sub.add_parser("dot", help="dot product of two graphs, graph6 out")
    dot_args(p)
    p.add_argument("--bold-gadget", action="store_true",
                   help="require a bold edge and a gadget pair and verify the product")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("construct", help="replay a stored recipe, graph6 out")
    p.add_argument("--recipe", required=True, choices=("P18", "P26", "P34"))
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("iso", help="isomorphism test with explicit mapping")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--jsonl", action="store_true")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("audit", help="classify 2-factors of a dot product by their join edges")
    dot_args(p, required=False)
    p.add_argument("--recipe", choices=("P18", "P26", "P34"))
    p.add_argument("--jsonl", action="store_true")
    p.set_defaults(func=cmd_audit)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if hasattr(args, "func"):
            return args.func(args)
        return run_batch(args, args.command, args.params(args))
    except (InputError, GraphError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        sys.stderr.write(f"oddsnarks: error: {msg}\n")
        return EXIT_INPUT
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
