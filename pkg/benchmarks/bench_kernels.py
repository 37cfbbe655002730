"""Compare the compiled and pure-Python kernels on the package's workloads.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import timeit

from oddsnarks.coloring import _bfs_edge_order
from oddsnarks.generators import flower
from oddsnarks.kernels import available_backends
from oddsnarks.reference import figure_graph


def workloads():
    graphs = {"J9": flower(9)[0], "J11": flower(11)[0], "P34": figure_graph("P34")}
    for name, G in graphs.items():
        edges = list(G.edges)
        yield f"2-factors {name}", lambda k, G=G, e=edges: k.degree_subgraphs(G.n, e, [2] * G.n, 0, 0, 0)
        yield f"perfect matchings {name}", lambda k, G=G, e=edges: k.degree_subgraphs(G.n, e, [1] * G.n, 0, 0, 0)
        order = _bfs_edge_order(G)
        yield f"3-edge-colouring {name}", lambda k, G=G, e=edges, o=order: k.three_edge_coloring(G.n, e, o, 3)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = available_backends()
    names = list(backends)
    print(f"{'workload':32}" + "".join(f"{n:>12}" for n in names) + (f"{'speedup':>10}" if len(names) > 1 else ""))
    for label, fn in workloads():
        ref = None
        times = []
        for name in names:
            k = backends[name]
            out = fn(k)
            if ref is None:
                ref = out
            elif out != ref:
                raise SystemExit(f"{label}: backends disagree")
            times.append(min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat)))
        row = f"{label:32}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if len(times) > 1:
            row += f"{times[0] / times[1]:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
