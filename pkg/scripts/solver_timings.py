#!/usr/bin/env python3
"""Time graph construction, isomorphism and exact coloring per instance.

Prints a table (space, D, vertices, edges, build/iso/chi seconds, chi, search nodes)
for every nonempty D over the chosen spaces, sorted slowest first.
"""

import argparse
import time

from rtdg.algebra import expr_evaluate, expr_theorem
from rtdg.coloring import chromatic_number_exact
from rtdg.errors import SizeLimitError
from rtdg.graph import build_distance_graph
from rtdg.isomorphism import are_isomorphic
from rtdg.spaces import SpaceSpec, all_distance_sets


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("spaces", nargs="*", default=["zq:q=3,n=5", "sn:n=5", "product:sizes=2,2,3,2"])
    p.add_argument("--top", type=int, default=15, help="rows to print")
    args = p.parse_args(argv)

    rows = []
    for text in args.spaces:
        space = SpaceSpec.parse(text)
        for D in all_distance_sets(space):
            G, t_build = timed(build_distance_graph, space, D)
            H = expr_evaluate(expr_theorem(space, D))
            mapping, t_iso = timed(are_isomorphic, G, H)
            assert mapping is not None
            try:
                res, t_chi = timed(chromatic_number_exact, G)
                chi, nodes = res.value, res.nodes
            except SizeLimitError:
                chi, nodes, t_chi = "-", "-", 0.0
            rows.append((t_build + t_iso + t_chi, str(space), str(D), G.vertex_count, G.edge_count,
                         t_build, t_iso, t_chi, chi, nodes))
    rows.sort(key=lambda r: -r[0])
    print(f"{'space':<24}{'D':<12}{'V':>6}{'E':>8}{'build':>8}{'iso':>8}{'chi_t':>8}{'chi':>6}{'nodes':>8}")
    for _, space, D, v, e, tb, ti, tc, chi, nodes in rows[: args.top]:
        print(f"{space:<24}{D:<12}{v:>6}{e:>8}{tb:>8.3f}{ti:>8.3f}{tc:>8.3f}{chi!s:>6}{nodes!s:>8}")
    total = sum(r[0] for r in rows)
    print(f"{len(rows)} instances, {total:.1f}s total")


if __name__ == "__main__":
    main()
