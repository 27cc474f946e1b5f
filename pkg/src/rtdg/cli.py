"""Command line front end: ``rtdg <subcommand> ...``.

Subcommands
    build      build G(S, D) by brute force, write JSON or DOT
    formula    print the closed-form expression and its statistics
    verify     run claim checks, one JSON report per line
    chromatic  compare the closed-form chromatic number with the exact solver
    recover    recover D from a regular degree
    export     convert a graph (built or read from JSON) to json / dot / expr

Machine-readable output goes to ``--out`` (or stdout when no summary is
printed there); the human summary goes to stdout, or to stderr when stdout
carries the artifact.  The point limit can be set with RTDG_MAX_POINTS.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import algebra
from .coloring import chromatic_number_exact
from .config import DEFAULT_SEED, Limits
from .errors import NoPreimageError, RTDGError
from .graph import Graph, build_distance_graph, connected_components, is_regular
from .spaces import DistanceSet, SpaceSpec, all_distance_sets
from .verification import CLAIMS, COROLLARY_CLAIMS, formula_chromatic, plan_tasks, recover_distance_set, run_tasks


class UsageError(RTDGError):
    pass


@dataclass(frozen=True)
class RunConfig:
    space: SpaceSpec | None
    distances: DistanceSet | None
    out: str | None
    format: str | None
    limits: Limits
    seed: int = DEFAULT_SEED

    @classmethod
    def from_args(cls, args) -> RunConfig:
        space = distances = None
        if getattr(args, "space", None):
            try:
                space = SpaceSpec.parse(args.space)
            except RTDGError as exc:
                raise UsageError(f"--space: {exc}") from exc
        if getattr(args, "distances", None) is not None:
            try:
                distances = DistanceSet.parse(args.distances)
                if space is not None:
                    distances.validate(space)
            except RTDGError as exc:
                raise UsageError(f"--distances: {exc}") from exc
        overrides = {}
        if getattr(args, "max_points", None) is not None:
            overrides["max_points"] = args.max_points
        if getattr(args, "budget", None) is not None:
            overrides["coloring_node_budget"] = args.budget
        return cls(
            space=space,
            distances=distances,
            out=getattr(args, "out", None),
            format=getattr(args, "format", None),
            limits=Limits.from_env(**overrides),
            seed=getattr(args, "seed", DEFAULT_SEED),
        )

    def require_space(self):
        if self.space is None:
            raise UsageError("--space is required")
        return self.space

    def require_distances(self):
        if self.distances is None:
            raise UsageError("--distances is required")
        return self.distances


class _Output:
    """Routes the artifact and the summary so they never share a stream."""

    def __init__(self, out_path, has_artifact):
        self.out_path = out_path
        self.summary = sys.stderr if has_artifact and out_path is None else sys.stdout

    def write_artifact(self, text):
        if self.out_path is None:
            sys.stdout.write(text)
        else:
            with open(self.out_path, "w") as fh:
                fh.write(text)

    def say(self, *parts):
        print(*parts, file=self.summary)


def _render(G: Graph, fmt: str, expr=None) -> str:
    if fmt == "json":
        return G.to_json() + "\n"
    if fmt == "dot":
        return G.to_dot()
    if fmt == "expr":
        if expr is None:
            raise UsageError("format expr needs a space and distances")
        return algebra.expr_to_string(expr) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


def _graph_summary(G: Graph) -> str:
    parts = connected_components(G)
    degree = is_regular(G)
    degree_text = str(degree) if degree is not None else "irregular"
    return (
        f"vertices={G.vertex_count} edges={G.edge_count} "
        f"components={parts.component_count} degree={degree_text}"
    )


def cmd_build(config: RunConfig) -> int:
    space, D = config.require_space(), config.require_distances()
    G = build_distance_graph(space, D, config.limits.max_points)
    out = _Output(config.out, config.format is not None)
    if config.format is not None:
        out.write_artifact(_render(G, config.format))
    out.say(f"G({space.name}, {{{D}}}): {_graph_summary(G)}")
    return 0


def cmd_formula(config: RunConfig) -> int:
    space, D = config.require_space(), config.require_distances()
    E = algebra.expr_theorem(space, D)
    text = algebra.expr_to_string(E)
    if config.format == "json":
        _Output(config.out, True).write_artifact(json.dumps({"expr": text}) + "\n")
        return 0
    print(text)
    print(
        f"vertices={algebra.expr_vertex_count(E)} degree={algebra.expr_degree(E)} "
        f"components={algebra.expr_component_count(E)} chi={algebra.expr_chromatic(E)}"
    )
    return 0


def _parse_claims(text: str):
    if text in ("all",):
        return list(CLAIMS)
    if text == "corollaries":
        return list(COROLLARY_CLAIMS)
    claims = [c.strip() for c in text.split(",") if c.strip()]
    for c in claims:
        if c not in CLAIMS:
            raise UsageError(f"--claims: unknown claim {c!r}; choose from {', '.join(CLAIMS)}, all, corollaries")
    return claims


def cmd_verify(config: RunConfig, claims="structure", all_sets=False, max_sets=256, jobs=1, samples=100_000,
               timings=False) -> int:
    space = config.require_space()
    claims = _parse_claims(claims)
    needs_sets = any(c not in ("metric-axioms", "chromatic-by-size") for c in claims)
    if all_sets:
        distance_sets = all_distance_sets(space)
        if len(distance_sets) > max_sets:
            raise UsageError(f"{len(distance_sets)} distance sets exceed --max-sets {max_sets}")
    elif config.distances is not None:
        distance_sets = [config.distances]
    elif needs_sets:
        raise UsageError("give --distances or --all-distance-sets")
    else:
        distance_sets = []
    tasks = plan_tasks(space, claims, distance_sets, config.limits, config.seed, samples)
    reports = run_tasks(tasks, jobs)
    lines = "".join(r.to_json(timings) + "\n" for r in reports)
    out = _Output(config.out, True)
    out.write_artifact(lines)
    tally = {s: sum(r.status == s for r in reports) for s in ("verified", "refuted", "inconclusive")}
    out.say(f"{len(reports)} reports: " + " ".join(f"{k}={v}" for k, v in tally.items()))
    return 0 if reports and all(r.ok for r in reports) else 1


def cmd_chromatic(config: RunConfig, graph_path=None) -> int:
    if graph_path is not None:
        with open(graph_path) as fh:
            G = Graph.from_json(fh.read())
        space, D = G.space, G.distances
    else:
        space, D = config.require_space(), config.require_distances()
        G = build_distance_graph(space, D, config.limits.max_points)
    formula = None
    if space is not None and D is not None:
        formula = formula_chromatic(space, D)
        print(f"formula: {formula}")
    try:
        result = chromatic_number_exact(G, config.limits.coloring_node_budget, config.limits.max_coloring_component)
    except RTDGError as exc:
        print(f"exact: unavailable ({exc})")
        return 2
    if result.exact:
        print(f"exact: {result.upper}")
    else:
        print(f"exact: inconclusive, {result.lower} <= chi <= {result.upper}")
    if formula is None:
        return 0 if result.exact else 2
    if not result.exact:
        agree = result.lower <= formula <= result.upper
        print("agree: undecided" if agree else "agree: no")
        return 2 if agree else 1
    agree = result.upper == formula
    print("agree: yes" if agree else "agree: no")
    return 0 if agree else 1


def cmd_recover(family: str, degree: int, q=None, sizes=None, n=None) -> int:
    if family == "zq":
        if q is None:
            raise UsageError("--q is required for family zq")
        space = SpaceSpec.zq(q, n or 1)
    elif family == "sn":
        space = SpaceSpec.sn(n or 2)
    elif family == "product":
        if not sizes:
            raise UsageError("--sizes is required for family product")
        space = SpaceSpec.product([int(s) for s in sizes.split(",")])
    else:
        raise UsageError(f"unknown family {family!r}")
    try:
        D = recover_distance_set(space, degree)
    except NoPreimageError:
        print("no preimage")
        return 1
    if n is not None:
        try:
            D.validate(space)
        except RTDGError:
            print("no preimage")
            return 1
    print(str(D))
    return 0


def cmd_export(config: RunConfig, graph_path=None) -> int:
    fmt = config.format or "json"
    expr = None
    if graph_path is not None:
        with open(graph_path) as fh:
            G = Graph.from_json(fh.read())
        if fmt == "expr" and G.space is not None and G.distances is not None:
            expr = algebra.expr_theorem(G.space, G.distances)
    else:
        space, D = config.require_space(), config.require_distances()
        expr = algebra.expr_theorem(space, D)
        G = None if fmt == "expr" else build_distance_graph(space, D, config.limits.max_points)
    text = algebra.expr_to_string(expr) + "\n" if fmt == "expr" and expr is not None else _render(G, fmt, expr)
    out = _Output(config.out, True)
    out.write_artifact(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rtdg", description="Distance graphs under the Rosenbloom-Tsfasman metric")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_choices=None, distances=True):
        p.add_argument("--space", help='e.g. "zq:q=3,n=4", "sn:n=5", "product:sizes=2,3,2"')
        if distances:
            p.add_argument("--distances", help='comma separated, strictly increasing, e.g. "1,3"')
        p.add_argument("--max-points", type=int, default=None, help="point limit (env RTDG_MAX_POINTS)")
        p.add_argument("--out", help="output file (default: stdout)")
        if fmt_choices:
            p.add_argument("--format", choices=fmt_choices)

    common(sub.add_parser("build", help="build G(S, D) by brute force"), ["json", "dot"])
    common(sub.add_parser("formula", help="print the closed-form structure"), ["expr", "json"])

    p = sub.add_parser("verify", help="run claim checks")
    common(p)
    p.add_argument("--all-distance-sets", action="store_true")
    p.add_argument("--claims", default="structure", help=f"comma list of {', '.join(CLAIMS)}; or all / corollaries")
    p.add_argument("--max-sets", type=int, default=256)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=100_000, help="random triples for large metric checks")
    p.add_argument("--budget", type=int, default=None, help="coloring branch-and-bound node budget")
    p.add_argument("--timings", action="store_true", help="record wall time in reports (not reproducible)")

    p = sub.add_parser("chromatic", help="closed-form vs exact chromatic number")
    common(p)
    p.add_argument("--graph", help="graph JSON written by build")
    p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("recover", help="recover D from a regular degree")
    p.add_argument("--family", required=True, choices=["zq", "sn", "product"])
    p.add_argument("--degree", required=True, type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int, help="optional ambient dimension to validate against")
    p.add_argument("--sizes")

    p = sub.add_parser("export", help="write a graph as json, dot or expr")
    common(p, ["json", "dot", "expr"])
    p.add_argument("--graph", help="graph JSON written by build")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "recover":
            return cmd_recover(args.family, args.degree, q=args.q, sizes=args.sizes, n=args.n)
        config = RunConfig.from_args(args)
        if args.command == "build":
            return cmd_build(config)
        if args.command == "formula":
            return cmd_formula(config)
        if args.command == "verify":
            return cmd_verify(
                config, args.claims, args.all_distance_sets, args.max_sets, args.jobs, args.samples, args.timings
            )
        if args.command == "chromatic":
            return cmd_chromatic(config, args.graph)
        if args.command == "export":
            return cmd_export(config, args.graph)
    except RTDGError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(args.command)


if __name__ == "__main__":
    sys.exit(main())
