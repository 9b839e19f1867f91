"""Command-line front end.

Exit codes: 0 success, 1 verification false, 2 usage or input error,
3 solver inconclusive (budget exhausted), 4 reproduction failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from . import formats
from .bounds import full_bounds
from .errors import BudgetExceeded, EqdimError, UnknownVertex
from .graph import DEFAULT_CLIQUE_CAP, Graph, all_pairs_distances, graph_stats
from .hitting import is_distance_equalizer, w_set
from .polytopes import ESTABLISHED_MIN_N, SmallNWarning, generate, normalize_tag
from .repro import run_full_repro
from .solver import default_budget, eqdim_exact

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_INCONCLUSIVE, EXIT_REPRO = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(text: str, out: str | None = None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load(args) -> Graph:
    try:
        return formats.read_graph(args.input, args.input_format)
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc.strerror or exc}") from None


def parse_vertex_set(g: Graph, spec: str) -> list[int]:
    """Comma-separated names; ``x*`` expands to the whole block ``x0, x1, ...``."""
    ids: set[int] = set()
    for token in (t.strip() for t in spec.split(",")):
        if not token:
            continue
        if token.endswith("*"):
            prefix = token[:-1]
            block = [
                i for i, v in enumerate(g.vertices)
                if v.startswith(prefix) and v[len(prefix):].isdigit()
            ]
            if not block:
                raise UnknownVertex(token)
            ids.update(block)
        else:
            ids.add(g.id_of(token))
    return sorted(ids)


# -- commands ----------------------------------------------------------------


def cmd_gen(args) -> int:
    try:
        tag = normalize_tag(args.cls)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", SmallNWarning)
        g = generate(tag, args.n)
    for w in caught:
        print(f"warning: {w.message}; results are only established for n >= {ESTABLISHED_MIN_N}", file=sys.stderr)
    text = formats.dumps_json(g) if args.format == "json" else formats.dumps_dimacs(g)
    summary = f"{g.name}: {g.n} vertices, {g.edge_count} edges"
    if args.out:
        _emit(text, args.out)
        print(summary)
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    return EXIT_OK


def cmd_dist(args) -> int:
    g = _load(args)
    d = all_pairs_distances(g)
    if args.pair:
        u, v = g.ids_of(args.pair)
        if args.format == "json":
            _emit(_dump({"pair": args.pair, "distance": d[u, v]}))
        else:
            print(f"d({args.pair[0]}, {args.pair[1]}) = {d[u, v]}")
        return EXIT_OK
    if args.format == "json":
        _emit(_dump({"vertices": list(g.vertices), "diameter": d.diameter, "d": d.d.tolist()}))
    else:
        width = max(len(v) for v in g.vertices)
        print(" " * width + " " + " ".join(f"{v:>{width}}" for v in g.vertices))
        for i, v in enumerate(g.vertices):
            print(f"{v:>{width}} " + " ".join(f"{x:>{width}}" for x in d.d[i].tolist()))
        print(f"diameter = {d.diameter}")
    return EXIT_OK


def cmd_wset(args) -> int:
    g = _load(args)
    u, v = g.id_of(args.u), g.id_of(args.v)
    w = w_set(all_pairs_distances(g), u, v)
    members = g.names_of(w.members)
    if args.format == "json":
        _emit(_dump({"pair": [args.u, args.v], "members": members}))
    else:
        print(f"W({args.u}, {args.v}) = {{{', '.join(members)}}}")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load(args)
    S = parse_vertex_set(g, args.set)
    result = is_distance_equalizer(all_pairs_distances(g), S)
    if result:
        payload = {"valid": True, "certificate": result.to_json(g)}
        if args.certificate:
            Path(args.certificate).write_text(_dump(result.to_json(g)), encoding="utf-8")
        if args.format == "json":
            _emit(_dump(payload))
        else:
            print(f"valid distance-equalizer set of size {result.value}")
            for (u, v), x in sorted(result.witnesses.items()):
                print(f"  {g.vertices[u]} {g.vertices[v]} -> {g.vertices[x]}")
        return EXIT_OK
    pair = g.names_of(result.pair)
    if args.format == "json":
        _emit(_dump({"valid": False, "set": g.names_of(S), "failing_pair": pair}))
    else:
        print(f"not a distance-equalizer set: no vertex of S is equidistant from {pair[0]} and {pair[1]}")
    return EXIT_FALSE


def cmd_solve(args) -> int:
    g = _load(args)
    env_time, env_nodes = default_budget()
    time_limit = args.time_limit if args.time_limit is not None else env_time
    node_limit = args.node_limit if args.node_limit is not None else env_nodes
    for name, value in (("--time-limit", time_limit), ("--node-limit", node_limit)):
        if value is not None and value <= 0:
            raise UsageError(f"{name} must be positive")
    try:
        result = eqdim_exact(
            g, time_limit=time_limit, node_limit=node_limit,
            parallel=args.parallel, workers=args.workers,
        )
        code = EXIT_OK
    except BudgetExceeded as exc:
        result = exc.partial
        code = EXIT_INCONCLUSIVE

    if args.certificate and result.certificate is not None:
        Path(args.certificate).write_text(_dump(result.certificate.to_json(g)), encoding="utf-8")
    if args.format == "json":
        _emit(_dump(result.to_json(g)))
        return code
    if result.exact:
        print(f"eqdim = {result.value}")
    else:
        print(f"eqdim in [{result.lower}, {result.upper}] (budget exhausted, not proven optimal)")
    print(f"set: {', '.join(g.names_of(result.S))}")
    print(f"search nodes: {result.nodes}")
    if args.certificate:
        print(f"certificate: {args.certificate}")
    return code


def cmd_bounds(args) -> int:
    g = _load(args)
    d = all_pairs_distances(g)
    stats = graph_stats(g, d, cap=args.omega_cap)
    report = full_bounds(g, d, stats)
    order = {"exact": 0, "lower": 1, "upper": 2}
    entries = sorted(
        report.entries,
        key=lambda b: (order[b.kind], -b.value if b.kind == "lower" else b.value),
    )
    if args.format == "json":
        _emit(_dump({
            "graph": g.name,
            "stats": stats.as_dict(),
            "bounds": [b.as_dict() for b in entries],
            "interval": [report.lower, report.upper],
        }))
        return EXIT_OK
    print(f"{g.name}: n={g.n}, m={g.edge_count}, max degree {stats.max_degree}, "
          f"min degree {stats.min_degree}, diameter {stats.diameter}, "
          f"clique number {stats.clique_number}, independence number {stats.independence_number}")
    for b in entries:
        print(f"{b.kind}: {b.value} ({b.source})")
    print(f"interval: [{report.lower}, {report.upper}]")
    return EXIT_OK


def cmd_repro(args) -> int:
    if args.n_max < ESTABLISHED_MIN_N:
        raise UsageError(f"--n-max must be at least {ESTABLISHED_MIN_N}")
    try:
        classes = [normalize_tag(c) for c in args.cls] if args.cls else None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    run = run_full_repro(args.n_max, classes)
    _emit(run.dumps() if args.format == "json" else run.to_text(), args.out)
    return EXIT_OK if run.ok else EXIT_REPRO


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqdim",
        description="Equidistant dimension of graphs and convex polytope families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("input", help="graph file (.json, otherwise DIMACS text)")
        p.add_argument("--input-format", choices=["json", "dimacs"], default=None)

    def output_format(p, choices=("text", "json")):
        p.add_argument("--format", choices=choices, default=choices[0])

    p = sub.add_parser("gen", help="generate a polytope graph")
    p.add_argument("--class", dest="cls", required=True, help="r2, s, s2 or t")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="output path (default: stdout)")
    output_format(p, ("json", "dimacs"))
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("dist", help="distance matrix or a single distance")
    graph_input(p)
    p.add_argument("--pair", nargs=2, metavar=("U", "V"))
    output_format(p)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("wset", help="vertices equidistant from U and V")
    graph_input(p)
    p.add_argument("u")
    p.add_argument("v")
    output_format(p)
    p.set_defaults(func=cmd_wset)

    p = sub.add_parser("verify", help="check a distance-equalizer set")
    graph_input(p)
    p.add_argument("--set", required=True, help="comma-separated names; 'a*' means the whole block")
    p.add_argument("--certificate", help="write the certificate JSON here on success")
    output_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="exact equidistant dimension")
    graph_input(p)
    p.add_argument("--time-limit", type=float, default=None, help="seconds (env EQDIM_TIME_LIMIT)")
    p.add_argument("--node-limit", type=int, default=None, help="search nodes (env EQDIM_NODE_LIMIT)")
    p.add_argument("--parallel", action="store_true", help="split the root branches across processes")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--certificate", help="write the certificate JSON here")
    output_format(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bounds", help="known lower and upper bounds")
    graph_input(p)
    p.add_argument("--omega-cap", type=int, default=DEFAULT_CLIQUE_CAP,
                   help="largest order for exact clique/independence search")
    output_format(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("repro", help="re-verify all polytope claims")
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--class", dest="cls", action="append", help="restrict to a class (repeatable)")
    p.add_argument("--out")
    output_format(p)
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, EqdimError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
