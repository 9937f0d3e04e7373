"""Command-line front end.

Subcommands: construct (build and optionally verify), verify (fullness
report for a host), bound (formula values), search (exact minimum via
enumeration), design (affine plane as JSON).  JSON goes to stdout,
diagnostics to stderr.  Exit codes: 0 success / verdict true, 1 verdict
false or failed verification, 2 usage or parse error, 3 internal
invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds, constructions, designs, oracle, verifier
from .constructions import InternalInvariantError
from .graphs import Graph6Error, empty, from_graph6, star, to_graph6
from .patterns import parse_pattern_list

_THEOREMS = ("cyclic", "design", "h_vs_empty", "star", "complete_bipartite", "delta_zero")


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _read_host(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    line = text.strip().splitlines()
    if not line:
        raise Graph6Error("no graph6 data found", 0)
    return from_graph6(line[0].strip())


def _cmd_construct(args) -> int:
    tag = args.theorem
    if tag == "cyclic":
        if not args.patterns:
            raise ValueError("--theorem cyclic requires --patterns")
        pats = parse_pattern_list(args.patterns)
        g, recipe = constructions.cyclic_full(pats)
    elif tag == "design":
        if not args.patterns or args.q is None:
            raise ValueError("--theorem design requires --patterns and --q")
        pats = parse_pattern_list(args.patterns)
        g, recipe = constructions.design_full(pats, designs.affine_plane(args.q))
    elif tag == "h_vs_empty":
        if not args.patterns or args.n is None:
            raise ValueError("--theorem h_vs_empty requires --patterns (one pattern) and --n")
        pats = parse_pattern_list(args.patterns)
        if len(pats) != 1:
            raise ValueError("--theorem h_vs_empty takes exactly one pattern")
        g, recipe = constructions.h_vs_empty(pats[0], args.n, args.r)
        pats = [pats[0], empty(args.n)]
    elif tag == "star":
        if args.m is None or args.n is None:
            raise ValueError("--theorem star requires --m and --n")
        g, recipe = constructions.star_full(args.m, args.n, args.k)
        pats = [star(args.m), empty(args.n)]
    elif tag == "complete_bipartite":
        if args.m is None or args.n is None:
            raise ValueError("--theorem complete_bipartite requires --m and --n")
        g, recipe = constructions.complete_bipartite_full(args.m, args.n)
        pats = [star(args.m), empty(args.n)]
    else:
        if not args.patterns or args.n is None:
            raise ValueError("--theorem delta_zero requires --patterns (one pattern) and --n")
        pats = parse_pattern_list(args.patterns)
        if len(pats) != 1:
            raise ValueError("--theorem delta_zero takes exactly one pattern")
        g, recipe = constructions.delta_zero_construction(pats[0], args.n)
        pats = [pats[0], empty(args.n)]

    verified = None
    if args.verify:
        verified = verifier.is_full(g, pats).verdict
    g6 = to_graph6(g)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(g6 + "\n")
    if args.recipe_out:
        with open(args.recipe_out, "w") as fh:
            json.dump(recipe.to_dict(), fh, sort_keys=True, indent=2)
            fh.write("\n")
    _emit({"graph6": g6, "order": g.order, "recipe": recipe.to_dict(), "verified": verified})
    if verified is False:
        print("verification failed: construction is not full for its patterns", file=sys.stderr)
        return 1
    return 0


def _cmd_verify(args) -> int:
    host = _read_host(args.host)
    pats = parse_pattern_list(args.patterns)
    report = verifier.is_full(host, pats)
    _emit(report.to_dict())
    return 0 if report.verdict else 1


def _cmd_bound(args) -> int:
    ways = [w for w in (args.egh, args.star, args.patterns) if w]
    if len(ways) != 1:
        raise ValueError("choose exactly one of --egh, --star, --patterns")
    if args.egh:
        m, n = args.egh
        _emit({"formula": "egh", "m": m, "n": n, "value": bounds.egh_formula(m, n)})
        return 0
    if args.star:
        m, n = args.star
        _emit({"formula": "star_exact", "m": m, "n": n, "value": bounds.star_exact(m, n)})
        return 0
    pats = parse_pattern_list(args.patterns)
    summary = bounds.summarize(pats, args.n)
    _emit(summary.to_dict())
    return 0


def _cmd_search(args) -> int:
    pats = parse_pattern_list(args.patterns)
    result = oracle.f_exact(
        pats,
        lower_hint=args.lower,
        upper_hint=args.max_order,
        cache_dir=args.cache_dir,
    )
    payload = result.to_dict()
    del payload["wall_time"]  # keep reruns byte-identical
    _emit(payload)
    return 0


def _cmd_design(args) -> int:
    plane = designs.affine_plane(args.q)
    problems = designs.validate_design(plane)
    if problems:
        raise InternalInvariantError("; ".join(problems))
    payload = plane.to_dict()
    payload["valid"] = True
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, sort_keys=True, indent=2)
            fh.write("\n")
    _emit(payload)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fullgraph",
        description="Constructions, bounds, and exact search for graphs whose every "
                    "vertex lies in induced copies of prescribed patterns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a graph by one of the known constructions")
    c.add_argument("--theorem", required=True, choices=_THEOREMS)
    c.add_argument("--patterns", help="comma-separated pattern names, e.g. K3,E3")
    c.add_argument("--m", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int, help="star construction: leaves per center")
    c.add_argument("--r", type=int, help="h_vs_empty construction: block count")
    c.add_argument("--q", type=int, help="design construction: affine plane order")
    c.add_argument("--out", help="write the graph6 string to this file")
    c.add_argument("--recipe-out", help="write the recipe JSON to this file")
    c.add_argument("--verify", dest="verify", action="store_true", default=True)
    c.add_argument("--no-verify", dest="verify", action="store_false")
    c.set_defaults(func=_cmd_construct)

    v = sub.add_parser("verify", help="check every vertex lies in induced copies of the patterns")
    v.add_argument("host", help="path to a graph6 file, or - for stdin")
    v.add_argument("--patterns", required=True)
    v.set_defaults(func=_cmd_verify)

    b = sub.add_parser("bound", help="bound formulas for an instance")
    b.add_argument("--egh", nargs=2, type=int, metavar=("M", "N"),
                   help="exact value for complete-vs-edgeless")
    b.add_argument("--star", nargs=2, type=int, metavar=("M", "N"),
                   help="exact value for star-vs-edgeless")
    b.add_argument("--patterns")
    b.add_argument("--n", type=int, help="append an edgeless pattern of this order")
    b.set_defaults(func=_cmd_bound)

    s = sub.add_parser("search", help="exact minimum order by exhaustive enumeration")
    s.add_argument("--patterns", required=True)
    s.add_argument("--max-order", type=int, default=oracle.ENUMERATION_ORDER_CAP)
    s.add_argument("--lower", type=int, help="trusted lower bound to start the scan at")
    s.add_argument("--cache-dir", help="result cache directory "
                   "(default: $FULLGRAPH_CACHE, else ~/.cache/fullgraph)")
    s.set_defaults(func=_cmd_search)

    d = sub.add_parser("design", help="emit an affine plane as JSON")
    d.add_argument("--q", type=int, required=True)
    d.add_argument("--out")
    d.set_defaults(func=_cmd_design)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
