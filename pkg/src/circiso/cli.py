"""Command-line surface: family, check, t2, annexure, export-dot.

Exit codes: 0 when the command succeeded and (for check/t2) a relation was
found, 1 when no relation or a table mismatch was found, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog
from .families import PrimeCubeParams, family_orbit
from .iso import KIND_UNRELATED, classify, t2_orbit

USAGE_ERROR = 2


def _family_params(args: argparse.Namespace) -> PrimeCubeParams:
    extras = None
    if args.extras:
        extras = tuple(int(v) for v in args.extras.split(","))
    return PrimeCubeParams(p=args.p, n=args.n, x=args.x, y=args.y, i=args.i, extras=extras)


def cmd_family(args: argparse.Namespace) -> int:
    params = _family_params(args)
    sets = family_orbit(params)
    if args.json:
        print(catalog.records_to_json(catalog.orbit_records(params)), end="")
        return 0
    if args.dot:
        for idx, s in enumerate(sets):
            graph = catalog.make_graph(s.n, s)
            print(graph.to_dot(name=f"orbit_{idx}"), end="")
        return 0
    for s in sets:
        if args.full:
            print(f"C_{s.n}(" + ",".join(str(v) for v in s.expanded()) + ")")
        else:
            print(f"C_{s.n}({s})")
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    g1 = catalog.graph_from_args(args.n, args.set_a)
    g2 = catalog.graph_from_args(args.n, args.set_b)
    verdict = classify(g1, g2, r=args.r)
    print(verdict)
    if verdict.details:
        print(f"note: {verdict.details}")
    return 0 if verdict.kind != KIND_UNRELATED else 1


def cmd_t2(args: argparse.Namespace) -> int:
    g = catalog.graph_from_args(args.n, args.set)
    orbit = t2_orbit(g, args.r)
    if orbit is None:
        print(f"empty orbit: no type-2 partner of {g} with respect to r={args.r}")
        return 1
    if args.json:
        records = [
            catalog.CatalogRecord(
                n=member.n,
                jumps=member.jumps,
                orbit=0,
                witness=(
                    catalog.Witness(kind="identical")
                    if shift == 0
                    else catalog.Witness(kind="type2", r=orbit.r, t=shift)
                ),
                provenance=f"t2-orbit(base={g}, r={orbit.r})",
            )
            for member, shift in zip(orbit.members, orbit.shifts)
        ]
        print(catalog.records_to_json(records), end="")
        return 0
    print(f"t1={orbit.t1} order={orbit.size} r={orbit.r}")
    for member, shift in zip(orbit.members, orbit.shifts):
        print(f"t={shift}: C_{member.n}({member.connection_set})")
    closed = orbit.verify_group_law()
    print(f"group law (closure, identity, inverses): {'verified' if closed else 'FAILED'}")
    return 0 if closed else 1


def cmd_annexure(args: argparse.Namespace) -> int:
    text = catalog.render_annexure()
    if args.output:
        Path(args.output).write_text(text)
    if args.diff is None:
        if not args.output:
            print(text, end="")
        return 0
    golden = (
        catalog.load_golden() if args.diff == "golden" else Path(args.diff).read_text()
    )
    mismatches = catalog.diff_against_golden(text, golden)
    for line in mismatches:
        print(line)
    print(f"{len(mismatches)} mismatches")
    return 0 if not mismatches else 1


def cmd_export_dot(args: argparse.Namespace) -> int:
    graph = catalog.graph_from_args(args.n, args.set)
    text = graph.to_dot()
    if args.output:
        Path(args.output).write_text(text)
    else:
        print(text, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circiso",
        description="Circulant graphs: build type-2 families, classify isomorphisms, reproduce the orbit tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    family = sub.add_parser("family", help="print one parametric orbit")
    family.add_argument("-p", type=int, required=True, help="prime")
    family.add_argument("-n", type=int, required=True, help="order multiplier (order = n*p^3)")
    family.add_argument("-x", type=int, required=True)
    family.add_argument("-y", type=int, default=0)
    family.add_argument("-i", type=int, default=1, help="starting member index (1..p)")
    family.add_argument("--extras", help="comma list replacing the {p, n*p^3-p} pair")
    family.add_argument("--json", action="store_true")
    family.add_argument("--dot", action="store_true")
    family.add_argument("--full", action="store_true", help="print full symmetric sets")
    family.set_defaults(func=cmd_family)

    check = sub.add_parser("check", help="classify the relation between two connection sets")
    check.add_argument("-n", type=int, required=True)
    check.add_argument("set_a")
    check.add_argument("set_b")
    check.add_argument("-r", type=int, default=None, help="jump to shear with respect to")
    check.set_defaults(func=cmd_check)

    t2 = sub.add_parser("t2", help="type-2 orbit of a graph with respect to a jump")
    t2.add_argument("-n", type=int, required=True)
    t2.add_argument("set")
    t2.add_argument("-r", type=int, required=True)
    t2.add_argument("--json", action="store_true")
    t2.set_defaults(func=cmd_t2)

    annexure = sub.add_parser("annexure", help="regenerate the orbit tables")
    annexure.add_argument("-o", "--output", help="write the tables to this path")
    annexure.add_argument(
        "--diff",
        help="compare against a golden file ('golden' = packaged transcription)",
    )
    annexure.set_defaults(func=cmd_annexure)

    export = sub.add_parser("export-dot", help="DOT export of one circulant graph")
    export.add_argument("-n", type=int, required=True)
    export.add_argument("set")
    export.add_argument("-o", "--output")
    export.set_defaults(func=cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
