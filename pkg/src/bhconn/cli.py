"""Command-line front end: ``bhconn {gen,cut,verify,kappa,props,export}``.

Exit status: 0 success, 1 mismatch or not a cut, 2 usage error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import properties
from .cuts import ShapeViolation, construct, load_witness, verify
from .patterns import PATTERNS, CapExceeded, Shape
from .search import DEFAULT_LEVEL_BUDGET, BudgetExhausted, structure_connectivity
from .topology import DEFAULT_MAX_DIM, DimensionError, UnknownVertexError, build, load_graph, parse_vertex

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def closed_form(pattern: Shape, n: int) -> int | None:
    """Closed-form structure/substructure connectivity of BH_n."""
    if pattern is Shape.K1:
        return 2 * n
    if n < 2:
        return None
    return 2 * n if pattern is Shape.K11 else n


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    g = build(args.n, max_dim=args.max_dim)
    text = g.to_dot() if args.format == "dot" else g.to_json() + "\n"
    _emit(text, args.output)
    info = sys.stdout if args.output else sys.stderr
    print(f"BH_{g.n}: {g.num_vertices} vertices, {g.num_edges} edges", file=info)
    return EXIT_OK


def cmd_cut(args) -> int:
    g = build(args.n, max_dim=args.max_dim)
    u = parse_vertex(args.u) if args.u else (0,) * g.n
    cut = construct(g, Shape.parse(args.H), u)
    _emit(cut.to_json(indent=1) + "\n", args.output)
    info = sys.stdout if args.output else sys.stderr
    print(f"|F| = {len(cut.elements)}, |V(F)| = {len(cut.removed)}", file=info)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    cut = load_witness(args.witness)
    try:
        verdict = verify(g, cut)
    except ShapeViolation as exc:
        print(f"shape violation: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    print(json.dumps(verdict.to_dict(g)))
    return EXIT_OK if verdict.is_cut else EXIT_MISMATCH


def cmd_kappa(args) -> int:
    g = build(args.n, max_dim=args.max_dim)
    pats = list(PATTERNS) if args.all or not args.H else [Shape.parse(args.H)]
    modes = ["structure", "substructure"] if args.mode == "both" else [args.mode]
    rows, status = [], EXIT_OK
    for mode in modes:
        for p in pats:
            expected = closed_form(p, g.n)
            row = {"n": g.n, "H": p.value, "mode": mode, "closed_form": expected}
            if args.include_p4 and p is Shape.C4 and mode == "substructure":
                row["note"] = "P4 elements admitted"
            try:
                rep = structure_connectivity(
                    g, p, mode, include_p4=args.include_p4, level_budget=args.budget
                )
                row.update(value=rep.value, explored=rep.explored, match=rep.value == expected)
                if expected is not None and rep.value != expected:
                    status = max(status, EXIT_MISMATCH)
            except (BudgetExhausted, CapExceeded) as exc:
                row.update(value=None, match=None, note=f"budget exhausted: {exc}")
                status = EXIT_BUDGET
            rows.append(row)
    if args.json:
        print(json.dumps(rows, indent=1))
    else:
        print(f"{'n':>2} {'H':>4} {'mode':>12} {'value':>6} {'closed':>6}  match")
        for r in rows:
            val = "-" if r["value"] is None else r["value"]
            pv = "-" if r["closed_form"] is None else r["closed_form"]
            match = {True: "yes", False: "NO", None: "?"}[r["match"]]
            note = f"  ({r['note']})" if "note" in r else ""
            print(f"{r['n']:>2} {r['H']:>4} {r['mode']:>12} {val:>6} {pv:>6}  {match}{note}")
    return status


def cmd_props(args) -> int:
    if args.negative_controls:
        controls = properties.negative_controls()
        results = [r for _, r in controls]
        ok = all(not r.holds and properties.recheck(g, r) for g, r in controls)
    else:
        results = properties.run_suite(args.n or [1, 2, 3])
        ok = all(r.holds for r in results)
    _emit(properties.suite_to_json(results, indent=1) + "\n", args.output)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_export(args) -> int:
    g = build(args.n, max_dim=args.max_dim)
    if args.witness:
        cut = load_witness(args.witness)
        base = [g.index(cut.base_vertex)] if cut.base_vertex else []
        text = g.to_dot(highlight=cut.removed, mark=base)
    elif args.format == "json":
        text = g.to_json() + "\n"
    else:
        text = g.to_dot()
    _emit(text, args.output)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bhconn", description=__doc__.splitlines()[0])
    parser.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM, help="dimension cap")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate BH_n as JSON or DOT")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("cut", help="emit the explicit cut family around a vertex")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-H", required=True, help="K1, K11, K12, K13 or C4")
    p.add_argument("-u", help="base vertex as a0,a1,...; default origin")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("verify", help="verify a witness file against a graph file")
    p.add_argument("graph")
    p.add_argument("witness")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kappa", help="exact structure/substructure connectivity vs closed form")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-H")
    p.add_argument("--all", action="store_true")
    p.add_argument("--mode", choices=["structure", "substructure", "both"], default="structure")
    p.add_argument("--include-p4", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_LEVEL_BUDGET, help="families per level")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("props", help="run the structural property suite")
    p.add_argument("-n", type=int, action="append")
    p.add_argument("--negative-controls", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("export", help="DOT/JSON export, optionally highlighting a witness")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--witness")
    p.add_argument("--format", choices=["json", "dot"], default="dot")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if getattr(args, "budget", 1) <= 0:
        parser.error("budget must be positive")
    try:
        return args.func(args)
    except (DimensionError, UnknownVertexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExhausted, CapExceeded) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
