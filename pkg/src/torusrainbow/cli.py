"""Command-line front end.

Exit codes: 0 success / verification passed, 1 verification failed,
2 input error (bad dims, malformed file), 3 internal construction failure,
4 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .document import (
    coloring_to_document,
    export_dot,
    parse_document,
    read_document,
    write_document,
)
from .errors import BudgetExceededError, DocumentError, TorusRainbowError
from .oracle import SearchBudget, exact_src
from .planner import old_bounds, plan_and_color, theorem_bound
from .torus import make_shape
from .verifier import is_strong_rainbow

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_CONSTRUCTION = 3
EXIT_BUDGET = 4


def _parse_dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(part.strip()) for part in text.split(","))
    except ValueError as exc:
        raise DocumentError(f"cannot parse dims {text!r}: {exc}") from exc
    make_shape(dims)  # validates emptiness / minimum length
    return dims


def _mesh_name(dims) -> str:
    return "□".join(f"C_{n}" for n in dims)


def _workers() -> int:
    return max(1, os.cpu_count() or 1)


def cmd_bounds(args) -> int:
    dims = _parse_dims(args.dims)
    lower, old_upper = old_bounds(dims)
    new_upper = theorem_bound(dims)
    mu = sum(1 for n in dims if n % 2 == 0)
    if args.json:
        print(
            json.dumps(
                {
                    "dims": list(dims),
                    "mu": mu,
                    "diameter_lower": lower,
                    "old_upper": old_upper,
                    "new_upper": new_upper,
                }
            )
        )
    else:
        print(f"mesh: {_mesh_name(dims)}")
        print(f"even factors (mu): {mu}")
        print(f"diameter lower bound: {lower}")
        print(f"product upper bound:  {old_upper}")
        print(f"improved upper bound: {new_upper}")
    return EXIT_OK


def cmd_color(args) -> int:
    dims = _parse_dims(args.dims)
    plan, coloring, report = plan_and_color(dims)
    check = is_strong_rainbow(coloring, workers=_workers())
    if not check.passed:
        print(
            f"construction bug: {len(check.failing_pairs)} of {check.pairs_checked} "
            "pairs lack a rainbow geodesic",
            file=sys.stderr,
        )
        return EXIT_CONSTRUCTION
    doc = coloring_to_document(
        coloring, plan=plan, provenance=f"torusrainbow {__version__} plan_and_color"
    )
    write_document(args.out, doc)
    print(f"mesh: {_mesh_name(dims)}")
    print(f"plan: {plan.describe()}")
    print(
        f"colors used: {report.achieved_colors} "
        f"(improved bound {report.new_upper}, product bound {report.old_upper})"
    )
    print(f"verified strong rainbow over {check.pairs_checked} pairs")
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    coloring, _, _ = parse_document(read_document(args.path))
    report = is_strong_rainbow(
        coloring, witness_cap=max(args.witnesses, 16), workers=_workers()
    )
    name = _mesh_name(coloring.shape.dims)
    if report.passed:
        print(
            f"{name}: strong rainbow with {coloring.palette_size} colors "
            f"({report.pairs_checked} pairs checked)"
        )
        if args.witnesses:
            for (u, v), path in list(report.witnesses.items())[: args.witnesses]:
                steps = " ".join(str(p) for p in path)
                print(f"  witness {u} -> {v}: {steps}")
        return EXIT_OK
    print(
        f"{name}: NOT strong rainbow, {len(report.failing_pairs)} of "
        f"{report.pairs_checked} pairs lack a rainbow geodesic"
    )
    for u, v in report.failing_pairs[:20]:
        print(f"  failing pair {u} -- {v}")
    if len(report.failing_pairs) > 20:
        print(f"  ... and {len(report.failing_pairs) - 20} more")
    return EXIT_VERIFY_FAIL


def cmd_exact(args) -> int:
    dims = _parse_dims(args.dims)
    shape = make_shape(dims)
    budget = SearchBudget(max_edges=args.budget_edges, max_colors=args.budget_colors)
    value, witness = exact_src(shape, budget)
    out = args.out or f"src-witness-{'x'.join(str(n) for n in dims)}.json"
    write_document(
        out,
        coloring_to_document(witness, provenance=f"torusrainbow {__version__} exact_src"),
    )
    print(f"exact src({_mesh_name(dims)}) = {value}")
    print(f"witness written to {out}")
    return EXIT_OK


def cmd_counterexample(args) -> int:
    dims = _parse_dims(args.dims)
    plan, coloring, report = plan_and_color(dims)
    check = is_strong_rainbow(coloring, workers=_workers())
    if not check.passed:
        print("construction bug: planner coloring failed verification", file=sys.stderr)
        return EXIT_CONSTRUCTION
    name = _mesh_name(dims)
    groups = " x ".join(f"Z_{n}" for n in dims)
    conjectured = report.old_upper
    achieved = report.achieved_colors
    print(f"mesh: {name}, the Cayley graph of {groups} with one generator per factor")
    print(f"conjectured value sum(ceil(n/2)) = {conjectured}")
    print(
        f"verified strong rainbow coloring with {achieved} colors "
        f"({check.pairs_checked} pairs checked)"
    )
    print(f"diameter lower bound = {report.diameter_lower}")
    if achieved < conjectured:
        if achieved == report.diameter_lower:
            print(f"conclusion: src({name}) = {achieved} < {conjectured}")
        else:
            print(f"conclusion: src({name}) <= {achieved} < {conjectured}")
        print("the conjectured formula fails on this mesh")
    else:
        print(f"no gap: {achieved} colors match the conjectured value")
    return EXIT_OK


def cmd_export_dot(args) -> int:
    coloring, _, _ = parse_document(read_document(args.path))
    text = export_dot(coloring)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"wrote {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torusrainbow",
        description="Strong rainbow edge colorings of toroidal meshes (products of cycles).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="print lower/upper bounds for a dims tuple")
    p.add_argument("dims", help="comma-separated cycle lengths, e.g. 8,7,5")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("color", help="build, verify and save a coloring")
    p.add_argument("dims")
    p.add_argument("--out", required=True, help="output JSON path")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="verify a saved coloring document")
    p.add_argument("path")
    p.add_argument(
        "--witnesses",
        type=int,
        nargs="?",
        const=16,
        default=0,
        help="print up to N sample rainbow geodesics (default 16 when bare)",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="exact src by exhaustive search (tiny meshes)")
    p.add_argument("dims")
    p.add_argument("--budget-edges", type=int, default=18)
    p.add_argument("--budget-colors", type=int, default=5)
    p.add_argument("--out", help="witness output path")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser(
        "counterexample",
        help="show the gap between the conjectured formula and an achieved coloring",
    )
    p.add_argument("--dims", default="4,3")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("export-dot", help="render a coloring document as DOT")
    p.add_argument("path")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DocumentError, TorusRainbowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
