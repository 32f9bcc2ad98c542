"""Command line front end (``cdlat``).

Exit codes: 0 success, 1 invalid input, 2 order cap or enumeration budget
exceeded, 3 a verification check failed or errored.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .catalog import catalog_group, catalog_names, catalog_order
from .central import central_product
from .errors import CDLatticeError, LimitExceeded
from .io import central_result_to_json, lattice_document, lattice_dot, load_central_spec, load_group
from .lattice import cd_lattice
from .subgroups import DEFAULT_BUDGET
from .suite import DEFAULT_MAX_DECOMPOSITIONS, STATEMENTS, Selector, run_suite, summarize
from .theorems import ERROR, FAIL

EXIT_INPUT, EXIT_LIMIT, EXIT_FAILED = 1, 2, 3


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _csv(value: str) -> tuple[str, ...]:
    return tuple(x.strip() for x in value.split(",") if x.strip())


def cmd_cd(args: argparse.Namespace) -> int:
    g = catalog_group(args.catalog) if args.catalog else load_group(args.file)
    lat = cd_lattice(g, budget=args.budget)
    text = _dumps(lattice_document(lat)) if args.format == "json" else lattice_dot(lat)
    _emit(text, args.out)
    return 0


def cmd_product(args: argparse.Namespace) -> int:
    spec = load_central_spec(args.spec)
    name = args.name or f"{spec.a.name}*{spec.b.name}"
    res = central_product(spec, name)
    _emit(_dumps(central_result_to_json(res)), args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    statements = _csv(args.only) if args.only else None
    if statements:
        unknown = [s for s in statements if s not in STATEMENTS]
        if unknown:
            print(f"error: unknown statement id(s): {', '.join(unknown)}", file=sys.stderr)
            return EXIT_INPUT
    selector = Selector(
        max_order=args.max_order,
        names=_csv(args.group) if args.group else None,
        statements=statements,
    )
    reports = run_suite(selector, args.budget, max_decompositions=args.max_decompositions or None)
    if args.json:
        _emit(_dumps([r.to_json(timings=args.timings) for r in reports]), args.out)
    else:
        lines = []
        for r in reports:
            line = f"{r.status.upper():5s}  {r.statement:26s}  {r.input}"
            if args.timings:
                line += f"  ({r.ms:.1f} ms)"
            if r.witness is not None and r.status != "skip":
                line += f"\n       witness: {json.dumps(r.witness)}"
            lines.append(line)
        counts = summarize(reports)
        lines.append(
            f"{len(reports)} checks: {counts['pass']} passed, {counts['fail']} failed, "
            f"{counts['skip']} skipped, {counts['error']} errors"
        )
        _emit("\n".join(lines) + "\n", args.out)
    bad = any(r.status in (FAIL, ERROR) for r in reports)
    return EXIT_FAILED if bad else 0


def cmd_catalog_list(args: argparse.Namespace) -> int:
    lines = [f"{n}\t{catalog_order(n)}" for n in catalog_names(args.max_order)]
    _emit("\n".join(lines) + "\n", None)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdlat", description="Chermak-Delgado lattices and central products of finite groups."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cd", help="compute the Chermak-Delgado lattice of a group")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--catalog", metavar="NAME", help="catalog group name, e.g. Q8 or D8")
    src.add_argument("--file", metavar="PATH", help="group JSON file")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="subgroup enumeration budget")
    p.set_defaults(func=cmd_cd)

    p = sub.add_parser("product", help="build a central product from a spec file")
    p.add_argument("spec", metavar="SPEC", help="central-product spec JSON")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--name", help="name for the constructed group")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--max-order", type=int, metavar="N")
    p.add_argument("--only", metavar="ID[,ID...]", help="statement ids to run")
    p.add_argument("--group", metavar="NAME[,NAME...]", help="restrict to these inputs")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--timings", action="store_true", help="include per-check timings")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="subgroup enumeration budget")
    p.add_argument(
        "--max-decompositions",
        type=int,
        default=DEFAULT_MAX_DECOMPOSITIONS,
        metavar="N",
        help="central decompositions checked per group (0 = all)",
    )
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="catalog utilities")
    csub = p.add_subparsers(dest="catalog_command", required=True)
    pl = csub.add_parser("list", help="list catalog groups with their orders")
    pl.add_argument("--max-order", type=int, metavar="N")
    pl.set_defaults(func=cmd_catalog_list)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except CDLatticeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
