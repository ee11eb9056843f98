"""Command line front end.

Subcommands:

  hilbert          series of a Fano threefold from -K^3 and a basket
  bigraded         component series of a threefold with torsion
  infer            presentation from a series (JSON file or stdin)
  enumerate-bt     admissible marked baskets for one or all orders
  search           quotient search over a catalog file
  verify-fixtures  recompute everything the bundled goldens freeze

Exit codes: 0 success, 1 usage or data error, 2 fixture mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .catalog import resolve_catalog, verify_fixtures
from .enumeration import MAX_TORSION, enumerate_bt
from .errors import EngineError
from .exact import format_rational, parse_rational
from .gradedrings import infer_presentation
from .hilbert import FanoData, FanoEnriquesData, altinok_series, bigraded_series
from .orbifold import Basket
from .quotient import search
from .series import BigradedSeries


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _output_flags(sub: argparse.ArgumentParser):
    mode = sub.add_mutually_exclusive_group()
    mode.add_argument(
        "--json", action="store_true", help="machine-readable JSON output"
    )
    mode.add_argument(
        "--table", action="store_true", help="human-readable output (default)"
    )


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="fano-enriques",
        description="exact Hilbert series, basket enumeration and quotient "
        "search for Fano threefolds with torsion",
    )
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("hilbert", help="series from -K^3 and a basket")
    p.add_argument("--k3", required=True, help="-K^3, e.g. 5/2")
    p.add_argument(
        "--basket", default="", help='basket, e.g. "1/2(1,1,1), 2x1/5(1,2,3)"'
    )
    p.add_argument("--trunc", type=int, default=20, help="truncation degree")
    _output_flags(p)

    p = sub.add_parser("bigraded", help="component series with a torsion divisor")
    p.add_argument("--r", type=int, required=True, help="torsion order")
    p.add_argument("--k3", required=True, help="-K^3, e.g. 1/2")
    p.add_argument(
        "--bt", required=True, help='marked basket, e.g. "2x1/5(1,2,3)_1, 1/10(1,3,7)_6"'
    )
    p.add_argument("--be", default="", help="unmarked basket part")
    p.add_argument("--trunc", type=int, default=20)
    _output_flags(p)

    p = sub.add_parser("infer", help="presentation from a series")
    p.add_argument(
        "--series",
        default="-",
        help="JSON file with fields r and coeffs, or - for stdin",
    )
    p.add_argument("--max-degree", type=int, default=24)
    _output_flags(p)

    p = sub.add_parser("enumerate-bt", help="admissible marked baskets")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--r", type=int, help="one torsion order")
    which.add_argument(
        "--all", action="store_true", help=f"every order in [2, {MAX_TORSION}]"
    )
    p.add_argument(
        "--strict-r5",
        action="store_true",
        help="require chi(i*sigma) = 0 for i != 0 instead of >= 0",
    )
    _output_flags(p)

    p = sub.add_parser("search", help="quotient search over a catalog")
    p.add_argument(
        "--catalog", required=True, help="catalog file path or bundled name"
    )
    p.add_argument("--r", type=int, help="restrict to one torsion order")
    p.add_argument("--trunc", type=int, default=24)
    p.add_argument("--max-degree", type=int, default=24)
    p.add_argument("--strict-r5", action="store_true")
    p.add_argument(
        "--rejections", action="store_true", help="also list every rejection"
    )
    _output_flags(p)

    p = sub.add_parser("verify-fixtures", help="recompute every bundled golden")
    _output_flags(p)

    return parser


def _print_single(series: BigradedSeries, as_json: bool):
    if as_json:
        print(json.dumps(series.to_json()))
    else:
        print(", ".join(format_rational(c) for c in series.component(0)))


def _cmd_hilbert(args) -> int:
    data = FanoData(parse_rational(args.k3), Basket.parse(args.basket))
    _print_single(altinok_series(data, trunc=args.trunc), args.json)
    return 0


def _cmd_bigraded(args) -> int:
    data = FanoEnriquesData(
        args.r, parse_rational(args.k3), Basket.parse(args.bt), Basket.parse(args.be)
    )
    series = bigraded_series(data, trunc=args.trunc)
    if args.json:
        print(json.dumps({"data": data.to_json(), "series": series.to_json()}))
    else:
        for i in range(series.r):
            row = ", ".join(format_rational(c) for c in series.component(i))
            print(f"e^{i}: {row}")
    return 0


def _cmd_infer(args) -> int:
    if args.series == "-":
        text = sys.stdin.read()
    else:
        with open(args.series) as handle:
            text = handle.read()
    series = BigradedSeries.from_json(json.loads(text))
    presentation = infer_presentation(series, max_degree=args.max_degree)
    if args.json:
        print(json.dumps(presentation.to_json()))
    else:
        print(presentation)
    return 0


def _cmd_enumerate(args) -> int:
    orders = [args.r] if args.r is not None else range(2, MAX_TORSION + 1)
    rows = []
    for r in orders:
        rows.extend(enumerate_bt(r, strict_chi=args.strict_r5))
    if args.json:
        print(
            json.dumps([{"r": c.r, "entries": c.entries.to_json()} for c in rows])
        )
    else:
        for c in rows:
            print(c)
    return 0


def _cmd_search(args) -> int:
    catalog = resolve_catalog(args.catalog, trunc=min(args.trunc, 20))
    result = search(
        catalog,
        rs=[args.r] if args.r is not None else None,
        trunc=args.trunc,
        max_degree=args.max_degree,
        strict_chi=args.strict_r5,
    )
    if args.json:
        payload = {
            "candidates": [c.to_json() for c in result],
            "rejections": [rej.to_json() for rej in result.rejections],
        }
        print(json.dumps(payload))
    else:
        for c in result:
            print(c)
        if args.rejections:
            for rej in result.rejections:
                print(rej)
        else:
            print(f"# {len(result)} candidates, {len(result.rejections)} rejections")
    return 0


def _cmd_verify(args) -> int:
    problems = verify_fixtures()
    if args.json:
        print(json.dumps({"ok": not problems, "problems": problems}))
    else:
        for problem in problems:
            print(problem)
        if not problems:
            print("all bundled fixtures verified")
    return 2 if problems else 0


_DISPATCH = {
    "hilbert": _cmd_hilbert,
    "bigraded": _cmd_bigraded,
    "infer": _cmd_infer,
    "enumerate-bt": _cmd_enumerate,
    "search": _cmd_search,
    "verify-fixtures": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_usage(sys.stderr)
        return 1
    try:
        return _DISPATCH[args.command](args)
    except EngineError as exc:
        print(f"fano-enriques {args.command}: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError) as exc:
        print(f"fano-enriques {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
