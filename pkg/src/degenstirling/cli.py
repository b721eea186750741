"""Command line front end.

Three subcommands:

* `triangle` prints one triangular array up to row n, either with
  symbolic lambda entries or evaluated at a rational lambda.
* `moments` prints the degenerate falling-factorial moments and
  cumulants of one random variable side by side.
* `check` runs registered identity checks and prints a JSON report.

Output goes to stdout or `--out`, as JSON (default) or CSV.  Symbolic
entries serialize as coefficient-string arrays (constant term first);
evaluated entries as "p/q" strings.  Exit codes: 0 success, 1 a check
ran and found failures, 2 usage or argument errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import identities, probrv, triangles
from .exact import format_rational, parse_rational

__all__ = ["main"]

_PLAIN_FAMILIES = {
    "s1": triangles.stirling1_classical,
    "s2": triangles.stirling2_classical,
    "s1-degen": triangles.stirling1_degenerate,
    "s2-degen": triangles.stirling2_degenerate,
    "s1-degen-unsigned": triangles.unsigned_stirling1_degenerate,
    "lah": triangles.lah,
}
_PROB_FAMILIES = {
    "s1-prob": probrv.prob_stirling1,
    "s2-prob": probrv.prob_stirling2,
}
FAMILIES = tuple(sorted((*_PLAIN_FAMILIES, *_PROB_FAMILIES)))


def _parse_lambda(text: str) -> Fraction | None:
    if text == "sym":
        return None
    return parse_rational(text)


def _lambda_label(lam: Fraction | None) -> str:
    return "sym" if lam is None else format_rational(lam)


def _json_cell(poly, lam):
    if lam is None:
        return poly.to_coeff_strings()
    return format_rational(poly.evaluate(lam))


def _csv_cell(poly, lam) -> str:
    if lam is None:
        return ";".join(poly.to_coeff_strings())
    return format_rational(poly.evaluate(lam))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _to_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _require_nonneg(n: int) -> int:
    if n < 0:
        raise ValueError("--n must be >= 0")
    return n


def _cmd_triangle(args) -> int:
    n = _require_nonneg(args.n)
    lam = _parse_lambda(args.lam)
    if args.family in _PROB_FAMILIES:
        if not args.rv:
            raise ValueError(f"family {args.family} requires --rv")
        tri = _PROB_FAMILIES[args.family](probrv.parse_provider(args.rv), n)
    else:
        if args.rv:
            raise ValueError(f"family {args.family} does not take --rv")
        tri = _PLAIN_FAMILIES[args.family](n)
    rows = [[tri.entry(r, k) for k in range(r + 1)] for r in range(n + 1)]
    if args.format == "json":
        obj = {"family": tri.family, "n": n, "lambda": _lambda_label(lam)}
        if tri.rv is not None:
            obj["rv"] = tri.rv
        obj["rows"] = [[_json_cell(e, lam) for e in row] for row in rows]
        text = _to_json(obj)
    else:
        text = _to_csv([[r, *(_csv_cell(e, lam) for e in row)] for r, row in enumerate(rows)])
    _emit(text, args.out)
    return 0


def _cmd_moments(args) -> int:
    n = _require_nonneg(args.n)
    lam = _parse_lambda(args.lam)
    rv = probrv.parse_provider(args.rv)
    cumulants = probrv.degenerate_cumulants(rv, max(n, 1))
    rows = [[probrv.degenerate_moment(rv, i), cumulants[i]] for i in range(n + 1)]
    if args.format == "json":
        obj = {
            "rv": rv.spec,
            "n": n,
            "lambda": _lambda_label(lam),
            "rows": [
                [i, _json_cell(m, lam), _json_cell(c, lam)] for i, (m, c) in enumerate(rows)
            ],
        }
        text = _to_json(obj)
    else:
        lines = [["n", "moment", "cumulant"]]
        lines += [
            [i, _csv_cell(m, lam), _csv_cell(c, lam)] for i, (m, c) in enumerate(rows)
        ]
        text = _to_csv(lines)
    _emit(text, args.out)
    return 0


def _cmd_check(args) -> int:
    if args.format != "json":
        raise ValueError("check reports support only --format json")
    ids = None if "all" in args.id else tuple(args.id)
    providers = tuple(args.rv) if args.rv else None
    n_max = None if args.n is None else _require_nonneg(args.n)
    x_points = None
    if args.x_points:
        x_points = tuple(parse_rational(p.strip()) for p in args.x_points.split(","))
    report = identities.run_suite(ids, providers, n_max, x_points)
    _emit(_to_json(report.to_json_obj()), args.out)
    return 0 if report.ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degenstirling",
        description="exact degenerate Stirling triangles, moments and identity checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tri = sub.add_parser("triangle", help="print one triangular array up to row n")
    tri.add_argument("--family", required=True, choices=FAMILIES)
    tri.add_argument("--n", required=True, type=int, help="largest row index")
    tri.add_argument("--rv", help="random variable spec for probabilistic families")
    tri.add_argument(
        "--lambda", dest="lam", default="sym", help='"sym" or a rational value (default sym)'
    )
    tri.add_argument("--format", choices=("json", "csv"), default="json")
    tri.add_argument("--out", help="write to this path instead of stdout")
    tri.set_defaults(handler=_cmd_triangle)

    mom = sub.add_parser("moments", help="print degenerate moments and cumulants")
    mom.add_argument("--rv", required=True, help="random variable spec")
    mom.add_argument("--n", required=True, type=int, help="largest index")
    mom.add_argument(
        "--lambda", dest="lam", default="sym", help='"sym" or a rational value (default sym)'
    )
    mom.add_argument("--format", choices=("json", "csv"), default="json")
    mom.add_argument("--out", help="write to this path instead of stdout")
    mom.set_defaults(handler=_cmd_moments)

    chk = sub.add_parser("check", help="run identity checks and print a JSON report")
    chk.add_argument(
        "--id",
        action="append",
        required=True,
        help='check id, repeatable; "all" runs the whole registry',
    )
    chk.add_argument(
        "--rv",
        action="append",
        help="random variable spec, repeatable; defaults to the built-in provider panel",
    )
    chk.add_argument("--n", type=int, help="grid bound (default 10)")
    chk.add_argument("--x-points", help="comma separated rational x values")
    chk.add_argument("--format", choices=("json",), default="json")
    chk.add_argument("--out", help="write to this path instead of stdout")
    chk.set_defaults(handler=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
