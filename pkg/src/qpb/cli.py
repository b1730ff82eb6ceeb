"""Command-line surface: tables, single evaluations, verification suites,
the conjecture harness, and OEIS cross-checks.

Conventions (also in each subcommand's --help): matrix statistics use
1-based row/column indices; families listed under "negative branch" take
k >= 0 meaning the integer/polynomial regime, while classical_anyk,
cenkci_q, and at_q take a signed k.  Output is deterministic: identical
invocations produce byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import families, oeis, verify
from .errors import OeisError, SizeLimitError
from .exactnum import QPoly, QRational

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_SIZE_LIMIT = 3

_CONVENTIONS = (
    "Conventions: 1-based indices in matrix statistics; for negative-branch "
    "families k >= 0 selects the combinatorial (integer/polynomial) regime; "
    "classical_anyk, cenkci_q, and at_q take a signed k."
)


def _value_to_json(v):
    if isinstance(v, QPoly) or isinstance(v, QRational):
        return v.to_json_dict()
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else str(v.numerator)
    return str(v)


def _value_to_text(v) -> str:
    if isinstance(v, (QPoly, QRational)):
        return str(v)
    if isinstance(v, Fraction) and v.denominator == 1:
        return str(v.numerator)
    return str(v)


def _family_value(spec: families.FamilySpec, n: int, k: int):
    if spec.max_cells is not None and n * k > spec.max_cells:
        raise SizeLimitError(
            f"family {spec.name} is enumeration-backed; n*k <= {spec.max_cells}"
        )
    return spec.fn(n, k)


def _table_cells(spec: families.FamilySpec, max_n: int, max_k: int):
    """Yield (n, k_display, value); k_display is negative for signed families."""
    for k in range(max_k + 1):
        for n in range(max_n + 1):
            if spec.k_mode == "signed":
                yield n, -k, _family_value(spec, n, -k)
            else:
                yield n, k, _family_value(spec, n, k)


def cmd_table(args) -> int:
    spec = families.FAMILIES[args.family]
    # Bounds are rejected before any cell is computed.
    if spec.max_cells is not None and args.max_n * args.max_k > spec.max_cells:
        raise SizeLimitError(
            f"family {spec.name} is enumeration-backed; max_n*max_k <= {spec.max_cells}"
        )
    cells = list(_table_cells(spec, args.max_n, args.max_k))
    out = sys.stdout
    if args.format == "json":
        payload = {
            "family": args.family,
            "max_n": args.max_n,
            "max_k": args.max_k,
            "cells": [
                {"n": n, "k": k, "value": _value_to_json(v)} for n, k, v in cells
            ],
        }
        out.write(json.dumps(payload, sort_keys=True) + "\n")
        return EXIT_OK
    by_k: dict[int, list[str]] = {}
    for n, k, v in cells:
        by_k.setdefault(k, []).append(_value_to_text(v))
    if args.format == "csv":
        out.write("k\\n," + ",".join(str(n) for n in range(args.max_n + 1)) + "\n")
        for k in sorted(by_k, reverse=(spec.k_mode == "signed")):
            out.write(f"{k}," + ",".join(by_k[k]) + "\n")
        return EXIT_OK
    # latex
    out.write("\\begin{tabular}{c|" + "c" * (args.max_n + 1) + "}\n")
    out.write("k/n & " + " & ".join(str(n) for n in range(args.max_n + 1)) + " \\\\\n\\hline\n")
    for k in sorted(by_k, reverse=(spec.k_mode == "signed")):
        out.write(f"{k} & " + " & ".join(by_k[k]) + " \\\\\n")
    out.write("\\end{tabular}\n")
    return EXIT_OK


def cmd_eval(args) -> int:
    spec = families.FAMILIES[args.family]
    value = _family_value(spec, args.n, args.k)
    if args.q is not None:
        point = Fraction(args.q)
        if isinstance(value, (QPoly, QRational)):
            value = value.eval_rational(point)
    if args.format == "json":
        payload = {
            "family": args.family,
            "n": args.n,
            "k": args.k,
            "value": _value_to_json(value),
        }
        if args.q is not None:
            payload["q"] = args.q
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        sys.stdout.write(_value_to_text(value) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = verify.run_suite(args.suite, max_n=args.max_n, max_k=args.max_k, order=args.order)
    failed = 0
    for r in reports:
        sys.stdout.write(r.to_json() + "\n")
        if r.status == "fail":
            failed += 1
    if failed:
        sys.stderr.write(f"{failed} check(s) failed\n")
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_conjecture(args) -> int:
    failed = 0
    for n in range(2, args.max_n + 1):
        r = verify.sylvester_conjecture(n, max_n=max(args.max_n, 10))
        sys.stdout.write(r.to_json() + "\n")
        if r.status == "fail":
            failed += 1
    if failed:
        sys.stderr.write(f"{failed} value(s) of n refute the identity as stated\n")
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_oeis(args) -> int:
    report = oeis.crosscheck_table(args.id, reader=args.reader, bound=args.bound, offline=args.offline)
    sys.stdout.write(report.to_json() + "\n")
    return EXIT_OK if report.status == "pass" else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpb",
        description="Exact tables, evaluations, and verification for "
        "poly-Bernoulli families and their q-analogues.",
        epilog=_CONVENTIONS,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    family_names = sorted(families.FAMILIES)

    p_table = sub.add_parser("table", help="emit an (n, k) grid of values", epilog=_CONVENTIONS)
    p_table.add_argument("--family", choices=family_names, default="classical_negk")
    p_table.add_argument("--max-n", type=int, default=5)
    p_table.add_argument("--max-k", type=int, default=5)
    p_table.add_argument("--format", choices=("json", "csv", "latex"), default="csv")
    p_table.set_defaults(fn=cmd_table)

    p_eval = sub.add_parser("eval", help="evaluate one family member", epilog=_CONVENTIONS)
    p_eval.add_argument("--family", choices=family_names, required=True)
    p_eval.add_argument("--n", type=int, required=True)
    p_eval.add_argument("--k", type=int, default=0)
    p_eval.add_argument("--q", type=str, default=None,
                        help="optional rational point, e.g. 2/3, to evaluate polynomials at")
    p_eval.add_argument("--format", choices=("json", "text"), default="text")
    p_eval.set_defaults(fn=cmd_eval)

    p_verify = sub.add_parser(
        "verify", help="run a verification suite (JSON lines, exit 0 iff no fail)",
        epilog=_CONVENTIONS,
    )
    p_verify.add_argument("--suite", choices=verify.suite_names(), default="all")
    p_verify.add_argument("--max-n", type=int, default=4)
    p_verify.add_argument("--max-k", type=int, default=4)
    p_verify.add_argument("--order", type=int, default=6)
    p_verify.set_defaults(fn=cmd_verify)

    p_conj = sub.add_parser(
        "conjecture", help="characteristic-polynomial identity harness for the k=2 column",
        epilog=_CONVENTIONS,
    )
    p_conj.add_argument("--max-n", type=int, default=8)
    p_conj.set_defaults(fn=cmd_conjecture)

    p_oeis = sub.add_parser("oeis", help="cross-check against an OEIS sequence", epilog=_CONVENTIONS)
    p_oeis.add_argument("--id", required=True)
    p_oeis.add_argument("--offline", action="store_true")
    p_oeis.add_argument("--reader", choices=("antidiagonal", "row"), default=None)
    p_oeis.add_argument("--bound", type=int, default=21)
    p_oeis.set_defaults(fn=cmd_oeis)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SizeLimitError as exc:
        sys.stderr.write(f"size limit: {exc}\n")
        return EXIT_SIZE_LIMIT
    except OeisError as exc:
        sys.stderr.write(f"oeis: {exc}\n")
        return EXIT_CHECK_FAILED


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
