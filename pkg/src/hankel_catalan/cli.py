"""Command-line front end with machine-readable output.

Subcommands: seq, hankel, verify, recurrence, series, quad. Every exact
quantity is printed as an arbitrary-precision decimal or p/q string; only
the quad command prints float64, with explicit error columns. Exit codes:
0 all checks pass, 1 usage error, 2 mathematical mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .genfunc import PoleNotCancelled, big_g_series, f_series, rho_series
from .opoly import chain_coeffs, stieltjes_from_moments
from .sequences import a_sequence
from .verify import ROUTES, first_mismatch, verify_cell, verify_grid
from .weight import QuadratureConfig, WeightSpec, moment_quadrature

DEFAULT_ORDER_ENV = "HF_DEFAULT_ORDER"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2


@dataclass
class CommandResult:
    command: str
    params: dict[str, str]
    rows: list[dict[str, object]] = field(default_factory=list)
    summary: dict[str, object] = field(default_factory=dict)
    status: str = "ok"
    elapsed_ms: int = 0


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on bad usage; the contract here wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError("L must be positive")
    return value


def _l_range(text: str) -> list[Fraction]:
    """A span 'a..b' over integers, or a comma-separated list of rationals."""
    if ".." in text:
        lo_text, _, hi_text = text.partition("..")
        try:
            lo, hi = int(lo_text), int(hi_text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad span: {text!r}")
        if lo < 1 or hi < lo:
            raise argparse.ArgumentTypeError(f"bad span: {text!r}")
        return [Fraction(v) for v in range(lo, hi + 1)]
    return [_positive_rational(part) for part in text.split(",")]


def _default_terms() -> int:
    return int(os.environ.get(DEFAULT_ORDER_ENV, "30"))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hankel-catalan", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "csv", "plain"), default="plain")

    p_seq = sub.add_parser("seq", help="print a_0..a_n exactly")
    p_seq.add_argument("--L", type=_positive_rational, required=True)
    p_seq.add_argument("--n", type=int, required=True, metavar="N_MAX")
    add_format(p_seq)

    p_hankel = sub.add_parser("hankel", help="Hankel transform values by any route")
    p_hankel.add_argument("--L", type=_positive_rational, required=True)
    p_hankel.add_argument("--n", type=int, required=True, metavar="N_MAX")
    p_hankel.add_argument(
        "--method", choices=("det", "closed", "product", "poly", "all"), default="all"
    )
    add_format(p_hankel)

    p_verify = sub.add_parser("verify", help="four-route agreement grid")
    p_verify.add_argument("--L", type=_l_range, required=True, metavar="RANGE")
    p_verify.add_argument("--n-max", type=int, default=12, dest="n_max")
    p_verify.add_argument("--jobs", type=int, default=1)
    add_format(p_verify)

    p_rec = sub.add_parser("recurrence", help="three-term recurrence coefficients")
    p_rec.add_argument("--L", type=_positive_rational, required=True)
    p_rec.add_argument("--n", type=int, required=True, metavar="N_MAX")
    p_rec.add_argument("--method", choices=("chain", "moments", "both"), default="both")
    add_format(p_rec)

    p_series = sub.add_parser("series", help="exact generating-function coefficients")
    p_series.add_argument("--L", type=_positive_rational, required=True)
    p_series.add_argument("--terms", type=int, default=None)
    p_series.add_argument("--which", choices=("G", "F", "rho"), default="G")
    add_format(p_series)

    p_quad = sub.add_parser("quad", help="weight-function moment quadrature check")
    p_quad.add_argument("--L", type=_positive_rational, required=True)
    p_quad.add_argument("--moments", type=int, default=8, metavar="N_MAX")
    p_quad.add_argument("--nodes", type=int, default=4000)
    p_quad.add_argument("--tol", type=float, default=1e-8)
    p_quad.add_argument(
        "--scheme", choices=("theta-midpoint", "theta-gauss"), default="theta-midpoint"
    )
    add_format(p_quad)

    return parser


# -- command bodies -----------------------------------------------------------


def cmd_seq(args) -> CommandResult:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    window = a_sequence(args.L, args.n)
    rows = [{"n": n, "a": str(term)} for n, term in enumerate(window.terms)]
    return CommandResult("seq", {"L": str(args.L), "n": str(args.n)}, rows)


def cmd_hankel(args) -> CommandResult:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    routes = ROUTES if args.method == "all" else (args.method,)
    rows = []
    mismatch: Optional[dict[str, object]] = None
    for n in range(1, args.n + 1):
        report = verify_cell(args.L, n, routes)
        row: dict[str, object] = {"n": n}
        for name, value in report.computed().items():
            row[name] = str(value)
        if args.method == "all":
            row["agree"] = report.agree
            if not report.agree and mismatch is None:
                mismatch = {"L": str(args.L), "n": n, **{k: str(v) for k, v in report.computed().items()}}
        rows.append(row)
    result = CommandResult(
        "hankel", {"L": str(args.L), "n": str(args.n), "method": args.method}, rows
    )
    if mismatch is not None:
        result.status = "mismatch"
        result.summary["first_mismatch"] = mismatch
    return result


def _odd_fibonacci(n_max: int) -> list[int]:
    """F_3, F_5, ..., F_{2*n_max+1}."""
    out = []
    prev, cur = 0, 1  # F_0, F_1
    for _ in range(n_max):
        prev, cur = cur, cur + prev
        prev, cur = cur, cur + prev
        out.append(cur)
    return out


def cmd_verify(args) -> CommandResult:
    if args.n_max < 1:
        raise UsageError("--n-max must be at least 1")
    reports = verify_grid(args.L, args.n_max, jobs=args.jobs)
    with_fib = any(L == 1 for L in args.L)
    fib = _odd_fibonacci(args.n_max) if with_fib else []
    rows = []
    for report in reports:
        row: dict[str, object] = {"L": str(report.L), "n": report.n}
        row.update({name: str(value) for name, value in report.computed().items()})
        row["agree"] = report.agree
        if with_fib:
            row["fibonacci"] = str(fib[report.n - 1]) if report.L == 1 else ""
        rows.append(row)
    params = {
        "L": ",".join(str(L) for L in args.L),
        "n_max": str(args.n_max),
        "jobs": str(args.jobs),
    }
    result = CommandResult("verify", params, rows)
    bad = first_mismatch(reports)
    if bad is not None:
        result.status = "mismatch"
        result.summary["first_mismatch"] = {
            "L": str(bad.L),
            "n": bad.n,
            **{k: str(v) for k, v in bad.computed().items()},
        }
    elif with_fib:
        fib_ok = all(
            report.h_closed == fib[report.n - 1] for report in reports if report.L == 1
        )
        if not fib_ok:
            result.status = "mismatch"
            result.summary["first_mismatch"] = {"detail": "closed form vs Fibonacci"}
    return result


def cmd_recurrence(args) -> CommandResult:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    n_max = args.n
    rows: list[dict[str, object]] = []
    mismatch = None
    chain = state = moments = None
    if args.method in ("chain", "both"):
        chain, state = chain_coeffs(args.L, n_max)
    if args.method in ("moments", "both"):
        window = a_sequence(args.L, 2 * n_max - 1)
        moments = stieltjes_from_moments(window, n_max)
    for k in range(n_max):
        row: dict[str, object] = {"k": k}
        if chain is not None:
            row["alpha"] = str(chain.alpha[k])
            row["beta"] = str(chain.beta[k])
            row["r_prev"] = str(state.r[k])  # r_{k-1}; r[0] is the seed ratio
        if moments is not None:
            key_alpha = "alpha_moments" if chain is not None else "alpha"
            key_beta = "beta_moments" if chain is not None else "beta"
            row[key_alpha] = str(moments.alpha[k])
            row[key_beta] = str(moments.beta[k])
        if chain is not None and moments is not None:
            equal = chain.alpha[k] == moments.alpha[k] and chain.beta[k] == moments.beta[k]
            row["equal"] = equal
            if not equal and mismatch is None:
                mismatch = {"k": k, **{key: str(val) for key, val in row.items() if key != "k"}}
        rows.append(row)
    result = CommandResult(
        "recurrence", {"L": str(args.L), "n": str(n_max), "method": args.method}, rows
    )
    if state is not None:
        result.summary["r_last"] = str(state.r[n_max])
    if mismatch is not None:
        result.status = "mismatch"
        result.summary["first_mismatch"] = mismatch
    return result


def cmd_series(args) -> CommandResult:
    terms = args.terms if args.terms is not None else _default_terms()
    if terms < 1:
        raise UsageError("--terms must be at least 1")
    params = {"L": str(args.L), "terms": str(terms), "which": args.which}
    result = CommandResult("series", params)
    order = terms - 1
    try:
        if args.which == "G":
            series = big_g_series(args.L, order)
        elif args.which == "F":
            series = f_series(args.L, order)
        else:
            series = rho_series(args.L, order)
    except PoleNotCancelled as exc:
        result.status = "error"
        result.summary["error"] = str(exc)
        return result
    result.rows = [
        {"k": k, "coeff": str(series.coefficient(k))} for k in range(terms)
    ]
    if args.which == "G":
        result.summary["pole_coefficient"] = "0"
        expected = a_sequence(args.L, order)
        if list(series.coefficients(0, order)) != list(expected.terms):
            result.status = "mismatch"
            result.summary["first_mismatch"] = {"detail": "coefficients differ from the sequence"}
    return result


def cmd_quad(args) -> CommandResult:
    if args.moments < 0:
        raise UsageError("--moments must be nonnegative")
    if args.nodes < 16:
        raise UsageError("--nodes must be at least 16")
    spec = WeightSpec.for_parameter(float(args.L))
    cfg = QuadratureConfig(node_count=args.nodes, scheme=args.scheme)
    window = a_sequence(args.L, args.moments)
    rows = []
    worst = 0.0
    for n in range(args.moments + 1):
        approx = moment_quadrature(spec, n, cfg)
        exact = window.terms[n]
        rel_err = abs(approx - float(exact)) / float(exact)
        worst = max(worst, rel_err)
        rows.append(
            {
                "n": n,
                "quad": f"{approx:.15e}",
                "exact": str(exact),
                "rel_err": f"{rel_err:.3e}",
            }
        )
    params = {
        "L": str(args.L),
        "moments": str(args.moments),
        "nodes": str(args.nodes),
        "tol": f"{args.tol:g}",
        "scheme": args.scheme,
    }
    result = CommandResult("quad", params, rows)
    result.summary["max_rel_err"] = f"{worst:.3e}"
    if worst > args.tol:
        result.status = "mismatch"
        result.summary["first_mismatch"] = {"detail": f"max rel err {worst:.3e} over tol {args.tol:g}"}
    return result


# -- rendering ----------------------------------------------------------------


def _render_json(result: CommandResult, out) -> None:
    # elapsed_ms stays off the wire: identical invocations must produce
    # byte-identical output.
    for row in result.rows:
        print(json.dumps(row, sort_keys=True), file=out)
    trailer = {
        "command": result.command,
        "params": result.params,
        "status": result.status,
        **result.summary,
    }
    print(json.dumps(trailer, sort_keys=True), file=out)


def _render_csv(result: CommandResult, out) -> None:
    if not result.rows:
        return
    fields = list(result.rows[0].keys())
    writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in result.rows:
        writer.writerow(row)


def _render_plain(result: CommandResult, out) -> None:
    if result.rows:
        fields = list(result.rows[0].keys())
        table = [[str(row.get(name, "")) for name in fields] for row in result.rows]
        widths = [
            max(len(name), *(len(line[i]) for line in table))
            for i, name in enumerate(fields)
        ]
        print("  ".join(name.ljust(widths[i]) for i, name in enumerate(fields)), file=out)
        for line in table:
            print("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(line)), file=out)
    extras = " ".join(f"{key}={value}" for key, value in result.summary.items())
    print(f"status={result.status}" + (f" {extras}" if extras else ""), file=out)


def render(result: CommandResult, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        _render_json(result, out)
    elif fmt == "csv":
        _render_csv(result, out)
    else:
        _render_plain(result, out)


COMMANDS = {
    "seq": cmd_seq,
    "hankel": cmd_hankel,
    "verify": cmd_verify,
    "recurrence": cmd_recurrence,
    "series": cmd_series,
    "quad": cmd_quad,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        result = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    result.elapsed_ms = int((time.perf_counter() - start) * 1000)
    render(result, args.format)
    return EXIT_OK if result.status == "ok" else EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
