"""Command-line front end.

Subcommands cover the exact solves (constant, family, extremal, table,
endpoint), the floating-point cross-check (oracle), the self-verification
suite (verify), and a raw dump of the orthogonal-polynomial tables
(legendre dump). Data goes to stdout, diagnostics to stderr.

Exit codes: 0 success, 1 argument or domain error, 2 verification failure,
3 numerical failure in the oracle.

Output is deterministic: identical invocations produce identical bytes.
JSON floats are rounded to 12 significant digits; CSV floats use the
shortest representation that round-trips.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import re
import sys
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import legendre, oracle, sharp, verify
from .exactnum import format_rational, parse_rational
from .polyalg import Polynomial, coeff_strings, poly_eval

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_NUMERIC = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse parser whose errors surface as exit code 1, not 2."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # also accept negative rationals like -1/3 as option values
        self._negative_number_matcher = re.compile(r"^-(\d+(/\d+)?|\d*\.\d+)$")

    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _float_str(value: float) -> str:
    return repr(float(value))


def _json_float(value: float) -> float:
    return float(format(float(value), ".12g"))


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _emit_csv(header: list[str], rows: Iterable[list[str]]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)


def _common_denominator_strings(p: Polynomial) -> list[str]:
    """Coefficients as ``"n/L"`` over the least common denominator L.

    This is the form the closed-form families are usually quoted in, e.g.
    the m = 2 numerators 8, 0, -21, 0, 30, 0, -5 over 48.
    """
    if not p.coeffs:
        return []
    den = math.lcm(*(c.denominator for c in p.coeffs))
    return [f"{c.numerator * (den // c.denominator)}/{den}" for c in p.coeffs]


def _solution_payload(sol: sharp.SharpSolution) -> dict:
    kf = sharp.extremal(sol)
    return {
        "m": sol.m,
        "x": format_rational(sol.x),
        "a": format_rational(sol.a),
        "alpha": format_rational(sol.alpha),
        "beta": format_rational(sol.beta),
        "c": format_rational(sol.c),
        "Bsq": format_rational(sol.Bsq),
        "B": _json_float(sol.b_value),
        "Q": coeff_strings(sol.Q),
        "extremal": {
            "kink": format_rational(kf.kink),
            "left": coeff_strings(kf.left),
            "right": coeff_strings(kf.right),
        },
    }


def _cmd_constant(args) -> int:
    sol = sharp.solve_interior(args.m, args.x)
    if args.format == "json":
        _emit_json(_solution_payload(sol))
    else:
        _emit_csv(
            ["m", "x", "a", "alpha", "beta", "c", "Bsq", "B"],
            [[
                str(sol.m),
                format_rational(sol.x),
                format_rational(sol.a),
                format_rational(sol.alpha),
                format_rational(sol.beta),
                format_rational(sol.c),
                format_rational(sol.Bsq),
                _float_str(sol.b_value),
            ]],
        )
    return EXIT_OK


def _cmd_family(args) -> int:
    fam = sharp.solve_family(args.m)
    strings = _common_denominator_strings(fam.Bsq_poly)
    if args.format == "json":
        _emit_json({"m": fam.m, "Bsq_poly": strings})
    else:
        _emit_csv(
            ["degree", "coefficient"],
            [[str(k), s] for k, s in enumerate(strings)],
        )
    return EXIT_OK


def _cmd_extremal(args) -> int:
    if args.samples < 1:
        raise ValueError(f"samples must be at least 1, got {args.samples}")
    sol = sharp.solve_interior(args.m, args.x)
    kf = sharp.extremal(sol)
    n = args.samples
    points = sorted({Fraction(2 * j - n, n) for j in range(n + 1)} | {kf.kink})
    if args.format == "csv":
        _emit_csv(
            ["t", "y"],
            [[_float_str(t), _float_str(kf(t))] for t in points],
        )
    else:
        _emit_json({
            "m": sol.m,
            "x": format_rational(sol.x),
            "kink": format_rational(kf.kink),
            "left": coeff_strings(kf.left),
            "right": coeff_strings(kf.right),
            "samples": [[_json_float(t), _json_float(kf(t))] for t in points],
        })
    return EXIT_OK


def _cmd_table(args) -> int:
    if args.grid < 1:
        raise ValueError(f"grid must be at least 1, got {args.grid}")
    fam = sharp.solve_family(args.m)
    k = args.grid
    rows = []
    for j in range(k + 1):
        x = Fraction(2 * j - k, k)
        if j == 0 or j == k:
            bsq = sharp.endpoint_constant(args.m)
        else:
            bsq = poly_eval(fam.Bsq_poly, x)
        rows.append([_float_str(x), format_rational(bsq), _float_str(math.sqrt(bsq))])
    if args.format == "csv":
        _emit_csv(["x", "Bsq", "B"], rows)
    else:
        _emit_json({
            "m": args.m,
            "points": [
                {"x": _json_float(float(r[0])), "Bsq": r[1], "B": _json_float(float(r[2]))}
                for r in rows
            ],
        })
    return EXIT_OK


def _cmd_endpoint(args) -> int:
    bsq = sharp.endpoint_constant(args.m)
    extremal_poly = sharp.endpoint_extremal(args.m, args.side)
    if args.format == "json":
        _emit_json({
            "m": args.m,
            "side": args.side,
            "Bsq": format_rational(bsq),
            "B": _json_float(math.sqrt(bsq)),
            "extremal": coeff_strings(extremal_poly),
        })
    else:
        _emit_csv(
            ["m", "side", "Bsq", "B"],
            [[str(args.m), str(args.side), format_rational(bsq), _float_str(math.sqrt(bsq))]],
        )
    return EXIT_OK


def _cmd_oracle(args) -> int:
    result = oracle.fem_solve(args.m, args.x, args.nodes)
    b_exact: Optional[float] = None
    rel_error: Optional[float] = None
    if args.exact:
        exact_bsq = sharp.solve_interior(args.m, Fraction(args.x)).Bsq
        b_exact = math.sqrt(exact_bsq)
        rel_error = abs(result.b_estimate - b_exact) / b_exact
    if args.format == "csv":
        _emit_csv(
            ["m", "x", "nodes", "energy", "b_estimate", "b_exact", "rel_error", "max_residual"],
            [[
                str(result.m),
                _float_str(result.x),
                str(result.nodes),
                _float_str(result.energy),
                _float_str(result.b_estimate),
                "" if b_exact is None else _float_str(b_exact),
                "" if rel_error is None else _float_str(rel_error),
                _float_str(result.max_residual),
            ]],
        )
    else:
        _emit_json({
            "m": result.m,
            "x": _json_float(result.x),
            "nodes": result.nodes,
            "energy": _json_float(result.energy),
            "b_estimate": _json_float(result.b_estimate),
            "b_exact": None if b_exact is None else _json_float(b_exact),
            "rel_error": None if rel_error is None else _json_float(rel_error),
            "max_residual": _json_float(result.max_residual),
        })
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = verify.run_verification(args.max_m)
    print(report.render())
    return EXIT_OK if report.passed else EXIT_VERIFY


def _cmd_legendre_dump(args) -> int:
    table = legendre.build_table(args.max)
    _emit_json({
        "max_degree": table.max_degree,
        "P": [coeff_strings(p) for p in table.P],
        "p_low": [None if p is None else coeff_strings(p) for p in table.p_low],
        "gamma": [coeff_strings(g) for g in table.gamma],
    })
    return EXIT_OK


def _add_format(p: argparse.ArgumentParser, default: str) -> None:
    p.add_argument("--format", choices=("json", "csv"), default=default,
                   help=f"output format (default {default})")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="poincare-sharp",
        description="Sharp constants for a pointwise Poincare-type inequality "
                    "under vanishing-moment constraints on [-1, 1].",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("constant", help="exact solution at one interior point")
    p.add_argument("--m", type=int, required=True, help="number of vanishing moments")
    p.add_argument("--x", type=_rational_arg, required=True, help="evaluation point as p/q")
    _add_format(p, "json")
    p.set_defaults(handler=_cmd_constant)

    p = sub.add_parser("family", help="squared constant as a polynomial in x")
    p.add_argument("--m", type=int, required=True)
    _add_format(p, "json")
    p.set_defaults(handler=_cmd_family)

    p = sub.add_parser("extremal", help="sample the extremal function")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--x", type=_rational_arg, required=True)
    p.add_argument("--samples", type=int, default=128, help="uniform sample count (kink added)")
    _add_format(p, "csv")
    p.set_defaults(handler=_cmd_extremal)

    p = sub.add_parser("table", help="tabulate the constant over a uniform grid")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--grid", type=int, default=64, help="grid resolution: emits grid+1 rows")
    _add_format(p, "csv")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("endpoint", help="closed form at x = +1 or -1")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--side", type=int, choices=(1, -1), default=1)
    _add_format(p, "json")
    p.set_defaults(handler=_cmd_endpoint)

    p = sub.add_parser("oracle", help="independent finite-element estimate")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--nodes", type=int, default=513)
    p.add_argument("--exact", action="store_true", help="compare against the exact constant")
    _add_format(p, "csv")
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("verify", help="run the exact self-verification suite")
    p.add_argument("--max-m", type=int, default=8, dest="max_m")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("legendre", help="orthogonal-polynomial table utilities")
    leg = p.add_subparsers(dest="legendre_command", required=True, metavar="action")
    d = leg.add_parser("dump", help="emit the polynomial tables as JSON")
    d.add_argument("--max", type=int, default=12, help="highest degree to build")
    d.set_defaults(handler=_cmd_legendre_dump)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except oracle.NumericalFailure as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
