"""Command line interface.

Exit codes: 0 success or verified, 1 verification/criterion failure,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Sequence

from .convergence import ConvergenceQuery, first_failing_k
from .core import MTIndex, MZVIndex, parse_rational
from .evaluator import (
    PrecisionError,
    approximate_combination,
    approximate_mt,
    approximate_mzv,
    verify_reduction,
)
from .reducer import closed_form_ones, product_to_mzv, reduce
from .syntax import FORMATTERS, ParseError, Product, format_json, format_plain, parse

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _literal(text: str, *kinds):
    try:
        lit = parse(text)
    except ParseError as exc:
        raise UsageError(f"parse error: {exc}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not isinstance(lit, kinds):
        names = "/".join({MTIndex: "T", MZVIndex: "Z", Product: "P"}[k] for k in kinds)
        raise UsageError(f"expected a {names}(...) literal, got {text!r}")
    return lit


def _render(source: str, combo, fmt: str) -> str:
    if fmt == "json":
        return format_json(source, combo)
    return FORMATTERS[fmt](combo)


def _int_list(text: str) -> List[int]:
    try:
        values = [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("cutoffs must be positive")
    return values


def _rational_list(text: str):
    try:
        return [parse_rational(v) for v in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def cmd_reduce(args) -> tuple[int, str]:
    t = _literal(args.literal, MTIndex)
    return EXIT_OK, _render(str(t), reduce(t), args.format)


def cmd_product(args) -> tuple[int, str]:
    p = _literal(args.literal, Product)
    try:
        combo = product_to_mzv(p.args)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK, _render(str(p), combo, args.format)


def cmd_closed_form(args) -> tuple[int, str]:
    if args.r < 1 or args.s < 1:
        raise UsageError("r and s must be positive")
    source = "T(%s;%d)" % (",".join(["1"] * args.r), args.s)
    return EXIT_OK, _render(source, closed_form_ones(args.r, args.s), args.format)


def cmd_verify(args) -> tuple[int, str]:
    t = _literal(args.literal, MTIndex)
    report = verify_reduction(t, args.n)
    lines = [f"{t} = {format_plain(report.reduced)}"]
    for N, lhs, rhs in zip(report.cutoffs, report.lhs, report.rhs):
        status = "OK" if lhs == rhs else "MISMATCH"
        lines.append(f"N={N}: lhs={lhs} rhs={rhs} {status}")
    lines.append("verdict: " + ("OK" if report.verdict else "FAILED"))
    return (EXIT_OK if report.verdict else EXIT_FAIL), "\n".join(lines)


def cmd_eval(args) -> tuple[int, str]:
    lit = _literal(args.literal, MTIndex, MZVIndex, Product)
    try:
        if isinstance(lit, MTIndex):
            approx = approximate_mt(lit, args.eps)
        elif isinstance(lit, MZVIndex):
            approx = approximate_mzv(lit, args.eps)
        else:
            approx = approximate_combination(product_to_mzv(lit.args), args.eps)
    except PrecisionError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK, f"{lit} = {approx.value!r} +/- {approx.error:.3g} (cutoff N={approx.cutoff})"


def cmd_converges(args) -> tuple[int, str]:
    q = ConvergenceQuery(tuple(args.sigmas), args.sigma)
    k = first_failing_k(q)
    if k is None:
        return EXIT_OK, "certified-convergent"
    return EXIT_FAIL, f"criterion-fails at k={k}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tornheim",
        description="Reduce Mordell-Tornheim zeta values to multiple zeta values.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--output", "-o", help="write the result to this file")
        return p

    def formatted(p):
        p.add_argument("--format", "-f", choices=["plain", "latex", "json"], default="plain")

    p = add("reduce", cmd_reduce, "reduce T(s1,...,sr;s) to MZVs")
    p.add_argument("literal")
    formatted(p)

    p = add("product", cmd_product, "expand P(s1,...,sr) = zeta(s1)...zeta(sr) into MZVs")
    p.add_argument("literal")
    formatted(p)

    p = add("closed-form", cmd_closed_form, "r! zeta(s+1,1,...,1) for T(1,...,1;s)")
    p.add_argument("r", type=int)
    p.add_argument("s", type=int)
    formatted(p)

    p = add("verify", cmd_verify, "check a reduction by exact truncated sums")
    p.add_argument("literal")
    p.add_argument("--n", type=_int_list, default=[10, 25], help="cutoffs, e.g. 10,25")

    p = add("eval", cmd_eval, "floating point value with a guaranteed error bound")
    p.add_argument("literal")
    p.add_argument("--eps", type=float, default=1e-8)

    p = add("converges", cmd_converges, "evaluate the absolute convergence criterion")
    p.add_argument("--sigmas", type=_rational_list, required=True,
                   help="real parts, e.g. 2,0,2 (use --sigmas=-1,2 for a leading minus)")
    p.add_argument("--sigma", type=_rational, default=None,
                   help="real part of the linear-form exponent (Mordell-Tornheim query)")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, text = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
