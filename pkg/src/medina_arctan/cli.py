"""Command-line front end.

Subcommands cover construction (gen), evaluation (eval, arctan), the
degree-comparison table (compare), the lemma suite (verify), and timing
(bench).  Machine-readable output, JSON or CSV, goes to stdout;
diagnostics go to stderr.  Exit codes: 0 success, 1 verification failure,
2 usage or resource error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
import time
from fractions import Fraction

from .arctan_eval import approx_result_json, arctan_auto, medina_arctan
from .medina import medina_p_closed, medina_pair
from .poly_core import degree, poly_eval_horner, rat_parse
from .taylor_baseline import COMPARISON_COLUMNS, DegreeLimitError, comparison_row
from .verify import WorkLimitExceeded, corrupted_seed, run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

BENCH_SEED = 1729
WORK_LIMIT_ENV = "MEDINA_WORK_LIMIT"


def _rat_arg(text: str) -> Fraction:
    # argparse turns the ValueError into a usage error, exit code 2.
    try:
        return rat_parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="medina-arctan",
        description="Exact-arithmetic arctangent via Medina's polynomial sequence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser(
        "gen", help="construct (m, p_m, h_m, bound) and print it as JSON"
    )
    gen.add_argument("--m", type=int, required=True, help="sequence index, >= 1")
    gen.add_argument(
        "--form",
        choices=("recurrence", "closed", "both"),
        default="recurrence",
        help="construction route for p_m; 'both' also reports their agreement",
    )
    gen.set_defaults(func=cmd_gen)

    ev = sub.add_parser("eval", help="approximate arctan(x) with a fixed index m")
    ev.add_argument("--m", type=int, required=True, help="sequence index, >= 1")
    ev.add_argument("--x", type=_rat_arg, required=True, help="rational argument")
    ev.add_argument(
        "--full",
        action="store_true",
        help="print more decimal places than the bound guarantees",
    )
    ev.set_defaults(func=cmd_eval)

    at = sub.add_parser(
        "arctan", help="approximate arctan(x) to a requested accuracy"
    )
    at.add_argument("--x", type=_rat_arg, required=True, help="rational argument")
    at.add_argument(
        "--eps", type=_rat_arg, required=True, help="target error bound, > 0"
    )
    at.add_argument(
        "--full",
        action="store_true",
        help="print more decimal places than the bound guarantees",
    )
    at.set_defaults(func=cmd_arctan)

    cmp_ = sub.add_parser(
        "compare",
        help="one CSV row comparing minimal Taylor degree against minimal index m",
    )
    cmp_.add_argument(
        "--x", type=_rat_arg, required=True, help="argument in [0, 1]"
    )
    cmp_.add_argument(
        "--eps", type=_rat_arg, required=True, help="target accuracy, > 0"
    )
    cmp_.add_argument(
        "--taylor-mode",
        choices=("oracle", "bound"),
        default="oracle",
        help="judge Taylor degrees by certified true error or by the remainder bound",
    )
    cmp_.set_defaults(func=cmd_compare)

    ver = sub.add_parser("verify", help="run the lemma suite and print the report")
    ver.add_argument(
        "--grid", type=int, required=True, help="grid denominator, >= 2"
    )
    ver.add_argument(
        "--m-max", type=int, required=True, help="largest index checked, >= 1"
    )
    ver.add_argument(
        "--inject-fault",
        action="store_true",
        help="corrupt the seed polynomial first (exercises the failure report)",
    )
    ver.set_defaults(func=cmd_verify)

    bench = sub.add_parser(
        "bench", help="time Horner evaluation of h_m at pseudorandom points"
    )
    bench.add_argument(
        "--m-max", type=int, required=True, help="largest index timed, >= 1"
    )
    bench.add_argument(
        "--points", type=int, default=200, help="evaluation points per index"
    )
    bench.add_argument(
        "--seed", type=int, default=BENCH_SEED, help="seed for the point set"
    )
    bench.set_defaults(func=cmd_bench)

    return parser


def cmd_gen(args) -> int:
    if args.form == "both":
        pair = medina_pair(args.m)
        doc = pair.to_json()
        doc["equal"] = medina_p_closed(args.m) == pair.p
    else:
        doc = medina_pair(args.m, closed=(args.form == "closed")).to_json()
    print(json.dumps(doc))
    return EXIT_OK


def cmd_eval(args) -> int:
    result = medina_arctan(args.x, args.m)
    print(json.dumps(approx_result_json(result, full=args.full)))
    return EXIT_OK


def cmd_arctan(args) -> int:
    result = arctan_auto(args.x, args.eps)
    print(json.dumps(approx_result_json(result, full=args.full)))
    return EXIT_OK


def cmd_compare(args) -> int:
    if not 0 <= args.x <= 1:
        raise ValueError(f"x must lie in [0, 1] for the comparison table, got {args.x}")
    row = comparison_row(args.x, args.eps, oracle_mode=(args.taylor_mode == "oracle"))
    writer = csv.DictWriter(sys.stdout, fieldnames=COMPARISON_COLUMNS)
    writer.writeheader()
    writer.writerow(row)
    return EXIT_OK


def _work_limit_from_env():
    raw = os.environ.get(WORK_LIMIT_ENV)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{WORK_LIMIT_ENV} must be an integer, got {raw!r}") from None


def cmd_verify(args) -> int:
    seed = corrupted_seed() if args.inject_fault else None
    try:
        report = run_suite(
            args.grid,
            args.m_max,
            base_poly=seed,
            work_limit=_work_limit_from_env(),
        )
    except WorkLimitExceeded as exc:
        doc = exc.partial.to_json()
        doc["partial"] = True
        print(json.dumps(doc))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps(report.to_json()))
    if not report.all_passed:
        failed = ", ".join(c.id for c in report.checks if not c.passed)
        print(f"verification failed: {failed}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def bench_points(count: int, seed: int) -> list[Fraction]:
    """Deterministic pseudorandom rationals in [0, 1] with denominator 2^16."""
    rng = random.Random(seed)
    den = 2**16
    return [Fraction(rng.randint(0, den), den) for _ in range(count)]


def _max_coeff_bits(p) -> int:
    return max(
        max(abs(c.numerator).bit_length(), c.denominator.bit_length()) for c in p
    )


def cmd_bench(args) -> int:
    if args.m_max < 1:
        raise ValueError(f"m-max must be >= 1, got {args.m_max}")
    if args.points < 1:
        raise ValueError(f"points must be >= 1, got {args.points}")
    points = bench_points(args.points, args.seed)
    writer = csv.writer(sys.stdout)
    writer.writerow(("m", "degree", "points", "wall_time"))
    for m in range(1, args.m_max + 1):
        h = medina_pair(m).h
        start = time.perf_counter()
        for x in points:
            poly_eval_horner(h, x)
        elapsed = time.perf_counter() - start
        writer.writerow((m, degree(h), args.points, f"{elapsed:.6f}"))
        print(
            f"m={m} max coefficient bit-length {_max_coeff_bits(h)}",
            file=sys.stderr,
        )
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DegreeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
