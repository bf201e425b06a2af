"""Command-line front door: censuses, summary statistics, CSV/SVG artifacts.

Exit codes: 0 success, 2 invalid arguments, 3 resource guard tripped,
4 I/O failure.  The guard defaults to 10^8 and can be moved with the
PRIMES_LAB_MAX_LIMIT environment variable.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from . import gaussian, monoid, quadratic, report, series as analysis, sieve

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_IO = 4

DEFAULT_MAX_LIMIT = 10**8
GUARD_ENV = "PRIMES_LAB_MAX_LIMIT"

TABLE1_MODULI = (3, 5, 7, 9, 11, 13, 21, 50)
TABLE1_LIMIT = 10**4
TABLE2_BOUNDS = (10**3, 10**4, 10**5, 10**6, 10**7)


class GuardViolation(Exception):
    pass


def _guard_limit() -> int:
    raw = os.environ.get(GUARD_ENV)
    if raw is None:
        return DEFAULT_MAX_LIMIT
    try:
        return int(raw)
    except ValueError as exc:
        raise GuardViolation(f"{GUARD_ENV}={raw!r} is not an integer") from exc


def _check_guard(value: int, what: str, cap: int | None = None) -> None:
    guard = _guard_limit()
    if cap is not None:
        guard = min(guard, cap)
    if value > guard:
        raise GuardViolation(f"{what}={value} exceeds resource guard {guard}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primelab",
        description="Prime censuses and count estimates in unusual domains",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("monoid", help="census of monoid primes among n = 1 (mod d)")
    p.add_argument("--d", type=int, required=True, help="modulus d >= 2")
    p.add_argument("--limit", type=int, required=True, help="inclusive census bound")
    p.add_argument(
        "--eval-at",
        choices=("limit", "largest"),
        default="limit",
        help="evaluate the summary estimate at the bound or at the largest monoid element",
    )
    p.add_argument("--csv", help="write a one-row summary CSV")
    p.add_argument("--series-csv", help="write the full evaluation series CSV")
    p.add_argument("--svg", help="render the actual-vs-estimate chart")

    p = sub.add_parser("gauss", help="census of Gaussian primes by norm")
    p.add_argument("--norm-limit", type=int, required=True, help="inclusive norm bound")
    p.add_argument(
        "--dedupe-axes",
        action="store_true",
        help="count axis primes once instead of on both axes",
    )
    p.add_argument("--csv", help="write a one-row MAPE summary CSV")
    p.add_argument("--series-csv", help="write the full evaluation series CSV")
    p.add_argument("--svg", help="render the actual-vs-estimate chart")

    p = sub.add_parser("quad", help="census of irreducibles in Z[sqrt(-d)]")
    p.add_argument("--d", type=int, required=True, help="squarefree d >= 1")
    p.add_argument("--bound", type=int, required=True, help="inclusive region bound")
    p.add_argument(
        "--euclidean",
        action="store_true",
        help="bound a^2 + b^2 instead of the ring norm a^2 + d*b^2",
    )
    p.add_argument("--csv", help="write the count series CSV")
    p.add_argument("--svg", help="render the count chart")

    p = sub.add_parser("fit", help="fit c*x/(ln x)^e to a count series")
    p.add_argument("--from-csv", help="read the series from a previously written CSV")
    p.add_argument(
        "--domain",
        choices=("classical", "monoid", "gauss", "quad"),
        help="generate the series from a census instead",
    )
    p.add_argument("--d", type=int, help="modulus / ring parameter where applicable")
    p.add_argument("--limit", type=int, help="bound for classical or monoid domains")
    p.add_argument("--norm-limit", type=int, help="bound for the gauss domain")
    p.add_argument("--bound", type=int, help="bound for the quad domain")
    p.add_argument("--euclidean", action="store_true", help="quad domain region kind")
    p.add_argument("--csv", help="write the fitted parameters as CSV")

    p = sub.add_parser("table1", help="monoid count-vs-estimate summary for fixed moduli")
    p.add_argument("--csv", help="write the summary table CSV")
    p.add_argument("--svg-dir", help="directory for one chart per modulus")

    p = sub.add_parser("table2", help="Gaussian MAPE at increasing norm bounds")
    p.add_argument("--csv", help="write the summary table CSV")

    return parser


def run_cli(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "monoid": _cmd_monoid,
        "gauss": _cmd_gauss,
        "quad": _cmd_quad,
        "fit": _cmd_fit,
        "table1": _cmd_table1,
        "table2": _cmd_table2,
    }
    try:
        return handlers[args.subcommand](args)
    except GuardViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


def _monoid_series(d: int, limit: int) -> tuple[monoid.MonoidCensus, analysis.CountSeries | None]:
    table = sieve.sieve_primes(max(limit, 2))
    census = monoid.monoid_census(monoid.MonoidParams(d=d, limit=limit), table)
    if census.cumulative_counts[-1] == 0:
        return census, None
    ser = analysis.build_series(census, lambda xs: monoid.estimate_pi_d(d, xs))
    return census, ser


def _cmd_monoid(args) -> int:
    _check_guard(args.limit, "limit")
    census, ser = _monoid_series(args.d, args.limit)
    count = int(census.cumulative_counts[-1])
    eval_x = (
        monoid.largest_element(census.params) if args.eval_at == "largest" else args.limit
    )
    estimate = monoid.estimate_pi_d(args.d, eval_x)
    r = analysis.ratio_R(count, estimate)
    mape_pct = analysis.mape(ser) if ser is not None else math.nan
    print(
        f"monoid d={args.d} limit={args.limit}: count={count} "
        f"estimate({eval_x})={estimate:.2f} R={r:.5f} mape={mape_pct:.2f}%"
    )
    if args.csv:
        row = report.MonoidSummary(
            d=args.d,
            largest_element=monoid.largest_element(census.params),
            actual_count=count,
            estimate=estimate,
            r_ratio=r,
            mape_pct=mape_pct,
        )
        report.write_csv([row], args.csv)
        print(f"wrote {args.csv}")
    if args.series_csv:
        if ser is None:
            raise ValueError("census holds no primes; no series to write")
        report.write_csv(ser, args.series_csv)
        print(f"wrote {args.series_csv}")
    if args.svg:
        if ser is None:
            raise ValueError("census holds no primes; no series to render")
        report.render_svg(ser, args.svg)
        print(f"wrote {args.svg}")
    return EXIT_OK


def _gauss_series(norm_limit: int, convention: str) -> tuple[gaussian.GaussianCensus, analysis.CountSeries | None]:
    table = sieve.sieve_primes(max(norm_limit, 2))
    census = gaussian.gaussian_census(norm_limit, convention, table)
    if census.cumulative[-1] == 0:
        return census, None
    ser = analysis.build_series(census, lambda ns: gaussian.estimate_pi_G(np.sqrt(ns)))
    return census, ser


def _cmd_gauss(args) -> int:
    _check_guard(args.norm_limit, "norm-limit")
    convention = "dedupe-axes" if args.dedupe_axes else "both-axes"
    census, ser = _gauss_series(args.norm_limit, convention)
    count = gaussian.pi_G(census, args.norm_limit)
    mape_pct = analysis.mape(ser) if ser is not None else math.nan
    print(
        f"gauss norm-limit={args.norm_limit} axes={convention}: "
        f"count={count} mape={mape_pct:.3f}%"
    )
    if args.csv:
        report.write_csv([report.MapeSummary(args.norm_limit, mape_pct)], args.csv)
        print(f"wrote {args.csv}")
    if args.series_csv:
        if ser is None:
            raise ValueError("census holds no primes; no series to write")
        report.write_csv(ser, args.series_csv)
        print(f"wrote {args.series_csv}")
    if args.svg:
        if ser is None:
            raise ValueError("census holds no primes; no series to render")
        report.render_svg(ser, args.svg)
        print(f"wrote {args.svg}")
    return EXIT_OK


def _cmd_quad(args) -> int:
    _check_guard(args.bound, "bound", cap=quadratic.MAX_CENSUS_BOUND)
    quadratic.validate_ring_param(args.d)
    kind = "euclidean-ball" if args.euclidean else "norm-ball"
    region = quadratic.RegionSpec(kind=kind, bound=args.bound)
    max_norm = args.d * args.bound if args.euclidean else args.bound
    table = sieve.sieve_primes(max(math.isqrt(max_norm), 2))
    ser = quadratic.quad_census(args.d, region, table)
    count = int(ser.actual[-1])
    print(f"quad d={args.d} {kind} bound={args.bound}: irreducibles={count}")
    if args.csv:
        report.write_csv(ser, args.csv)
        print(f"wrote {args.csv}")
    if args.svg:
        report.render_svg(ser, args.svg)
        print(f"wrote {args.svg}")
    return EXIT_OK


def _fit_series(args) -> analysis.CountSeries:
    if args.from_csv and args.domain:
        raise ValueError("choose either --from-csv or --domain, not both")
    if args.from_csv:
        return report.read_series_csv(args.from_csv)
    if args.domain == "classical":
        if args.limit is None:
            raise ValueError("--limit is required for the classical domain")
        _check_guard(args.limit, "limit")
        table = sieve.sieve_primes(args.limit)
        xs = np.arange(2, args.limit + 1, dtype=np.int64)
        actual = np.cumsum(table.flags[2:], dtype=np.int64)
        return analysis.make_series(xs, actual, None, {"domain": "classical", "limit": str(args.limit)})
    if args.domain == "monoid":
        if args.d is None or args.limit is None:
            raise ValueError("--d and --limit are required for the monoid domain")
        _check_guard(args.limit, "limit")
        _, ser = _monoid_series(args.d, args.limit)
        if ser is None:
            raise ValueError("census holds no primes; nothing to fit")
        return ser
    if args.domain == "gauss":
        if args.norm_limit is None:
            raise ValueError("--norm-limit is required for the gauss domain")
        _check_guard(args.norm_limit, "norm-limit")
        _, ser = _gauss_series(args.norm_limit, "both-axes")
        if ser is None:
            raise ValueError("census holds no primes; nothing to fit")
        return ser
    if args.domain == "quad":
        if args.d is None or args.bound is None:
            raise ValueError("--d and --bound are required for the quad domain")
        _check_guard(args.bound, "bound", cap=quadratic.MAX_CENSUS_BOUND)
        quadratic.validate_ring_param(args.d)
        kind = "euclidean-ball" if args.euclidean else "norm-ball"
        max_norm = args.d * args.bound if args.euclidean else args.bound
        table = sieve.sieve_primes(max(math.isqrt(max_norm), 2))
        return quadratic.quad_census(args.d, quadratic.RegionSpec(kind, args.bound), table)
    raise ValueError("fit needs --from-csv or --domain")


def _cmd_fit(args) -> int:
    ser = _fit_series(args)
    result = analysis.fit_model(ser)
    print(
        f"fit {ser.label()}: c={result.c:.6g} e={result.e:.6g} "
        f"rms_rel_err={result.rms_rel_err:.6g}"
    )
    if args.csv:
        text = "c,e,rms_rel_err\n" f"{result.c:.6g},{result.e:.6g},{result.rms_rel_err:.6g}\n"
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.csv}")
    return EXIT_OK


def _cmd_table1(args) -> int:
    table = sieve.sieve_primes(TABLE1_LIMIT)
    rows = []
    for d in TABLE1_MODULI:
        census = monoid.monoid_census(monoid.MonoidParams(d=d, limit=TABLE1_LIMIT), table)
        ser = analysis.build_series(census, lambda xs, d=d: monoid.estimate_pi_d(d, xs))
        largest = monoid.largest_element(census.params)
        estimate = monoid.estimate_pi_d(d, largest)
        count = int(census.cumulative_counts[-1])
        rows.append(
            report.MonoidSummary(
                d=d,
                largest_element=largest,
                actual_count=count,
                estimate=estimate,
                r_ratio=analysis.ratio_R(count, estimate),
                mape_pct=analysis.mape(ser),
            )
        )
        print(
            f"d={d}: largest={largest} count={rows[-1].actual_count} "
            f"estimate={estimate:.2f} R={rows[-1].r_ratio:.5f} mape={rows[-1].mape_pct:.2f}%"
        )
        if args.svg_dir:
            os.makedirs(args.svg_dir, exist_ok=True)
            path = os.path.join(args.svg_dir, f"monoid_d{d}.svg")
            report.render_svg(ser, path)
            print(f"wrote {path}")
    if args.csv:
        report.write_csv(rows, args.csv)
        print(f"wrote {args.csv}")
    return EXIT_OK


def _cmd_table2(args) -> int:
    top = TABLE2_BOUNDS[-1]
    _, ser = _gauss_series(top, "both-axes")
    rows = []
    for bound in TABLE2_BOUNDS:
        upto = np.searchsorted(ser.x, bound, side="right")
        pct = ser.pct_err[:upto]
        rows.append(report.MapeSummary(bound, float(pct[~np.isnan(pct)].mean())))
        print(f"norm-bound={bound}: mape={rows[-1].mape_pct:.3f}%")
    if args.csv:
        report.write_csv(rows, args.csv)
        print(f"wrote {args.csv}")
    return EXIT_OK
