#!/usr/bin/env python3
"""Empirical growth of irreducible counts in Z[sqrt(-d)].

No estimate formula is asserted for these rings; instead the census counts
are fitted to c * x / (ln x)^e so candidate growth laws can be compared
across d.  Writes (d, region, bound, count, c, e, rms_rel_err) rows.
"""

import argparse
import math
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from primelab import RegionSpec, fit_model, quad_census, sieve_primes  # noqa: E402
from primelab.series import CountSeries  # noqa: E402

DEFAULT_RINGS = (1, 2, 3, 5, 6, 7, 10)


def thin(series: CountSeries, points: int = 250) -> CountSeries:
    """Keep a geometric subsample so the fit is not dominated by the tail."""
    import numpy as np

    from primelab import make_series

    lo = int(series.x[np.argmax(series.actual >= 1)])
    xs = np.unique(np.geomspace(max(lo, 3), int(series.x[-1]), points).astype(np.int64))
    actual = series.actual[np.searchsorted(series.x, xs)]
    return make_series(xs, actual, None, dict(series.metadata))


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rings", type=int, nargs="*", default=list(DEFAULT_RINGS))
    parser.add_argument("--bound", type=int, default=50_000)
    parser.add_argument("--euclidean", action="store_true")
    parser.add_argument("--csv", default="out/quad_fits.csv")
    args = parser.parse_args()

    kind = "euclidean-ball" if args.euclidean else "norm-ball"
    max_norm = max(args.rings) * args.bound if args.euclidean else args.bound
    table = sieve_primes(max(math.isqrt(max_norm), 2))

    lines = ["d,region,bound,count,c,e,rms_rel_err"]
    for d in args.rings:
        t0 = time.perf_counter()
        series = quad_census(d, RegionSpec(kind, args.bound), table)
        fit = fit_model(thin(series))
        took = time.perf_counter() - t0
        count = int(series.actual[-1])
        print(
            f"d={d}: count={count} fit c={fit.c:.4g} e={fit.e:.4g} "
            f"rms={fit.rms_rel_err:.3g} ({took:.2f}s)"
        )
        lines.append(
            f"{d},{kind},{args.bound},{count},{fit.c:.6g},{fit.e:.6g},{fit.rms_rel_err:.6g}"
        )

    path = Path(args.csv)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
