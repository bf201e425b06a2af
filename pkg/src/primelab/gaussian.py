"""Gaussian primes in the closed first quadrant, counted inside norm circles.

A point a+bi with a, b >= 0 is prime exactly when either it sits on an axis
and its nonzero coordinate is a rational prime congruent to 3 mod 4, or it
is off-axis and its norm a^2 + b^2 is a rational prime.  Counting both
(q, 0) and (0, q) follows the quadrant restriction literally and is the
default; the "dedupe-axes" convention keeps only (q, 0) so that no two
counted points are associates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .sieve import PrimeTable

AXIS_CONVENTIONS = ("both-axes", "dedupe-axes")

# brute-force irreducibility scans every divisor candidate; cap the norm
BRUTE_NORM_CAP = 10**6


@dataclass(frozen=True)
class GaussPoint:
    """First-quadrant Gaussian integer a + bi, not zero."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 0 or self.b < 0:
            raise ValueError(f"coordinates must be >= 0, got ({self.a}, {self.b})")
        if self.a == 0 and self.b == 0:
            raise ValueError("0 + 0i has no primality status")

    @property
    def norm(self) -> int:
        return self.a * self.a + self.b * self.b


@dataclass(frozen=True)
class GaussianCensus:
    """Cumulative Gaussian-prime counts indexed by integer norm bound."""

    norm_limit: int
    axis_convention: str
    cumulative: np.ndarray  # int64, index n in [0, norm_limit]

    def counts_at(self, xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        if xs.size and (xs.min() < 1 or xs.max() > self.norm_limit):
            raise ValueError("norm bounds outside census range")
        return self.cumulative[xs]

    def change_grid(self) -> np.ndarray:
        return np.arange(1, self.norm_limit + 1, dtype=np.int64)

    def describe(self) -> dict[str, str]:
        return {
            "domain": "gaussian",
            "norm_limit": str(self.norm_limit),
            "axes": self.axis_convention,
        }


def is_gaussian_prime(p: GaussPoint, table: PrimeTable) -> bool:
    """Classify via the norm; needs table.limit >= p.norm."""
    n = p.norm
    if table.limit < n:
        raise ValueError(f"table.limit={table.limit} < norm {n}")
    if p.b == 0:
        return p.a % 4 == 3 and bool(table.flags[p.a])
    if p.a == 0:
        return p.b % 4 == 3 and bool(table.flags[p.b])
    return bool(table.flags[n])


def gaussian_brute_irreducible(p: GaussPoint) -> bool:
    """Divisor-scan irreducibility, independent of the norm classification.

    Tests one representative x + yi (x >= 1, y >= 0) of every associate
    class with norm strictly between 1 and N(p); division is exact when
    p * conj(beta) has both coordinates divisible by N(beta).
    """
    n = p.norm
    if not 1 <= n <= BRUTE_NORM_CAP:
        raise ValueError(f"norm {n} outside oracle range [1, {BRUTE_NORM_CAP}]")
    if n == 1:
        return False  # unit
    a, b = p.a, p.b
    for y in range(0, math.isqrt(n - 1) + 1):
        hi = math.isqrt(n - 1 - y * y)
        if hi < 1:
            continue
        xs = np.arange(1, hi + 1, dtype=np.int64)
        norms = xs * xs + y * y
        re = a * xs + b * y
        im = b * xs - a * y
        divides = (norms > 1) & (re % norms == 0) & (im % norms == 0)
        if divides.any():
            return False
    return True


def gaussian_census(norm_limit: int, convention: str, table: PrimeTable) -> GaussianCensus:
    """Count Gaussian primes with a, b >= 0 by integer norm up to norm_limit."""
    if convention not in AXIS_CONVENTIONS:
        raise ValueError(f"unknown axis convention {convention!r}")
    if not isinstance(norm_limit, int) or norm_limit < 1:
        raise ValueError(f"norm_limit must be a positive integer, got {norm_limit!r}")
    if table.limit < norm_limit:
        raise ValueError(f"table.limit={table.limit} < norm_limit {norm_limit}")

    flags = table.flags
    hits: list[np.ndarray] = []
    # off-axis points: prime iff the norm is prime
    for b in range(1, math.isqrt(norm_limit) + 1):
        b2 = b * b
        if norm_limit - b2 < 1:
            break
        amax = math.isqrt(norm_limit - b2)
        a = np.arange(1, amax + 1, dtype=np.int64)
        norms = a * a + b2
        hits.append(norms[flags[norms]])
    # axis points (q, 0) and (0, q) at norm q^2, q prime, q = 3 (mod 4)
    qmax = math.isqrt(norm_limit)
    qs = np.flatnonzero(flags[: qmax + 1]).astype(np.int64)
    qs = qs[qs % 4 == 3]
    axis_copies = 2 if convention == "both-axes" else 1
    hits.append(np.repeat(qs * qs, axis_copies))

    all_norms = np.concatenate(hits) if hits else np.zeros(0, dtype=np.int64)
    counts = np.bincount(all_norms, minlength=norm_limit + 1)
    cumulative = np.cumsum(counts, dtype=np.int64)
    cumulative.setflags(write=False)
    return GaussianCensus(norm_limit=norm_limit, axis_convention=convention, cumulative=cumulative)


def pi_G(census: GaussianCensus, norm_bound: int) -> int:
    """Cumulative prime count at the given integer norm bound."""
    if not 1 <= norm_bound <= census.norm_limit:
        raise ValueError(f"norm_bound={norm_bound} outside [1, {census.norm_limit}]")
    return int(census.cumulative[norm_bound])


def estimate_pi_G(r):
    """Conjectured count r^2 / (2 ln r) inside the norm circle of radius r;
    accepts scalars or arrays."""
    rs = np.asarray(r)
    if np.any(rs <= 1):
        raise ValueError(f"r must be > 1, got {r}")
    if np.any(rs > 2**53):
        raise ValueError("r too large to evaluate in double precision")
    result = r * r / (2.0 * np.log(r))
    return float(result) if np.isscalar(r) else result
