import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primelab import pi, sieve_primes
from primelab.sieve import MAX_SIEVE_LIMIT


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def test_small_limit_exact():
    table = sieve_primes(10)
    assert np.flatnonzero(table.flags).tolist() == [2, 3, 5, 7]


def test_count_at_10k(table_10k):
    # 1229 recomputed here against the trial-division oracle
    assert sum(1 for n in range(10**4 + 1) if trial_division_is_prime(n)) == 1229
    assert pi(table_10k, 10**4) == 1229


def test_limit_validation():
    with pytest.raises(ValueError):
        sieve_primes(1)
    with pytest.raises(ValueError):
        sieve_primes(0)
    with pytest.raises(ValueError):
        sieve_primes(MAX_SIEVE_LIMIT + 1)
    with pytest.raises(ValueError):
        sieve_primes(2.5)


def test_pi_basics(table_10k):
    assert pi(table_10k, 0) == 0
    assert pi(table_10k, 1) == 0
    assert pi(table_10k, 2) == 1
    with pytest.raises(ValueError):
        pi(table_10k, 10**4 + 1)
    with pytest.raises(ValueError):
        pi(table_10k, -1)


def test_pi_steps_by_zero_or_one(table_10k):
    counts = np.cumsum(table_10k.flags)
    steps = np.diff(counts)
    assert set(np.unique(steps)) <= {0, 1}


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=10**5))
def test_flags_match_trial_division(table_100k, n):
    assert bool(table_100k.flags[n]) == trial_division_is_prime(n)


def test_segmented_matches_flat():
    flat = sieve_primes(50_000)
    for seg in (64, 1024, 49_999, 50_001):
        segmented = sieve_primes(50_000, segment_size=seg)
        assert np.array_equal(flat.flags, segmented.flags)


def test_flags_immutable(table_10k):
    with pytest.raises(ValueError):
        table_10k.flags[4] = True


def test_primes_listing(table_10k):
    primes = table_10k.primes
    assert primes[0] == 2 and primes[-1] == 9973
    assert np.all(np.diff(primes) > 0)
    assert len(primes) == 1229
