"""Goldbach pair counts, the Hardy-Littlewood singular series, the twin-prime
constant, and the conditional lower-bound check for N = 2nq.

Pair counts are ordered: (p1, p2) and (p2, p1) count separately, both primes
at least 3.  The bulk count for all N <= limit is an exact convolution done
by squaring a big-integer encoding of the prime indicator (32 bits per
coefficient), so it carries no floating-point error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import gmpy2
import numpy as np

from .characters import factorize, totient
from .errors import DomainError, OutOfRangeError
from .primes import PrimeTable, _odd_prime_slice, iter_prime_segments

__all__ = [
    "GoldbachRecord",
    "SingularSeriesValue",
    "LowerBoundResult",
    "goldbach_count",
    "goldbach_count_range",
    "twin_prime_partial_product",
    "twin_prime_constant",
    "twin_prime_tail_radius",
    "singular_series",
    "singular_series_direct",
    "hl_prediction",
    "goldbach_record",
    "lower_bound_check",
]

DEFAULT_D_CUTOFF = 10 ** 7
_CONV_BITS = 32  # bits per convolution coefficient; counts stay below 2**32


@dataclass(frozen=True)
class GoldbachRecord:
    n_even: int
    count: int
    prediction: float
    ratio: float


@dataclass(frozen=True)
class SingularSeriesValue:
    n_even: int
    value: float
    cutoff: int


@dataclass(frozen=True)
class LowerBoundResult:
    n: int
    q: int
    n_even: int
    lhs: int
    rhs: float
    holds: bool


def _check_even_target(n_even: int, table: PrimeTable) -> None:
    if n_even % 2 != 0 or n_even < 6:
        raise DomainError(f"target must be an even integer >= 6, got {n_even}")
    if n_even > table.limit:
        raise OutOfRangeError(f"target {n_even} exceeds table limit {table.limit}")


def goldbach_count(n_even: int, table: PrimeTable) -> int:
    """Ordered count of prime pairs (p1, p2), p1 + p2 = n_even, both >= 3."""
    _check_even_target(n_even, table)
    ps = _odd_prime_slice(n_even - 3, table)
    partners = n_even - ps
    pos = np.searchsorted(table.primes, partners)
    ok = (pos < table.primes.size) & (table.primes[np.minimum(pos, table.primes.size - 1)] == partners)
    return int(np.count_nonzero(ok))


def goldbach_count_range(limit: int, table: PrimeTable) -> np.ndarray:
    """Exact ordered pair counts r(N) for every N in 0..limit at once.

    Encodes the odd-prime indicator as a big integer with 32-bit limbs and
    squares it; coefficient N of the square is r(N).
    """
    if limit < 6:
        raise DomainError(f"limit must be >= 6, got {limit}")
    if limit > table.limit:
        raise OutOfRangeError(f"limit {limit} exceeds table limit {table.limit}")
    ps = _odd_prime_slice(limit, table)
    coeffs = np.zeros(limit + 1, dtype="<u4")
    coeffs[ps] = 1
    poly = gmpy2.mpz(int.from_bytes(coeffs.tobytes(), "little"))
    square = int(poly * poly)
    n_coeff = 2 * limit + 2
    raw = square.to_bytes(4 * n_coeff, "little")
    counts = np.frombuffer(raw, dtype="<u4", count=n_coeff)
    return counts[: limit + 1].astype(np.int64)


def _tail_estimate(cutoff: float) -> float:
    # integral surrogate for the sum of 1/(p-1)^2 over primes p > cutoff
    return 1.0 / (cutoff * math.log(cutoff))


def twin_prime_tail_radius(cutoff: int) -> float:
    """Certified radius around the tail-corrected partial product."""
    return 2.0 / (cutoff * math.log(cutoff))


def _log_partial_sum(cutoff: int) -> float:
    total = 0.0
    for seg in iter_prime_segments(cutoff):
        odd = seg[seg > 2].astype(np.float64)
        if odd.size:
            total += float(np.sum(np.log1p(-1.0 / (odd - 1.0) ** 2)))
    return total


def twin_prime_partial_product(cutoff: int) -> float:
    """Raw partial product of (1 - 1/(p-1)^2) over odd primes <= cutoff.

    Strictly decreasing in cutoff; no tail correction applied.
    """
    if cutoff < 10 ** 3:
        raise DomainError(f"cutoff must be >= 1000, got {cutoff}")
    return math.exp(_log_partial_sum(cutoff))


@lru_cache(maxsize=8)
def twin_prime_constant(cutoff: int = DEFAULT_D_CUTOFF) -> float:
    """The constant d = product over odd primes of (1 - 1/(p-1)^2).

    Partial product to cutoff with a logarithmic tail correction; the result
    sits within twin_prime_tail_radius(cutoff) of the true constant.  Cached
    per cutoff, so the default is paid once per process.
    """
    if cutoff < 10 ** 3:
        raise DomainError(f"cutoff must be >= 1000, got {cutoff}")
    return math.exp(_log_partial_sum(cutoff) - _tail_estimate(cutoff))


def _odd_prime_divisors(n: int) -> list[int]:
    return [p for p in factorize(n) if p != 2]


def singular_series(n_even: int, cutoff: int = DEFAULT_D_CUTOFF) -> SingularSeriesValue:
    """Hardy-Littlewood singular series (N/phi(N)) prod_{p not dividing N}
    (1 - 1/(p-1)^2), over odd primes.

    Computed from the cached twin-prime constant by dividing out the factors
    at odd primes dividing N; for even N the prime 2 is excluded from the
    product automatically.
    """
    if n_even % 2 != 0 or n_even < 6:
        raise DomainError(f"N must be an even integer >= 6, got {n_even}")
    d = twin_prime_constant(cutoff)
    value = n_even / totient(n_even) * d
    for p in _odd_prime_divisors(n_even):
        value /= 1.0 - 1.0 / (p - 1.0) ** 2
    return SingularSeriesValue(n_even=n_even, value=value, cutoff=cutoff)


def singular_series_direct(n_even: int, cutoff: int) -> float:
    """The same series by a literal product over odd primes <= cutoff that do
    not divide N (verification route; same tail correction)."""
    if n_even % 2 != 0 or n_even < 6:
        raise DomainError(f"N must be an even integer >= 6, got {n_even}")
    if cutoff < 10 ** 3:
        raise DomainError(f"cutoff must be >= 1000, got {cutoff}")
    skip = np.array(_odd_prime_divisors(n_even), dtype=np.int64)
    total = 0.0
    for seg in iter_prime_segments(cutoff):
        odd = seg[seg > 2]
        if skip.size:
            odd = odd[~np.isin(odd, skip)]
        if odd.size:
            off = odd.astype(np.float64)
            total += float(np.sum(np.log1p(-1.0 / (off - 1.0) ** 2)))
    product = math.exp(total - _tail_estimate(cutoff))
    return n_even / totient(n_even) * product


def hl_prediction(n_even: int, cutoff: int = DEFAULT_D_CUTOFF) -> float:
    """Main-term prediction: singular series times N / (log N)^2."""
    series = singular_series(n_even, cutoff)
    return series.value * n_even / math.log(n_even) ** 2


def goldbach_record(
    n_even: int, table: PrimeTable, cutoff: int = DEFAULT_D_CUTOFF
) -> GoldbachRecord:
    """Count, prediction, and their ratio for one even N."""
    count = goldbach_count(n_even, table)
    prediction = hl_prediction(n_even, cutoff)
    return GoldbachRecord(
        n_even=n_even,
        count=count,
        prediction=prediction,
        ratio=count / prediction,
    )


def lower_bound_check(
    n: int, q: int, table: PrimeTable, cutoff: int = DEFAULT_D_CUTOFF
) -> LowerBoundResult:
    """Compare the pair count at N = 2nq against the conditional lower bound
    (q/phi(q)) * 2nq * d / (log 2nq)^2.

    Reports the comparison; the bound is asymptotic, so small N may fail it.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if q < 3 or q % 2 == 0:
        raise DomainError(f"q must be an odd modulus >= 3, got {q}")
    n_even = 2 * n * q
    _check_even_target(n_even, table)
    d = twin_prime_constant(cutoff)
    lhs = goldbach_count(n_even, table)
    rhs = q / totient(q) * n_even * d / math.log(n_even) ** 2
    return LowerBoundResult(n=n, q=q, n_even=n_even, lhs=lhs, rhs=rhs, holds=lhs >= rhs)
