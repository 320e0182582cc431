"""Prime generation, prime counting in progressions, and logarithmic integrals.

The sieve is a segmented, odd-only sieve of Eratosthenes; everything
downstream works from the resulting sorted prime array.  Counting sums used
by the exponential-sum machinery start at p = 3 (2 is sieved but excluded by
the progression counters).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np
from scipy.integrate import quad

from .errors import DomainError, OutOfRangeError, ResourceLimitError

DEFAULT_SEGMENT = 1 << 20       # numbers per sieve segment
DEFAULT_HARD_CAP = 10 ** 8      # largest limit sieve() will materialize


@dataclass(frozen=True)
class PrimeTable:
    """All primes <= limit, sorted ascending. Immutable and thread-safe."""

    limit: int
    primes: np.ndarray

    def __post_init__(self) -> None:
        self.primes.flags.writeable = False

    def __len__(self) -> int:
        return int(self.primes.size)


@dataclass(frozen=True)
class ResidueSpectrum:
    """Counts of primes p with lo <= p <= hi per residue class mod modulus."""

    modulus: int
    lo: int
    hi: float
    counts: np.ndarray

    def __post_init__(self) -> None:
        self.counts.flags.writeable = False

    @property
    def total(self) -> int:
        return int(self.counts.sum())


def _small_sieve(limit: int) -> np.ndarray:
    """Dense boolean sieve; used for base primes and small limits."""
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return flags


def iter_prime_segments(
    limit: int, segment_size: int = DEFAULT_SEGMENT
) -> Iterator[np.ndarray]:
    """Yield sorted int64 arrays of primes covering [2, limit] in order.

    Segments partition the range, so concatenating the yields gives every
    prime <= limit exactly once.  Memory use is O(segment_size + sqrt(limit)).
    """
    if limit < 2:
        return
    if segment_size < 1 << 10:
        raise DomainError(f"segment_size {segment_size} too small (min 1024)")
    root = math.isqrt(limit)
    base_flags = _small_sieve(max(root, 3))
    base = np.flatnonzero(base_flags).astype(np.int64)
    base_odd = base[base > 2]

    lo = 2
    first = True
    while lo <= limit:
        hi = min(lo + segment_size, limit + 1)  # exclusive
        # odd-only mask for odds in [lo, hi)
        start_odd = lo if lo % 2 == 1 else lo + 1
        n_odd = max(0, (hi - start_odd + 1) // 2)
        mask = np.ones(n_odd, dtype=bool)
        for p in base_odd:
            p = int(p)
            if p * p >= hi:
                break
            first_multiple = max(p * p, ((lo + p - 1) // p) * p)
            if first_multiple % 2 == 0:
                first_multiple += p
            if first_multiple >= hi:
                continue
            mask[(first_multiple - start_odd) // 2 :: p] = False
        seg = start_odd + 2 * np.flatnonzero(mask).astype(np.int64)
        if first:
            seg = np.concatenate((np.array([2], dtype=np.int64), seg))
            first = False
        yield seg
        lo = hi


def sieve(
    limit: int,
    segment_size: int = DEFAULT_SEGMENT,
    hard_cap: int = DEFAULT_HARD_CAP,
) -> PrimeTable:
    """Sieve all primes <= limit into a PrimeTable.

    Raises DomainError for limit < 2 and ResourceLimitError above hard_cap.
    """
    if limit < 2:
        raise DomainError(f"sieve limit must be >= 2, got {limit}")
    if limit > hard_cap:
        raise ResourceLimitError(
            f"sieve limit {limit} exceeds the configured cap {hard_cap}"
        )
    parts = list(iter_prime_segments(limit, segment_size))
    primes = np.concatenate(parts) if parts else np.empty(0, dtype=np.int64)
    return PrimeTable(limit=limit, primes=primes)


def pi(x: float, table: PrimeTable) -> int:
    """pi(x): number of primes <= x."""
    if x > table.limit:
        raise OutOfRangeError(f"x={x} exceeds table limit {table.limit}")
    return int(np.searchsorted(table.primes, math.floor(x), side="right"))


def _odd_prime_slice(x: float, table: PrimeTable) -> np.ndarray:
    """Primes p with 3 <= p <= x as a view into the table."""
    if x > table.limit:
        raise OutOfRangeError(f"x={x} exceeds table limit {table.limit}")
    lo = np.searchsorted(table.primes, 3, side="left")
    hi = np.searchsorted(table.primes, math.floor(x), side="right")
    return table.primes[lo:hi]


def pi_progression(x: float, q: int, a: int, table: PrimeTable) -> int:
    """Count primes p with 3 <= p <= x and p = a (mod q).

    The count deliberately starts at 3; p = 2 never participates in the
    sums this feeds.
    """
    if q < 1:
        raise DomainError(f"modulus must be >= 1, got {q}")
    ps = _odd_prime_slice(x, table)
    return int(np.count_nonzero(ps % q == a % q))


def residue_spectrum(x: float, q: int, table: PrimeTable) -> ResidueSpectrum:
    """Residue-class spectrum of primes in [3, x] mod q in one pass."""
    if q < 1:
        raise DomainError(f"modulus must be >= 1, got {q}")
    ps = _odd_prime_slice(x, table)
    counts = np.bincount(ps % q, minlength=q).astype(np.int64)
    return ResidueSpectrum(modulus=q, lo=3, hi=float(x), counts=counts)


def _log_power_integral(x: float, beta: float) -> float:
    # integrand u^(beta-1)/log u is smooth on [2, x]; split at u=4 so the
    # adaptive rule does not waste nodes on the slowly varying left edge
    def f(u: float) -> float:
        return u ** (beta - 1.0) / math.log(u)

    if x == 2.0:
        return 0.0
    if x <= 4.0:
        val, _ = quad(f, 2.0, x, epsabs=1e-10, epsrel=1e-12, limit=200)
        return val
    left, _ = quad(f, 2.0, 4.0, epsabs=1e-10, epsrel=1e-12, limit=200)
    right, _ = quad(f, 4.0, x, epsabs=1e-10, epsrel=1e-12, limit=200)
    return left + right


def li(x: float) -> float:
    """Offset logarithmic integral: integral of du/log u from 2 to x."""
    if x < 2:
        raise DomainError(f"li requires x >= 2, got {x}")
    return _log_power_integral(float(x), 1.0)


def exceptional_integral(x: float, beta: float) -> float:
    """Integral of u^(beta-1)/log u from 2 to x; equals li(x) at beta = 1."""
    if x < 2:
        raise DomainError(f"exceptional_integral requires x >= 2, got {x}")
    if not 0.0 < beta <= 1.0:
        raise DomainError(f"beta must lie in (0, 1], got {beta}")
    return _log_power_integral(float(x), float(beta))
