"""Independent reference implementations used only by the tests.

Everything here deliberately avoids the package's own code paths: trial
division instead of the sieve, literal double loops instead of the
convolution, adaptive Simpson instead of the library quadrature, and a
block-summed Dirichlet series instead of the Hurwitz decomposition.
"""

from __future__ import annotations

import math

import numpy as np


def is_prime_trial(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_by_trial(limit: int) -> list[int]:
    return [n for n in range(2, limit + 1) if is_prime_trial(n)]


def adaptive_simpson(f, a: float, b: float, tol: float = 1e-12) -> float:
    """Recursive adaptive Simpson quadrature."""

    def simpson(lo, hi, flo, fmid, fhi):
        return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)

    def recurse(lo, hi, flo, fmid, fhi, whole, eps, depth):
        mid = 0.5 * (lo + hi)
        lm, rm = 0.5 * (lo + mid), 0.5 * (mid + hi)
        flm, frm = f(lm), f(rm)
        left = simpson(lo, mid, flo, flm, fmid)
        right = simpson(mid, hi, fmid, frm, fhi)
        if depth <= 0 or abs(left + right - whole) <= 15.0 * eps:
            return left + right + (left + right - whole) / 15.0
        return recurse(lo, mid, flo, flm, fmid, left, eps / 2.0, depth - 1) + recurse(
            mid, hi, fmid, frm, fhi, right, eps / 2.0, depth - 1
        )

    if a == b:
        return 0.0
    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = simpson(a, b, fa, fm, fb)
    return recurse(a, b, fa, fm, fb, whole, tol, 50)


def goldbach_counts_brute(limit: int, primes: np.ndarray) -> np.ndarray:
    """Ordered pair counts r(N) for N <= limit by the literal double loop
    over primes in [3, limit], accumulated in chunks."""
    ps = primes[(primes >= 3) & (primes <= limit)].astype(np.int64)
    counts = np.zeros(limit + 1, dtype=np.int64)
    chunk = max(1, 10 ** 7 // max(1, ps.size))
    for start in range(0, ps.size, chunk):
        sums = (ps[start : start + chunk, None] + ps[None, :]).ravel()
        sums = sums[sums <= limit]
        counts += np.bincount(sums, minlength=limit + 1)
    return counts


def _binom_neg_s(s: float, j: int) -> float:
    # binomial(-s, j)
    val = 1.0
    for i in range(j):
        val *= (-s - i) / (i + 1)
    return val


def _zeta_tail(sigma: float, m0: int) -> float:
    # sum over m >= m0 of m^(-sigma) by Euler-Maclaurin
    m = float(m0)
    return (
        m ** (1.0 - sigma) / (sigma - 1.0)
        + 0.5 * m ** (-sigma)
        + sigma / 12.0 * m ** (-sigma - 1.0)
        - sigma * (sigma + 1.0) * (sigma + 2.0) / 720.0 * m ** (-sigma - 3.0)
    )


def dirichlet_l_series(values: np.ndarray, s: float, blocks: int = 10 ** 4) -> float:
    """L(s, chi) by direct Dirichlet-series summation in period blocks plus a
    Taylor/Euler-Maclaurin tail.

    values is the length-q character table; the block sums converge
    absolutely like m^(-s-1) because each full period sums to zero.
    """
    q = len(values)
    a = np.arange(1, q + 1, dtype=np.float64)
    chi = np.asarray(values, dtype=np.float64)[np.arange(1, q + 1) % q]
    m = np.arange(blocks, dtype=np.float64)[:, None]
    head = float(np.sum(chi[None, :] * (q * m + a[None, :]) ** (-s)))
    theta = a / q
    tail = 0.0
    for j in range(1, 9):
        s_j = float(np.dot(chi, theta ** j))
        tail += _binom_neg_s(s, j) * s_j * _zeta_tail(s + j, blocks)
    return head + q ** (-s) * tail
