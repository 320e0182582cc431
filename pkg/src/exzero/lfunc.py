"""Dirichlet L(s, chi) for real s and real primitive chi, plus real-zero
scanning on (0, 1).

L is evaluated through the finite Hurwitz-zeta rewrite
    L(s, chi) = q^(-s) * sum_{a=1}^{q} chi(a) zeta(s, a/q),
with each Hurwitz value from Euler-Maclaurin: an explicit head of n_terms
summands, the integral and half terms, and Bernoulli corrections up to order
2*tail_order.  With the defaults (50 terms, order 20) the truncation error is
far below 1e-12 throughout the supported band s in [0.05, 10].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .characters import RealCharacter
from .errors import DomainError

__all__ = [
    "ZeroScanResult",
    "S_BAND",
    "hurwitz_zeta",
    "l_value",
    "bracket_sign_changes",
    "bisect_root",
    "scan_real_zeros",
    "zero_bound",
]

S_BAND = (0.05, 10.0)
_POLE_EPS = 1e-6  # offset used to average across the s = 1 pole

_B2J = [
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6),
    Fraction(-3617, 510), Fraction(43867, 798), Fraction(-174611, 330),
    Fraction(854513, 138), Fraction(-236364091, 2730),
]
# B_{2j} / (2j)! for j = 1..12
_EM_COEF = [float(b / math.factorial(2 * j)) for j, b in enumerate(_B2J, start=1)]


def _check_band(s: float) -> None:
    if s == 1.0:
        raise DomainError("s = 1 is the Hurwitz pole")
    if not S_BAND[0] <= s <= S_BAND[1]:
        raise DomainError(f"s={s} outside supported band {S_BAND}")


def hurwitz_zeta(
    s: float,
    a: float | np.ndarray,
    n_terms: int = 50,
    tail_order: int = 10,
):
    """Hurwitz zeta(s, a) for s in the supported band and a in (0, 1].

    Accepts a scalar or array of a-values; vectorized over a.
    """
    _check_band(s)
    if not 1 <= tail_order <= len(_EM_COEF):
        raise DomainError(f"tail_order must be in 1..{len(_EM_COEF)}")
    a_arr = np.atleast_1d(np.asarray(a, dtype=np.float64))
    if np.any((a_arr <= 0.0) | (a_arr > 1.0)):
        raise DomainError("a must lie in (0, 1]")

    n = np.arange(n_terms, dtype=np.float64)[:, None]
    head = np.sum((n + a_arr[None, :]) ** (-s), axis=0)
    nb = n_terms + a_arr
    result = head + nb ** (1.0 - s) / (s - 1.0) + 0.5 * nb ** (-s)
    rising = s  # (s)_{2j-1}, advanced two factors per correction
    for j in range(1, tail_order + 1):
        result += _EM_COEF[j - 1] * rising * nb ** (-s - 2 * j + 1)
        rising *= (s + 2 * j - 1) * (s + 2 * j)
    if np.isscalar(a) or np.ndim(a) == 0:
        return float(result[0])
    return result


def l_value(
    s: float,
    chi: RealCharacter,
    n_terms: int = 50,
    tail_order: int = 10,
) -> float:
    """L(s, chi) for real primitive chi; real s in the supported band.

    At s = 1 the value is the average of s = 1 +/- 1e-6: the pole parts of
    the Hurwitz terms cancel inside the character sum (the value table sums
    to zero), leaving an O(eps^2) error.
    """
    if not chi.primitive:
        raise DomainError("l_value requires a primitive (nonprincipal) character")
    if abs(s - 1.0) < 1e-12:
        lo = l_value(1.0 - _POLE_EPS, chi, n_terms, tail_order)
        hi = l_value(1.0 + _POLE_EPS, chi, n_terms, tail_order)
        return 0.5 * (lo + hi)
    _check_band(s)
    q = chi.modulus
    active = np.flatnonzero(chi.values)
    z = hurwitz_zeta(s, active / q, n_terms, tail_order)
    return float(q ** (-s) * np.dot(chi.values[active].astype(np.float64), z))


@dataclass(frozen=True)
class ZeroScanResult:
    """Sign-change scan of L(s, chi) on a real interval."""

    modulus: int
    lo: float
    hi: float
    step: float
    brackets: tuple[tuple[float, float], ...]
    zeros: tuple[float, ...]
    beta: float | None  # largest refined zero, if any


def _grid(lo: float, hi: float, step: float) -> np.ndarray:
    n = int(math.ceil((hi - lo) / step - 1e-12))
    pts = lo + step * np.arange(n + 1)
    pts[-1] = min(pts[-1], hi)
    if pts[-1] < hi - 1e-15:
        pts = np.append(pts, hi)
    return pts


def bracket_sign_changes(
    f: Callable[[float], float], lo: float, hi: float, step: float
) -> list[tuple[float, float]]:
    """Sample f on the grid and return the consecutive pairs where the sign
    flips (an exact zero at a sample brackets with its right neighbor)."""
    pts = _grid(lo, hi, step)
    vals = [f(float(s)) for s in pts]
    brackets = []
    for i in range(len(pts) - 1):
        if vals[i] == 0.0 or vals[i] * vals[i + 1] < 0.0:
            brackets.append((float(pts[i]), float(pts[i + 1])))
    return brackets


def bisect_root(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-12,
    max_iter: int = 200,
) -> float:
    """Plain bisection; requires a sign change (or exact zero) on [a, b]."""
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if fa * fb > 0.0:
        raise DomainError(f"no sign change on [{a}, {b}]")
    for _ in range(max_iter):
        mid = 0.5 * (a + b)
        if b - a <= tol:
            return mid
        fm = f(mid)
        if fm == 0.0:
            return mid
        if fa * fm < 0.0:
            b = mid
        else:
            a, fa = mid, fm
    return 0.5 * (a + b)


def scan_real_zeros(
    chi: RealCharacter,
    lo: float = 0.05,
    hi: float = 1.0,
    step: float = 1e-3,
    refine_tol: float = 1e-12,
) -> ZeroScanResult:
    """Bracket and bisect every sign change of L(s, chi) on [lo, hi]."""
    if not 0.0 < lo < hi <= 1.0:
        raise DomainError(f"need 0 < lo < hi <= 1, got lo={lo}, hi={hi}")
    if step > 1e-2 or step <= 0.0:
        raise DomainError(f"step must be in (0, 1e-2], got {step}")

    def f(s: float) -> float:
        return l_value(s, chi)

    brackets = bracket_sign_changes(f, lo, hi, step)
    zeros = tuple(bisect_root(f, a, b, refine_tol) for a, b in brackets)
    return ZeroScanResult(
        modulus=chi.modulus,
        lo=lo,
        hi=hi,
        step=step,
        brackets=tuple(brackets),
        zeros=zeros,
        beta=max(zeros) if zeros else None,
    )


def zero_bound(q: int, c: float) -> float:
    """The bound 1 - c / (log q)^2 on the largest real zero."""
    if q < 3:
        raise DomainError(f"q must be >= 3, got {q}")
    if c <= 0.0:
        raise DomainError(f"c must be positive, got {c}")
    return 1.0 - c / math.log(q) ** 2
