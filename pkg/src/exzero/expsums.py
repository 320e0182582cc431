"""Exponential-sum identities: geometric sums, Ramanujan sums, twisted Gauss
sums, prime exponential sums S(k), and the second-moment pair-count identity.

Conventions: e(x) = exp(2*pi*i*x); phases k*r/q are reduced mod q in exact
integer arithmetic before any float conversion, against a cached table of
q-th roots of unity, so summation error stays O(q * ulp).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .characters import RealCharacter, gauss_sum, mobius, real_character, totient
from .errors import DomainError, VerificationError
from .primes import ResidueSpectrum

__all__ = [
    "MomentReport",
    "roots_of_unity",
    "geometric_sum",
    "geometric_sum_direct",
    "ramanujan_sum",
    "ramanujan_sum_direct",
    "twisted_gauss",
    "ramanujan_moment",
    "twisted_ramanujan_sum",
    "prime_exp_sum",
    "pair_count_mod",
    "moment_sum",
]

IMAG_RESIDUAL_TOL = 1e-6   # allowed imaginary leakage relative to max(1, M)
MOMENT_GAP_TOL = 1e-4      # allowed |M - q*P| relative to max(1, q*P)
TWIST_IDENTITY_TOL = 1e-6  # twisted Gauss sum residual per sqrt(q)


@lru_cache(maxsize=64)
def roots_of_unity(q: int) -> np.ndarray:
    """Cached table of e(j/q) for j = 0..q-1 (read-only)."""
    if q < 1:
        raise DomainError(f"modulus must be >= 1, got {q}")
    table = np.exp(2.0j * np.pi * np.arange(q) / q)
    table.flags.writeable = False
    return table


def geometric_sum(m: int, n: int) -> int:
    """Full geometric sum of e(kn/m) over k = 1..m: m if m | n, else 0."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    return m if n % m == 0 else 0


def geometric_sum_direct(m: int, n: int) -> complex:
    """The same sum by literal complex summation (verification route)."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    idx = (np.arange(1, m + 1) * n) % m
    return complex(np.sum(roots_of_unity(m)[idx]))


def ramanujan_sum(q: int, n: int) -> int:
    """Ramanujan sum c_q(n) by the closed form mu(q/g) phi(q) / phi(q/g)."""
    if q < 2:
        raise DomainError(f"ramanujan_sum requires q >= 2, got {q}")
    g = math.gcd(n, q)
    qg = q // g
    mu = mobius(qg)
    if mu == 0:
        return 0
    return mu * totient(q) // totient(qg)


def ramanujan_sum_direct(q: int, n: int) -> complex:
    """c_q(n) by direct summation over residues coprime to q."""
    if q < 2:
        raise DomainError(f"ramanujan_sum requires q >= 2, got {q}")
    a = np.arange(1, q)
    a = a[np.gcd(a, q) == 1]
    return complex(np.sum(roots_of_unity(q)[(a * n) % q]))


def twisted_gauss(chi: RealCharacter, n: int) -> complex:
    """Sum over k mod q of chi(k) e(nk/q), by direct summation.

    For primitive chi this equals chi(n) * tau(chi) for every n (both sides
    vanish when gcd(n, q) > 1); the identity is checked before returning.
    """
    if not chi.primitive:
        raise DomainError("twisted_gauss requires a primitive character")
    q = chi.modulus
    idx = (np.arange(q) * n) % q
    value = complex(np.sum(chi.values.astype(np.float64) * roots_of_unity(q)[idx]))
    expected = chi(n) * gauss_sum(chi)
    if abs(value - expected) > TWIST_IDENTITY_TOL * math.sqrt(q):
        raise VerificationError(
            f"twisted Gauss sum mismatch at q={q}, n={n}: "
            f"{value} vs chi(n)*tau = {expected}"
        )
    return value


def ramanujan_moment(q: int) -> int:
    """Exact integer sum of c_q(k)^2 over k = 1..q; must equal q*phi(q)."""
    if q < 2:
        raise DomainError(f"modulus must be >= 2, got {q}")
    phi_q = totient(q)
    # phi and mu per divisor of q, so the k-loop only pays a gcd each
    div_data: dict[int, int] = {}
    for d in range(1, q + 1):
        if q % d == 0:
            mu = mobius(d)
            div_data[d] = 0 if mu == 0 else mu * phi_q // totient(d)
    total = 0
    for k in range(1, q + 1):
        total += div_data[q // math.gcd(k, q)] ** 2
    if total != q * phi_q:
        raise VerificationError(
            f"Ramanujan moment {total} != q*phi(q) = {q * phi_q} at q={q}"
        )
    return total


def twisted_ramanujan_sum(q: int) -> complex:
    """Sum over k = 1..q of chi(k) c_q(k) with both factors evaluated
    directly; vanishes for the primitive real character mod q."""
    chi = real_character(q)
    roots = roots_of_unity(q)
    a = np.arange(1, q)
    a = a[np.gcd(a, q) == 1]
    total = 0.0 + 0.0j
    for k in range(1, q + 1):
        inner = np.sum(roots[(a * k) % q])
        total += chi(k) * inner
    if abs(total) > 1e-6 * q:
        raise VerificationError(
            f"twisted Ramanujan sum |{total}| > 1e-6*q at q={q}"
        )
    return complex(total)


def prime_exp_sum(spectrum: ResidueSpectrum, k: int) -> complex:
    """S(k) = sum over primes 3 <= p <= x of e(kp/q), from the spectrum.

    O(q) per call; the per-prime loop is folded into the residue counts.
    """
    q = spectrum.modulus
    if not 0 <= k <= q:
        raise DomainError(f"k={k} outside 0..q={q}")
    idx = (np.arange(q) * k) % q
    return complex(np.dot(spectrum.counts.astype(np.float64), roots_of_unity(q)[idx]))


def pair_count_mod(spectrum: ResidueSpectrum) -> int:
    """Exact count of ordered prime pairs (p1, p2) in [3, x]^2 with
    p1 + p2 = 0 (mod q)."""
    q = spectrum.modulus
    c = spectrum.counts
    partner = (q - np.arange(q)) % q
    return int(np.dot(c, c[partner]))


@dataclass(frozen=True)
class MomentReport:
    """Second moment of S(k) against the exact pair-count identity."""

    modulus: int
    x: float
    moment: float            # real part of sum over k=1..q of S(k)^2
    imag_residual: float     # |imaginary part| of that sum
    pair_count: int          # ordered pairs with p1 + p2 = 0 (mod q)
    gap: float               # |moment - q * pair_count|


def moment_sum(spectrum: ResidueSpectrum) -> MomentReport:
    """Evaluate sum over k = 1..q of S(k)^2 (analytic square) and check it
    against q times the exact pair count.

    The square is the analytic one, S(k)^2, not |S(k)|^2; conjugate symmetry
    S(q-k) = conj(S(k)) makes the total real, so the imaginary residual is
    pure rounding and is checked against IMAG_RESIDUAL_TOL.
    """
    q = spectrum.modulus
    if q < 2:
        raise DomainError(f"moment_sum requires q >= 2, got {q}")
    roots = roots_of_unity(q)
    counts = spectrum.counts.astype(np.float64)
    r = np.arange(q)
    total = 0.0 + 0.0j
    for k in range(1, q + 1):
        s_k = np.dot(counts, roots[(r * k) % q])
        total += s_k * s_k
    moment = float(total.real)
    imag_residual = abs(float(total.imag))
    pairs = pair_count_mod(spectrum)
    gap = abs(moment - q * pairs)
    if imag_residual > IMAG_RESIDUAL_TOL * max(1.0, abs(moment)):
        raise VerificationError(
            f"imaginary residual {imag_residual} too large at q={q}, x={spectrum.hi}"
        )
    if gap > MOMENT_GAP_TOL * max(1.0, q * pairs):
        raise VerificationError(
            f"moment identity gap {gap} too large at q={q}, x={spectrum.hi}"
        )
    return MomentReport(
        modulus=q,
        x=spectrum.hi,
        moment=moment,
        imag_residual=imag_residual,
        pair_count=pairs,
        gap=gap,
    )
