"""Real Dirichlet characters, Jacobi symbols, totient, and Gauss sums.

For odd square-free q >= 3 the unique primitive real character mod q is the
Jacobi symbol (n|q); the two even moduli 4 and 8 are supported as the
special characters whose Gauss sums are 2i and 2*sqrt(2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, UnsupportedModulusError

__all__ = [
    "RealCharacter",
    "factorize",
    "totient",
    "mobius",
    "is_odd_squarefree",
    "jacobi",
    "real_character",
    "gauss_sum",
    "gauss_sum_reference",
]


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, {prime: exponent}."""
    if n < 1:
        raise DomainError(f"factorize requires n >= 1, got {n}")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def totient(n: int) -> int:
    """Euler's totient via factorization."""
    if n < 1:
        raise DomainError(f"totient requires n >= 1, got {n}")
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def mobius(n: int) -> int:
    """Moebius function: 0 on square-full n, else (-1)^(number of primes)."""
    if n < 1:
        raise DomainError(f"mobius requires n >= 1, got {n}")
    fac = factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def is_odd_squarefree(q: int) -> bool:
    """True iff q is odd and no prime square divides it."""
    if q < 1:
        raise DomainError(f"q must be >= 1, got {q}")
    if q % 2 == 0:
        return False
    return all(e == 1 for e in factorize(q).values())


def jacobi(n: int, q: int) -> int:
    """Jacobi symbol (n|q) for odd q >= 1, by the binary algorithm."""
    if q < 1 or q % 2 == 0:
        raise DomainError(f"jacobi modulus must be odd and positive, got {q}")
    n %= q
    sign = 1
    while n != 0:
        while n % 2 == 0:
            n //= 2
            if q % 8 in (3, 5):
                sign = -sign
        n, q = q, n
        if n % 4 == 3 and q % 4 == 3:
            sign = -sign
        n %= q
    return sign if q == 1 else 0


@dataclass(frozen=True)
class RealCharacter:
    """A real Dirichlet character mod q as a dense value table.

    values[r] in {-1, 0, +1} is chi(r); chi is completely multiplicative
    and vanishes exactly on residues sharing a factor with q.
    """

    modulus: int
    values: np.ndarray
    primitive: bool
    parity_odd: bool = field(init=False)

    def __post_init__(self) -> None:
        self.values.flags.writeable = False
        # chi(-1) = -1 marks an odd character
        object.__setattr__(self, "parity_odd", int(self.values[-1]) == -1)

    def __call__(self, n: int) -> int:
        return int(self.values[n % self.modulus])


def real_character(q: int) -> RealCharacter:
    """The primitive real character mod q.

    Supported moduli: odd square-free q >= 3 (Jacobi symbol) and the even
    moduli 4 and 8.
    """
    if q == 4:
        values = np.array([0, 1, 0, -1], dtype=np.int8)
        return RealCharacter(modulus=4, values=values, primitive=True)
    if q == 8:
        values = np.array([0, 1, 0, -1, 0, -1, 0, 1], dtype=np.int8)
        return RealCharacter(modulus=8, values=values, primitive=True)
    if q < 3 or not is_odd_squarefree(q):
        raise UnsupportedModulusError(
            f"modulus {q} is not odd square-free >= 3 (or 4 or 8)"
        )
    values = np.fromiter((jacobi(r, q) for r in range(q)), dtype=np.int8, count=q)
    return RealCharacter(modulus=q, values=values, primitive=True)


def gauss_sum(chi: RealCharacter) -> complex:
    """tau(chi) = sum over k mod q of chi(k) e(k/q), by direct summation."""
    if not chi.primitive:
        raise DomainError("gauss_sum requires a primitive character")
    q = chi.modulus
    angles = 2.0j * np.pi * np.arange(q) / q
    return complex(np.sum(chi.values.astype(np.float64) * np.exp(angles)))


def gauss_sum_reference(chi: RealCharacter) -> complex:
    """Closed-form value of tau(chi) for the supported moduli.

    sqrt(q) for odd square-free q = 1 (mod 4), i*sqrt(q) for q = 3 (mod 4),
    2i for q = 4, and 2*sqrt(2) for q = 8.
    """
    q = chi.modulus
    if q == 4:
        return 2j
    if q == 8:
        return complex(2.0 * math.sqrt(2.0))
    if q % 4 == 1:
        return complex(math.sqrt(q))
    return complex(0.0, math.sqrt(q))
