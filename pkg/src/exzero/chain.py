"""The inequality chain: moment lower bound, character model of S(k), and the
final synthesis step that turns the pieces into a bound on a real zero.

Quantities per (q, x):
  M  = sum over k = 1..q of S(k)^2 (analytic square, real by symmetry)
  P  = ordered prime pairs in [3, x]^2 with p1 + p2 = 0 (mod q)
  G  = sum over n <= floor(x / 2q) of the Goldbach count r(2nq)
  L1 = (q^2/phi(q)) * sum over the same n of 2nq*d / log^2(2nq)
M = qP holds exactly (checked in floats), qP >= qG exactly in integers, and
qG >= L1 is the conditional lower bound being probed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import goldbach as gb
from .characters import factorize, is_odd_squarefree, gauss_sum, real_character, totient
from .errors import DomainError, UnsupportedModulusError
from .expsums import MomentReport, moment_sum, prime_exp_sum, ramanujan_sum
from .primes import PrimeTable, exceptional_integral, li, residue_spectrum

__all__ = [
    "MomentChainReport",
    "ModelResidualReport",
    "SynthesisResult",
    "BetaBoundResult",
    "RoundTripResult",
    "ChainReport",
    "moment_chain",
    "model_residuals",
    "synthesize",
    "beta_bound",
    "beta_round_trip",
    "full_chain",
]

CLOSED_FORM_SLACK = 10.0  # explicit constant for the term-sum vs closed-form gap


def _check_chain_modulus(q: int) -> None:
    if q < 3 or not is_odd_squarefree(q):
        raise UnsupportedModulusError(f"chain modulus must be odd square-free >= 3, got {q}")


@dataclass(frozen=True)
class MomentChainReport:
    q: int
    x: float
    d: float
    moment: MomentReport
    goldbach_sum: int          # G
    n_max: int
    l1_term_sum: float
    l1_closed_form: float
    pair_ge_goldbach: bool     # qP >= qG, exact integers
    qg_ge_l1: bool             # q*G >= L1, the conditional bound
    closed_form_slack_ok: bool | None  # None when x < q^3


def moment_chain(
    q: int, x: float, table: PrimeTable, d: float | None = None
) -> MomentChainReport:
    """Evaluate the moment identity and the Goldbach lower-bound chain."""
    _check_chain_modulus(q)
    if x < 2 * q:
        raise DomainError(f"need x >= 2q, got x={x}, q={q}")
    if d is None:
        d = gb.twin_prime_constant()
    spectrum = residue_spectrum(x, q, table)
    report = moment_sum(spectrum)

    n_max = int(x) // (2 * q)
    counts = gb.goldbach_count_range(int(x), table)
    targets = 2 * q * np.arange(1, n_max + 1)
    g_sum = int(counts[targets].sum()) if n_max >= 1 else 0

    phi_q = totient(q)
    n_even = targets.astype(np.float64)
    l1_terms = float(q * q / phi_q * np.sum(n_even * d / np.log(n_even) ** 2)) if n_max >= 1 else 0.0
    log_x = math.log(x)
    l1_closed = q * d * x * x / (4.0 * phi_q * log_x ** 2)

    slack_ok: bool | None = None
    if x >= q ** 3:
        slack = CLOSED_FORM_SLACK * x * q * q / (phi_q * log_x ** 2)
        slack_ok = l1_terms >= l1_closed - slack

    return MomentChainReport(
        q=q,
        x=float(x),
        d=d,
        moment=report,
        goldbach_sum=g_sum,
        n_max=n_max,
        l1_term_sum=l1_terms,
        l1_closed_form=l1_closed,
        pair_ge_goldbach=report.pair_count >= g_sum,
        qg_ge_l1=q * g_sum >= l1_terms,
        closed_form_slack_ok=slack_ok,
    )


@dataclass(frozen=True)
class ModelResidualReport:
    q: int
    x: float
    beta: float | None
    max_residual: float
    rms_residual: float
    k_at_max: int
    residual_at_q: float       # |S(q) - Li x| when beta is absent
    dropped_primes: int        # primes dividing q that lie in [3, x]
    c1: float
    error_scale: float         # x * exp(-c1 * sqrt(log x))


def model_residuals(
    q: int,
    x: float,
    table: PrimeTable,
    beta: float | None = None,
    c1: float = 1.0,
) -> ModelResidualReport:
    """Residuals of S(k) against the character model
    (Li x / phi(q)) c_q(k) - (tau(chi) chi(k) / phi(q)) E(x, beta)."""
    _check_chain_modulus(q)
    if x < 2 * q:
        raise DomainError(f"need x >= 2q, got x={x}, q={q}")
    spectrum = residue_spectrum(x, q, table)
    chi = real_character(q)
    phi_q = totient(q)
    li_x = li(x)
    tau = gauss_sum(chi)
    exc = exceptional_integral(x, beta) if beta is not None else 0.0

    residuals = np.empty(q, dtype=np.float64)
    for k in range(1, q + 1):
        s_k = prime_exp_sum(spectrum, k)
        model = li_x / phi_q * ramanujan_sum(q, k)
        if beta is not None:
            model = model - tau * chi(k) / phi_q * exc
        residuals[k - 1] = abs(s_k - model)

    k_at_max = int(np.argmax(residuals)) + 1
    dropped = sum(1 for p in factorize(q) if 3 <= p <= x)
    log_x = math.log(x)
    return ModelResidualReport(
        q=q,
        x=float(x),
        beta=beta,
        max_residual=float(residuals.max()),
        rms_residual=float(np.sqrt(np.mean(residuals ** 2))),
        k_at_max=k_at_max,
        residual_at_q=float(residuals[q - 1]),
        dropped_primes=dropped,
        c1=c1,
        error_scale=x * math.exp(-c1 * math.sqrt(log_x)),
    )


@dataclass(frozen=True)
class SynthesisResult:
    lhs: float          # d/4
    rhs: float          # 1 - x^(2 beta - 2) / beta^2 + error budget
    holds: bool
    x_power: float      # x^(2 beta - 2)
    beta: float
    error_budget: float


def synthesize(
    q: int,
    x: float | None,
    d: float,
    beta: float,
    error_budget: float,
    *,
    log_x: float | None = None,
) -> SynthesisResult:
    """Check d/4 <= 1 - x^(2 beta - 2)/beta^2 + error_budget.

    Pass log_x instead of x when x overflows a float (log x grows like
    log^2 q in the bound regime).
    """
    if not 0.0 < beta <= 1.0:
        raise DomainError(f"beta must lie in (0, 1], got {beta}")
    if not 0.0 < d < 1.0:
        raise DomainError(f"d must lie in (0, 1), got {d}")
    if log_x is None:
        if x is None or x < 2.0:
            raise DomainError("need x >= 2 (or an explicit log_x)")
        log_x = math.log(x)
    elif log_x < math.log(2.0):
        raise DomainError(f"log_x must be >= log 2, got {log_x}")
    x_power = math.exp(2.0 * (beta - 1.0) * log_x)
    lhs = d / 4.0
    rhs = 1.0 - x_power / beta ** 2 + error_budget
    return SynthesisResult(
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs,
        x_power=x_power,
        beta=beta,
        error_budget=error_budget,
    )


@dataclass(frozen=True)
class BetaBoundResult:
    q: int
    c3: float
    d: float
    log_x: float        # (4/c3 * log q)^2
    beta_max: float     # 1 + log(1 - d/8) / (2 log x)
    c: float            # -log(1 - d/8) * c3^2 / 32, so beta_max = 1 - c/log^2 q
    log_q_threshold_ok: bool  # log q >= sqrt(8 c4 / d), reported only


def beta_bound(q: int, c3: float, d: float, c4: float = 1.0) -> BetaBoundResult:
    """Zero bound from the synthesis step at log x = (4/c3 * log q)^2."""
    if q < 3:
        raise DomainError(f"q must be >= 3, got {q}")
    if c3 <= 0.0:
        raise DomainError(f"c3 must be positive, got {c3}")
    if not 0.0 < d < 1.0:
        raise DomainError(f"d must lie in (0, 1), got {d}")
    log_q = math.log(q)
    log_x = (4.0 / c3 * log_q) ** 2
    log_term = math.log(1.0 - d / 8.0)
    beta_max = 1.0 + log_term / (2.0 * log_x)
    c = -log_term * c3 ** 2 / 32.0
    return BetaBoundResult(
        q=q,
        c3=c3,
        d=d,
        log_x=log_x,
        beta_max=beta_max,
        c=c,
        log_q_threshold_ok=log_q >= math.sqrt(8.0 * c4 / d),
    )


@dataclass(frozen=True)
class RoundTripResult:
    bound: BetaBoundResult
    synthesis: SynthesisResult
    gap: float          # |lhs - rhs| after restoring the inversion slack
    holds: bool


def beta_round_trip(q: int, c3: float, d: float, tol: float = 1e-9) -> RoundTripResult:
    """Feed beta_max back into the synthesis inequality.

    beta_max inverts x^(2 beta - 2) <= 1 - d/8, which sits two relaxations
    away from the synthesis display: beta^2 is dropped against 1, and the
    threshold-modulus term c4/log^2 q is replaced by its cap d/8.  Restoring
    both as the error budget makes the two sides agree exactly at beta_max,
    so the round trip checks |lhs - rhs| <= tol (and holds under that
    tolerance).
    """
    bound = beta_bound(q, c3, d)
    bm = bound.beta_max
    budget = d / 8.0 + (1.0 / bm ** 2 - 1.0) * (1.0 - d / 8.0)
    syn = synthesize(q, None, d, bm, budget, log_x=bound.log_x)
    gap = abs(syn.lhs - syn.rhs)
    return RoundTripResult(
        bound=bound,
        synthesis=syn,
        gap=gap,
        holds=gap <= tol and syn.lhs <= syn.rhs + tol,
    )


@dataclass(frozen=True)
class ChainReport:
    q: int
    x: float
    d: float
    sub_regime: bool                 # x < q^4: outside the bound's regime
    first: MomentChainReport
    second: ModelResidualReport
    bound: BetaBoundResult
    whatif: tuple[SynthesisResult, ...]


DEFAULT_BETA_GRID = (0.5, 0.8, 0.9, 0.95, 0.99, 0.999, 1.0)


def full_chain(
    q: int,
    x: float,
    table: PrimeTable,
    beta: float | None = None,
    c1: float = 1.0,
    c3: float = 1.0,
    c4: float = 1.0,
    d: float | None = None,
    beta_grid: tuple[float, ...] = DEFAULT_BETA_GRID,
) -> ChainReport:
    """Run both parts, the what-if synthesis sweep, and the zero bound."""
    if d is None:
        d = gb.twin_prime_constant()
    first = moment_chain(q, x, table, d=d)
    second = model_residuals(q, x, table, beta=beta, c1=c1)
    bound = beta_bound(q, c3, d, c4=c4)
    whatif = tuple(synthesize(q, x, d, b, 0.0) for b in beta_grid)
    return ChainReport(
        q=q,
        x=float(x),
        d=d,
        sub_regime=x < float(q) ** 4,
        first=first,
        second=second,
        bound=bound,
        whatif=whatif,
    )
