from __future__ import annotations

import math

import numpy as np
import pytest

from exzero import primes
from exzero.errors import DomainError, OutOfRangeError, ResourceLimitError

from oracles import adaptive_simpson, is_prime_trial, primes_by_trial

# frozen from a 30-digit quadrature oracle
LI_100 = 29.080977803962137
LI_1E6 = 78626.503995682064
EXC_100_09 = 20.875162715466642


def test_sieve_tiny():
    assert primes.sieve(10).primes.tolist() == [2, 3, 5, 7]
    assert primes.sieve(2).primes.tolist() == [2]
    assert primes.sieve(3).primes.tolist() == [2, 3]


def test_sieve_matches_trial_division():
    table = primes.sieve(2000)
    assert table.primes.tolist() == primes_by_trial(2000)


def test_sieve_segment_size_invariance():
    a = primes.sieve(10 ** 5, segment_size=1 << 12)
    b = primes.sieve(10 ** 5, segment_size=1 << 20)
    assert np.array_equal(a.primes, b.primes)


def test_prime_table_invariants(table_1e4):
    ps = table_1e4.primes
    assert np.all(np.diff(ps) > 0)
    assert all(is_prime_trial(int(p)) for p in ps)
    assert len(table_1e4) == 1229  # pi(10^4)


def test_pi_counts(table_1e6):
    assert primes.pi(10, table_1e6) == 4
    assert primes.pi(2, table_1e6) == 1
    assert primes.pi(1000, table_1e6) == 168
    assert primes.pi(10 ** 6, table_1e6) == 78498
    assert primes.pi(1000, table_1e6) == len(primes_by_trial(1000))


def test_sieve_gates():
    with pytest.raises(DomainError):
        primes.sieve(1)
    with pytest.raises(ResourceLimitError):
        primes.sieve(10 ** 6, hard_cap=10 ** 5)


def test_pi_out_of_range(table_1e4):
    with pytest.raises(OutOfRangeError):
        primes.pi(10 ** 4 + 1, table_1e4)
    with pytest.raises(OutOfRangeError):
        primes.pi_progression(10 ** 5, 3, 1, table_1e4)


def test_pi_progression_examples(table_1e4):
    assert primes.pi_progression(100, 3, 1, table_1e4) == 11
    assert primes.pi_progression(100, 1, 0, table_1e4) == 24
    assert primes.pi_progression(10, 5, 0, table_1e4) == 1


@pytest.mark.parametrize("x", [10, 100, 1234, 9999, 10 ** 4])
def test_pi_progression_brute_force(x, table_1e4):
    odd_primes = [p for p in primes_by_trial(x) if p >= 3]
    for q in range(1, 51):
        spectrum = primes.residue_spectrum(x, q, table_1e4)
        expected = np.bincount([p % q for p in odd_primes], minlength=q)
        assert spectrum.counts.tolist() == expected.tolist()
        for a in (0, 1, q - 1, q + 2):
            got = primes.pi_progression(x, q, a, table_1e4)
            assert got == sum(1 for p in odd_primes if p % q == a % q)


def test_residue_spectrum_examples(table_1e4):
    assert primes.residue_spectrum(10, 3, table_1e4).counts.tolist() == [1, 1, 1]
    sp = primes.residue_spectrum(100, 4, table_1e4)
    assert sp.counts[1] == 11 and sp.counts[3] == 13


@pytest.mark.parametrize("q", [3, 4, 101])
@pytest.mark.parametrize("x", [10 ** 3, 10 ** 5])
def test_residue_spectrum_partition(q, x, table_1e5):
    sp = primes.residue_spectrum(x, q, table_1e5)
    assert sp.total == primes.pi_progression(x, 1, 0, table_1e5)


def test_li_values():
    assert primes.li(2) == 0.0
    assert abs(primes.li(100) - LI_100) <= 1e-9
    assert abs(primes.li(10 ** 6) - LI_1E6) <= 1e-6 * LI_1E6
    oracle = adaptive_simpson(lambda u: 1.0 / math.log(u), 2.0, 100.0, 1e-13)
    assert abs(primes.li(100) - oracle) <= 1e-9


def test_li_monotone_and_envelope():
    xs = [10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6]
    vals = [primes.li(x) for x in xs]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    for x, v in zip(xs, vals):
        assert abs(v * math.log(x) / x - 1.0) <= 2.0 / math.log(x)


def test_li_domain():
    with pytest.raises(DomainError):
        primes.li(1.5)


def test_exceptional_integral_reduces_to_li():
    for x in (10, 100, 10 ** 4):
        assert abs(primes.exceptional_integral(x, 1.0) - primes.li(x)) <= 1e-9


def test_exceptional_integral_values():
    assert primes.exceptional_integral(2, 0.5) == 0.0
    got = primes.exceptional_integral(100, 0.9)
    assert abs(got - EXC_100_09) <= 1e-9
    oracle = adaptive_simpson(
        lambda u: u ** (-0.1) / math.log(u), 2.0, 100.0, 1e-13
    )
    assert abs(got - oracle) <= 1e-9


def test_exceptional_integral_monotone_in_beta():
    betas = np.linspace(0.1, 1.0, 10)
    vals = [primes.exceptional_integral(1000, b) for b in betas]
    assert all(b >= a for a, b in zip(vals, vals[1:]))


def test_exceptional_integral_gates():
    with pytest.raises(DomainError):
        primes.exceptional_integral(1.0, 0.5)
    with pytest.raises(DomainError):
        primes.exceptional_integral(100.0, 0.0)
    with pytest.raises(DomainError):
        primes.exceptional_integral(100.0, 1.5)
