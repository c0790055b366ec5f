"""Counting functions on the ordinary abscissa."""

import math

import numpy as np
import pytest

from zetalab.arith import (
    higher_power_jumps,
    j_value,
    j_values_int,
    pi_count,
    pi_from_j,
    pi_from_j_residuals,
    pi_table,
    psi_value,
)
from zetalab.sieve import sieve_segment


def test_pi_count_examples():
    assert pi_count(10) == 4
    assert pi_count(100) == 25
    assert pi_count(1.9) == 0
    assert pi_count(2) == 1
    assert pi_count(10**6) == 78498


def test_pi_count_matches_trial_division():
    seg = sieve_segment(0, 5000)
    running = 0
    for n in range(2, 5001):
        running += int(seg.is_prime[n])
        if n % 137 == 0 or n < 50:
            assert pi_count(n) == running


def test_j_value_examples():
    jv = j_value(20)
    assert jv.counts_per_k == [8, 2, 1, 1]
    assert jv.value == pytest.approx(8 + 2 / 2 + 1 / 3 + 1 / 4, abs=1e-14)
    assert j_value(100).value == pytest.approx(25 + 2 + 2 / 3 + 0.5 + 0.2 + 1 / 6, abs=1e-13)
    assert j_value(1).value == 0.0
    assert j_value(0).value == 0.0


def test_j_value_matches_direct_prime_power_sum():
    seg = sieve_segment(0, 10_000)
    direct = 0.0
    values = []
    for n in range(2, 10_001):
        if seg.lam[n] > 0:
            # recover the exponent k from the smallest prime factor
            p = round(math.exp(seg.lam[n]))
            k = round(math.log(n) / math.log(p))
            direct += 1.0 / k
        values.append((n, direct))
    for n, expect in values[:: 97]:
        assert j_value(n).value == pytest.approx(expect, abs=1e-12), n


def test_pi_from_j_examples():
    assert pi_from_j(20) == pytest.approx(8.0, abs=1e-12)
    assert pi_from_j(100) == pytest.approx(25.0, abs=1e-12)
    assert pi_from_j(3) == pytest.approx(2.0, abs=1e-14)
    with pytest.raises(ValueError):
        pi_from_j(1.5)


def test_mobius_roundtrip_vectorised():
    residuals = pi_from_j_residuals(20_000)
    assert float(residuals.max()) < 1e-9


def test_vectorised_j_matches_scalar():
    limit = 70_000
    ptab = pi_table(limit)
    xs = np.array([2, 3, 4, 8, 9, 16, 100, 1024, 6859, 59049, 65536], dtype=np.int64)
    vec = j_values_int(xs, ptab[xs], limit)
    for x, v in zip(xs, vec):
        assert v == pytest.approx(j_value(int(x)).value, abs=1e-12)


def test_psi_value_examples():
    assert psi_value(10) == pytest.approx(7.832014180505469, abs=1e-12)
    assert psi_value(20) == pytest.approx(19.265658314547978, abs=1e-12)
    assert psi_value(100) == pytest.approx(94.045311229357392, abs=1e-12)
    assert psi_value(1) == 0.0


def test_psi_monotone_with_log_p_jumps():
    seg = sieve_segment(0, 400)
    prev = 0.0
    for n in range(2, 401):
        cur = psi_value(n)
        assert cur >= prev
        jump = cur - prev
        assert jump == pytest.approx(seg.lam[n], abs=1e-10)
        prev = cur


def test_psi_sum_identity_small():
    # sum_{k<=x} psi(x/k) telescopes to sum_{m<=x} log m
    for x in (10, 57, 200):
        lhs = math.fsum(psi_value(x / k) for k in range(1, x + 1))
        rhs = math.fsum(math.log(m) for m in range(1, x + 1))
        assert abs(lhs - rhs) < 1e-6 * x
    x = 10
    lhs = math.fsum(psi_value(10 / k) for k in range(1, 11))
    assert lhs == pytest.approx(15.104412573075515, abs=1e-9)


def test_j_minus_pi_gap_is_the_odd_root_tail():
    # even-exponent terms of J(x) - pi(x) cancel exactly against half of
    # J(sqrt x), leaving the odd-root tail; the third-root term dominates it
    from zetalab.sieve import integer_kth_root

    for x in np.geomspace(100, 1e6, 40):
        x = int(x)
        gap = j_value(x).value - pi_count(x)
        half = 0.5 * j_value(math.isqrt(x)).value
        tail = 0.0
        k = 3
        while 2**k <= x:
            r = integer_kth_root(x, k)
            if r >= 2:
                tail += pi_count(r) / k
            k += 2
        assert abs((gap - half) - tail) < 1e-9, x
        envelope = j_value(integer_kth_root(x, 3)).value / 3 + pi_count(integer_kth_root(x, 5)) + 1
        assert abs(gap - half) < envelope, x


def test_higher_power_jump_table():
    vals, wts, cum = higher_power_jumps(100)
    assert list(vals) == [4, 8, 9, 16, 25, 27, 32, 49, 64, 81]
    assert wts[0] == 0.5 and wts[1] == pytest.approx(1 / 3)
    assert cum[-1] == pytest.approx(np.sum(wts))
