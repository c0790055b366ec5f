"""Step combs, the staircase remainder, and its integral."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetalab.comb import (
    ArithmeticKind,
    CombKind,
    build_comb,
    eval_comb,
    integrate_comb,
    log_factorial,
    r_integral,
    r_integral_model,
    r_value,
    r_value_ordinate,
    zeta1_count,
)

LOG2 = math.log(2.0)
LOG3 = math.log(3.0)


def test_build_staircase():
    c = build_comb(CombKind.ZETA1, 4)
    assert np.allclose(c.jumps, [0.0, LOG2, LOG3, math.log(4)])
    assert np.all(c.weights == 1.0)
    assert np.all(np.diff(c.jumps) > 0)


def test_build_prime_power_comb():
    c = build_comb(CombKind.JCOMB, 10)
    assert list(c.values) == [2, 3, 4, 5, 7, 8, 9]
    assert np.allclose(c.weights, [1, 1, 0.5, 1, 1, 1 / 3, 0.5])


def test_build_arithmetic_comb():
    c = build_comb(ArithmeticKind(2.0, 2.0), 9)
    assert list(c.values) == [2, 4, 6, 8]
    assert np.all(c.weights == 1.0)
    c = build_comb(ArithmeticKind(1.5, 1.0), 5)
    assert list(c.values) == [1.5, 2.5, 3.5, 4.5]


def test_build_validation():
    with pytest.raises(ValueError):
        build_comb(CombKind.ZETA1, 0.5)
    with pytest.raises(ValueError):
        build_comb(ArithmeticKind(2.0, 2.0), 1.0)


def test_staircase_hits_every_integer_exactly():
    c = build_comb(CombKind.ZETA1, 2000)
    for n in range(1, 2001):
        assert eval_comb(c, math.log(n)) == float(n)
        assert zeta1_count(math.log(n)) == n


def test_eval_examples():
    c = build_comb(CombKind.ZETA1, 10)
    assert eval_comb(c, LOG3) == 3.0
    assert eval_comb(c, 0.5) == 1.0
    p = build_comb(CombKind.PSICOMB, 100)
    assert eval_comb(p, math.log(10)) == pytest.approx(7.832014180505469, abs=1e-12)


def test_eval_out_of_range():
    c = build_comb(CombKind.ZETA1, 10)
    with pytest.raises(ValueError):
        eval_comb(c, math.log(11))
    with pytest.raises(ValueError):
        eval_comb(c, -0.1)


def test_jcomb_eval_uses_per_k_counts():
    c = build_comb(CombKind.JCOMB, 100_000)
    # value at the top is sum over k of count_k / k with integer counts
    v = eval_comb(c, c.max_x)
    counts = [int(arr[-1]) for arr in c.k_cum_counts]
    assert v == sum(cnt / k for k, cnt in enumerate(counts, start=1))


def test_integrate_examples():
    c = build_comb(CombKind.ZETA1, 10)
    assert integrate_comb(c, LOG2) == pytest.approx(LOG2, abs=1e-15)
    assert integrate_comb(c, LOG3) == pytest.approx(2 * LOG3 - LOG2, abs=1e-14)
    e = build_comb(CombKind.ETA, 10)
    assert integrate_comb(e, LOG2) == pytest.approx(LOG2, abs=1e-15)


def test_integrate_monotone_for_nonnegative_combs():
    for kind in (CombKind.ZETA1, CombKind.JCOMB, CombKind.PSICOMB, CombKind.MCOMB):
        c = build_comb(kind, 500)
        xs = np.linspace(0.0, c.max_x, 400)
        vals = [integrate_comb(c, float(x)) for x in xs]
        assert all(b >= a for a, b in zip(vals, vals[1:]))


def test_eta_values_are_zero_or_one():
    e = build_comb(CombKind.ETA, 5000)
    for x in np.linspace(0.0, e.max_x, 2003):
        assert eval_comb(e, float(x)) in (0.0, 1.0)


def test_eval_against_brute_oracle():
    rng = np.random.default_rng(7)
    c = build_comb(CombKind.PSICOMB, 300)
    for x in rng.uniform(0.0, c.max_x, 60):
        brute = sum(w for j, w in zip(c.jumps, c.weights) if j <= x)
        assert eval_comb(c, float(x)) == pytest.approx(brute, rel=1e-12)
        brute_int = sum(w * max(0.0, x - j) for j, w in zip(c.jumps, c.weights))
        assert integrate_comb(c, float(x)) == pytest.approx(brute_int, rel=1e-10, abs=1e-12)


def test_remainder_lattice_values():
    assert r_value(math.log(2.5)) == pytest.approx(0.5, abs=1e-12)
    assert abs(r_value(LOG3)) < 1e-12
    assert r_value(0.5) == pytest.approx(math.exp(0.5) - 1.0, abs=1e-15)
    # ordinate-domain queries are exact, no exp/log round trip
    assert r_value_ordinate(2.5) == 0.5
    assert r_value_ordinate(3.0) == 0.0
    assert r_value_ordinate(10.125) == 0.125


@settings(max_examples=300, deadline=None)
@given(st.floats(min_value=0.0, max_value=math.log(1e6)))
def test_remainder_always_in_unit_interval(x):
    assert 0.0 <= r_value(x) < 1.0


def test_remainder_integral_values():
    assert r_integral(0.0) == 0.0
    assert r_integral(LOG2) == pytest.approx(1.0 - LOG2, abs=1e-15)
    assert r_integral(math.log(10)) == pytest.approx(1.0785616431350585, abs=1e-12)
    # cross-check against the asymptotic model at N=10 (model error ~ 2.8e-6)
    assert r_integral(math.log(10)) == pytest.approx(r_integral_model(10, 0.0), abs=1e-3)


def test_remainder_integral_model_values():
    m = r_integral_model(10, 0.0)
    assert m == pytest.approx(1.0785644130350289, abs=1e-14)
    # the offset quadratic at c = 0.5 equals -0.5
    c = 0.5
    assert 1 - 6 * c + 6 * c * c == -0.5
    m5 = r_integral_model(10, 0.5)
    expected = math.log(10.5) / 2 + math.log(2 * math.pi) / 2 - 1 - 0.5 + (-0.5) / (12 * 10.5)
    assert m5 == pytest.approx(expected, abs=1e-15)
    with pytest.raises(ValueError):
        r_integral_model(1, 0.0)
    with pytest.raises(ValueError):
        r_integral_model(10, 1.0)


@pytest.mark.parametrize("n", [2, 3, 10, 100, 1000, 10_000])
@pytest.mark.parametrize("c", [0.0, 0.125, 0.25, 0.5, 0.75, 0.875])
def test_offset_model_matches_direct_integral(n, c):
    a = n + c
    direct = r_integral(math.log(a)) - r_value_ordinate(a)
    assert abs(direct - r_integral_model(n, c)) < 1.0 / n**2


def test_integral_stays_below_half_x():
    for x in np.geomspace(1e-3, math.log(1e6), 1000):
        assert r_integral(float(x)) < x / 2.0


def test_log_factorial():
    assert log_factorial(0) == 0.0
    assert log_factorial(1) == 0.0
    assert log_factorial(10) == pytest.approx(15.104412573075515, abs=1e-12)
    brute = math.fsum(math.log(m) for m in range(1, 5001))
    assert log_factorial(5000) == pytest.approx(brute, abs=1e-9)
