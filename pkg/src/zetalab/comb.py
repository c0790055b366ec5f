"""Step combs on the logarithmic abscissa.

A comb is a finite sum of unit steps sum_n w_n * u(x - log a_n) with the
convention u(0) = 1: a jump located at x0 is already included in the value at
x = x0.  That convention makes the staircase of all integers hit exactly n at
x = log n, so the remainder e**x minus the staircase vanishes on the lattice.

Jump positions are stored both as ordinates a_n and as log a_n.  Queries that
must land exactly on a lattice point go through the ordinate-domain entry
points (``r_value_ordinate``), so nothing depends on float rounding of logs.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

import numpy as np

from .sieve import prime_power_arrays


class CombKind(Enum):
    ZETA1 = "zeta1"  # steps at log n, weight 1: the integer staircase
    JCOMB = "jcomb"  # steps at log p**k, weight 1/k
    PSICOMB = "psicomb"  # steps at log p**k, weight log p
    MCOMB = "mcomb"  # steps at log n, weight log n
    ETA = "eta"  # steps at log n, weight (-1)**(n+1): unit square wave


@dataclass(frozen=True)
class ArithmeticKind:
    """Steps of weight 1 at log(start + m*stride), m >= 0."""

    start: float
    stride: float


Kind = Union[CombKind, ArithmeticKind]


@dataclass(frozen=True)
class StepComb:
    kind: Kind
    values: np.ndarray  # ordinates a_n, strictly ascending
    jumps: np.ndarray  # log a_n
    weights: np.ndarray
    limit: float  # largest ordinate that was materialised against
    cum_weights: np.ndarray
    cum_weight_jumps: np.ndarray  # prefix sums of w_n * log a_n
    # JCOMB only: per-exponent cumulative jump counts, so evaluation can sum
    # count_k / k instead of accumulating many rounded 1/k terms
    k_cum_counts: Optional[np.ndarray] = None  # shape (k_max, n_jumps)

    def __post_init__(self):
        for arr in (self.values, self.jumps, self.weights, self.cum_weights,
                    self.cum_weight_jumps):
            arr.setflags(write=False)
        if self.k_cum_counts is not None:
            self.k_cum_counts.setflags(write=False)

    @property
    def max_x(self) -> float:
        return math.log(self.limit)


def build_comb(kind: Kind, limit: float) -> StepComb:
    """Materialise every jump with ordinate <= limit."""
    if isinstance(kind, ArithmeticKind):
        if kind.start <= 0 or kind.stride <= 0:
            raise ValueError("arithmetic comb needs positive start and stride")
        if limit < kind.start:
            raise ValueError(f"limit {limit} below first jump {kind.start}")
        n_terms = int(math.floor((limit - kind.start) / kind.stride)) + 1
        values = kind.start + kind.stride * np.arange(n_terms, dtype=np.float64)
        weights = np.ones(n_terms)
        k_cum = None
    elif kind in (CombKind.ZETA1, CombKind.MCOMB, CombKind.ETA):
        if limit < 1:
            raise ValueError("limit must be >= 1")
        n = int(math.floor(limit))
        values = np.arange(1, n + 1, dtype=np.float64)
        if kind is CombKind.ZETA1:
            weights = np.ones(n)
        elif kind is CombKind.MCOMB:
            weights = np.log(values)
        else:
            weights = np.where(np.arange(1, n + 1) % 2 == 1, 1.0, -1.0)
        k_cum = None
    elif kind in (CombKind.JCOMB, CombKind.PSICOMB):
        if limit < 1:
            raise ValueError("limit must be >= 1")
        vs, ps, ks = prime_power_arrays(limit)
        values = vs.astype(np.float64)
        if kind is CombKind.PSICOMB:
            weights = np.log(ps.astype(np.float64))
            k_cum = None
        else:
            weights = 1.0 / ks.astype(np.float64)
            k_max = int(ks.max()) if ks.size else 1
            k_cum = np.empty((k_max, ks.size), dtype=np.int64)
            for k in range(1, k_max + 1):
                k_cum[k - 1] = np.cumsum(ks == k)
    else:
        raise ValueError(f"unknown comb kind {kind!r}")

    jumps = np.log(values)
    return StepComb(
        kind=kind,
        values=values,
        jumps=jumps,
        weights=weights,
        limit=float(limit),
        cum_weights=np.cumsum(weights),
        cum_weight_jumps=np.cumsum(weights * jumps),
        k_cum_counts=k_cum,
    )


def _jump_index(c: StepComb, x: float) -> int:
    """Number of jumps with position <= x (u(0) = 1 inclusion)."""
    if x < 0 or x > c.max_x:
        raise ValueError(f"x={x} outside materialised range [0, {c.max_x}]")
    return int(np.searchsorted(c.jumps, x, side="right"))


def eval_comb(c: StepComb, x: float) -> float:
    """Sum of weights over jumps at positions <= x."""
    idx = _jump_index(c, x)
    if idx == 0:
        return 0.0
    if c.k_cum_counts is not None:
        counts = c.k_cum_counts[:, idx - 1]
        return float(sum(int(cnt) / k for k, cnt in enumerate(counts, start=1)))
    return float(c.cum_weights[idx - 1])


def integrate_comb(c: StepComb, x: float) -> float:
    """Exact piecewise-linear integral: sum_n w_n * max(0, x - log a_n)."""
    idx = _jump_index(c, x)
    if idx == 0:
        return 0.0
    return float(x * c.cum_weights[idx - 1] - c.cum_weight_jumps[idx - 1])


def zeta1_count(x: float) -> int:
    """Value of the integer staircase at x: the number of n >= 1 with log n <= x.

    Closed-form evaluation of the ZETA1 comb, consistent with jump positions
    stored as math.log(n).
    """
    if x < 0:
        raise ValueError("x must be >= 0")
    n = int(math.exp(x))
    while n >= 1 and math.log(n) > x:
        n -= 1
    while math.log(n + 1) <= x:
        n += 1
    return n


def r_value(x: float) -> float:
    """Remainder e**x minus the integer staircase; lies in [0, 1)."""
    if x < 0:
        raise ValueError("x must be >= 0")
    r = math.exp(x) - zeta1_count(x)
    # exp(log n) can land half an ulp on either side of the lattice; clamp the
    # round-trip noise so the contract r in [0, 1) holds at jump points
    if r < 0.0:
        return 0.0
    if r >= 1.0:
        return math.nextafter(1.0, 0.0)
    return r


def r_value_ordinate(a: float) -> float:
    """Remainder at x = log a, computed in the ordinate domain: a - floor-count.

    For a = N + c with integer N and 0 <= c < 1 this returns c exactly, with no
    exp/log round trip.
    """
    if a < 1:
        raise ValueError("ordinate must be >= 1")
    n = math.floor(a)
    return a - n


_LOGFACT_LOCK = threading.Lock()
_LOGFACT: np.ndarray = np.zeros(1, dtype=np.longdouble)  # _LOGFACT[n] = log n!


def log_factorial(n: int) -> float:
    """log(n!) from a cached extended-precision cumulative table."""
    global _LOGFACT
    if n < 0:
        raise ValueError("n must be >= 0")
    if n >= _LOGFACT.size:
        with _LOGFACT_LOCK:
            if n >= _LOGFACT.size:
                new_size = max(n + 1, 2 * _LOGFACT.size, 1024)
                fresh = np.zeros(new_size, dtype=np.longdouble)
                fresh[1:] = np.cumsum(np.log(np.arange(1, new_size, dtype=np.longdouble)))
                _LOGFACT = fresh
    return float(_LOGFACT[n])


def r_integral(x: float) -> float:
    """Integral of the remainder from 0 to x, in closed piecewise form.

    With N = staircase value at x: (e**x - 1) - (N*x - log N!).
    """
    if x < 0:
        raise ValueError("x must be >= 0")
    n = zeta1_count(x)
    return (math.exp(x) - 1.0) - (n * x - log_factorial(n))


def r_integral_model(N: int, c: float) -> float:
    """Asymptotic model for (integral of remainder up to log(N+c)) minus r(log(N+c)).

    log(N+c)/2 + log(2*pi)/2 - 1 - c + (1 - 6c + 6c**2) / (12*(N+c)).
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    if not 0.0 <= c < 1.0:
        raise ValueError("c must lie in [0, 1)")
    a = N + c
    return (
        math.log(a) / 2.0
        + math.log(2.0 * math.pi) / 2.0
        - 1.0
        - c
        + (1.0 - 6.0 * c + 6.0 * c * c) / (12.0 * a)
    )
