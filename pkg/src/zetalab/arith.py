"""Exact arithmetic counting functions on the ordinary abscissa.

pi_count and psi_value stream over sieve segments, so memory stays bounded.
The weighted prime-power count j_value is assembled from per-exponent prime
counts at exact integer k-th roots; float powers are never used to decide
whether a lattice point is a perfect power.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List

import numpy as np

from .compensated import KahanSum
from .sieve import (
    SIEVE_CEILING,
    base_primes,
    int_kth_root_array,
    integer_kth_root,
    iter_segments,
    mobius,
)


def pi_count(x: float, *, ceiling: int = SIEVE_CEILING) -> int:
    """Number of primes <= floor(x)."""
    if x < 2:
        return 0
    n = int(math.floor(x))
    total = 0
    for seg in iter_segments(0, n, ceiling=ceiling):
        total += int(np.count_nonzero(seg.is_prime))
    return total


@lru_cache(maxsize=4)
def pi_table(limit: int) -> np.ndarray:
    """Cumulative prime-count table: pi_table(limit)[m] = pi(m) for 0 <= m <= limit."""
    out = np.zeros(limit + 1, dtype=np.int64)
    for seg in iter_segments(0, limit):
        out[seg.lo : seg.hi + 1] = np.cumsum(seg.is_prime)
        if seg.lo > 0:
            out[seg.lo : seg.hi + 1] += out[seg.lo - 1]
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class JValue:
    """Weighted prime-power count sum_{p**k <= x} 1/k, with its per-k breakdown."""

    x: float
    counts_per_k: List[int]  # counts_per_k[k-1] = pi(floor(x)**(1/k)), exact roots
    value: float


def j_value(x: float, *, ceiling: int = SIEVE_CEILING) -> JValue:
    """J at x from per-exponent prime counts at exact integer roots."""
    if x < 0:
        raise ValueError("x must be >= 0")
    n = int(math.floor(x))
    if n < 2:
        return JValue(x=x, counts_per_k=[], value=0.0)
    counts: List[int] = []
    ptab = pi_table(max(math.isqrt(n), 3))
    k = 1
    while (1 << k) <= n or k == 1:
        r = integer_kth_root(n, k)
        if r < 2:
            break
        counts.append(int(pi_count(r, ceiling=ceiling)) if k == 1 else int(ptab[r]))
        k += 1
    value = math.fsum(c / kk for kk, c in enumerate(counts, start=1))
    return JValue(x=x, counts_per_k=counts, value=value)


def pi_from_j(x: float, *, ceiling: int = SIEVE_CEILING) -> float:
    """Recover pi(x) from J by Mobius inversion: sum_n mu(n)/n * J(x**(1/n))."""
    if x < 2:
        raise ValueError("x must be >= 2")
    n = int(math.floor(x))
    total = KahanSum()
    m = 1
    while True:
        r = integer_kth_root(n, m)
        if r < 2:
            break
        mu = mobius(m)
        if mu:
            total.add(mu / m * j_value(float(r), ceiling=ceiling).value)
        m += 1
    return total.value


def psi_value(x: float, *, ceiling: int = SIEVE_CEILING) -> float:
    """Chebyshev psi: sum of Lambda(n) for n <= floor(x), streamed with compensation."""
    if x < 2:
        return 0.0
    n = int(math.floor(x))
    acc = KahanSum()
    for seg in iter_segments(0, n, want_lam=True, ceiling=ceiling):
        acc.add(math.fsum(seg.lam))
    return acc.value


@lru_cache(maxsize=4)
def higher_power_jumps(limit: int):
    """Jump table of J's k >= 2 components: (values, weights 1/k, cumulative weights).

    J(x) = pi(x) + H(x) where H steps by 1/k at every p**k <= x with k >= 2.
    Only primes up to sqrt(limit) can contribute, so the table stays tiny even
    for limits in the billions.
    """
    vals = []
    wts = []
    for p in base_primes(math.isqrt(limit) if limit >= 4 else 2):
        p = int(p)
        v, k = p * p, 2
        while v <= limit:
            vals.append(v)
            wts.append(1.0 / k)
            if v > limit // p:
                break
            v *= p
            k += 1
    values = np.array(vals, dtype=np.int64)
    weights = np.array(wts, dtype=np.float64)
    order = np.argsort(values, kind="stable")
    values, weights = values[order], weights[order]
    cum = np.cumsum(weights)
    for arr in (values, weights, cum):
        arr.setflags(write=False)
    return values, weights, cum


def j_higher_terms(xs: np.ndarray, limit: int) -> np.ndarray:
    """H(x) = J(x) - pi(x) for an integer array xs with max <= limit."""
    values, _w, cum = higher_power_jumps(limit)
    idx = np.searchsorted(values, xs, side="right")
    out = np.zeros(len(xs), dtype=np.float64)
    nz = idx > 0
    out[nz] = cum[idx[nz] - 1]
    return out


def j_values_int(xs: np.ndarray, pi_vals: np.ndarray, limit: int) -> np.ndarray:
    """Vectorised J over integer abscissae, given matching pi values."""
    return pi_vals.astype(np.float64) + j_higher_terms(xs, limit)


def pi_from_j_residuals(limit: int) -> np.ndarray:
    """|pi_from_j(x) - pi(x)| for every integer x in [2, limit], vectorised.

    Mirrors pi_from_j term by term: roots by exact integer arithmetic, J from
    per-k prime counts, Mobius weights in float.
    """
    xs = np.arange(2, limit + 1, dtype=np.int64)
    ptab = pi_table(limit)
    recovered = np.zeros(xs.size, dtype=np.float64)
    m = 1
    while (1 << m) <= limit:
        mu = mobius(m)
        if mu:
            roots = int_kth_root_array(xs, m)
            jv = np.zeros(xs.size, dtype=np.float64)
            k = 1
            while True:
                rk = int_kth_root_array(roots, k)
                live = rk >= 2
                if not live.any():
                    break
                jv[live] += ptab[rk[live]] / k
                k += 1
            recovered += (mu / m) * jv
        m += 1
    return np.abs(recovered - ptab[xs])
