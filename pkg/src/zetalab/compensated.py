"""Compensated floating-point arithmetic: Kahan accumulation and double-double helpers.

The double-double routines represent a value as an unevaluated sum ``hi + lo``
of two floats (roughly 32 significant digits).  They exist for the few places
where two nearly equal quantities of magnitude ~1e5 must be compared to far
below one ulp of that magnitude; everything else in the package runs on plain
64-bit floats.
"""

from __future__ import annotations

import math

_SPLITTER = 134217729.0  # 2**27 + 1, Dekker split constant

# hi/lo decompositions of constants needed beyond 53-bit precision
LN2_DD = (0.6931471805599453, 2.3190468138462996e-17)
LOG_2PI_DD = (1.8378770664093456, -7.756588316134483e-17)


class KahanSum:
    """Running compensated sum; more accurate than a bare ``+=`` loop."""

    __slots__ = ("total", "carry")

    def __init__(self, start: float = 0.0):
        self.total = start
        self.carry = 0.0

    def add(self, value: float) -> None:
        y = value - self.carry
        t = self.total + y
        self.carry = (t - self.total) - y
        self.total = t

    @property
    def value(self) -> float:
        return self.total


def two_sum(a: float, b: float):
    """Error-free sum: returns (s, e) with s = fl(a+b) and a+b = s+e exactly."""
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def _quick_two_sum(a: float, b: float):
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def two_prod(a: float, b: float):
    """Error-free product via Dekker splitting: a*b = p + e exactly."""
    p = a * b
    t = _SPLITTER * a
    ah = t - (t - a)
    al = a - ah
    t = _SPLITTER * b
    bh = t - (t - b)
    bl = b - bh
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, e


def dd_add(x, y):
    s1, s2 = two_sum(x[0], y[0])
    t1, t2 = two_sum(x[1], y[1])
    s2 += t1
    s1, s2 = _quick_two_sum(s1, s2)
    s2 += t2
    return _quick_two_sum(s1, s2)


def dd_sub(x, y):
    return dd_add(x, (-y[0], -y[1]))


def dd_mul(x, y):
    p1, p2 = two_prod(x[0], y[0])
    p2 += x[0] * y[1] + x[1] * y[0]
    return _quick_two_sum(p1, p2)


def dd_mul_d(x, c: float):
    p1, p2 = two_prod(x[0], c)
    p2 += x[1] * c
    return _quick_two_sum(p1, p2)


def dd_div(x, y):
    q1 = x[0] / y[0]
    r = dd_sub(x, dd_mul_d(y, q1))
    q2 = r[0] / y[0]
    r = dd_sub(r, dd_mul_d(y, q2))
    q3 = r[0] / y[0]
    s, e = _quick_two_sum(q1, q2)
    return dd_add((s, e), (q3, 0.0))


# reciprocals of odd integers, double-double, for the atanh series in dd_log
_ODD_RECIP = [dd_div((1.0, 0.0), (float(2 * j + 1), 0.0)) for j in range(1, 40)]


def dd_log(m: float):
    """log(m) as a double-double, for positive m.

    Splits m = f * 2**e with f in [sqrt(1/2), sqrt(2)), then evaluates
    2*atanh((f-1)/(f+1)) by series.  Worst-case series argument is ~0.1716,
    so 22 odd terms reach ~1e-33.
    """
    if m <= 0.0 or not math.isfinite(m):
        raise ValueError("dd_log requires a positive finite argument")
    f, e = math.frexp(m)  # f in [0.5, 1)
    if f < 0.7071067811865476:
        f *= 2.0
        e -= 1
    num = (f - 1.0, 0.0)  # exact: f in [0.5, 2), Sterbenz
    den = two_sum(f, 1.0)
    w = dd_div(num, den)
    z = dd_mul(w, w)
    term = w
    acc = w
    for recip in _ODD_RECIP:
        term = dd_mul(term, z)
        contrib = dd_mul(term, recip)
        acc = dd_add(acc, contrib)
        if abs(contrib[0]) < 1e-35 * abs(acc[0]):
            break
    acc = dd_mul_d(acc, 2.0)
    if e:
        acc = dd_add(acc, dd_mul_d(LN2_DD, float(e)))
    return acc
