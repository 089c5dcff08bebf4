"""Compiled inner loops for bulk generation.

Every kernel here replicates the scalar arithmetic of :mod:`.rossler` and
:mod:`.bitgen` expression-for-expression (same literals, same evaluation
order, no fastmath), so the compiled and interpreted paths are bit-identical;
the test suite gates on that equality.  If numba is unavailable the same
functions run as plain Python, slower but semantically unchanged.

Status codes returned by the loops: 0 = ok, 1 = diverged, 2 = integer
overflow in the digit extraction; the accompanying index is the offending
step (or -1).
"""

from __future__ import annotations

import math

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


OK = 0
DIVERGED = 1
OVERFLOW = 2

_BOUND = 1.0e6
_INT64_LIMIT = 9.223372036854775808e18  # 2^63


@njit(cache=True)
def step_loop(x, y, z, t, a, b, c, h, n):
    """n RK3 steps; returns (x, y, z, t, status, index)."""
    for i in range(n):
        k1x = -y - z
        k1y = x + a * y
        k1z = b + z * (x - c)
        x2 = x + 0.5 * h * k1x
        y2 = y + 0.5 * h * k1y
        z2 = z + 0.5 * h * k1z
        k2x = -y2 - z2
        k2y = x2 + a * y2
        k2z = b + z2 * (x2 - c)
        x3 = x + h * (2.0 * k2x - k1x)
        y3 = y + h * (2.0 * k2y - k1y)
        z3 = z + h * (2.0 * k2z - k1z)
        k3x = -y3 - z3
        k3y = x3 + a * y3
        k3z = b + z3 * (x3 - c)
        x = x + (h / 6.0) * (k1x + 4.0 * k2x + k3x)
        y = y + (h / 6.0) * (k1y + 4.0 * k2y + k3y)
        z = z + (h / 6.0) * (k1z + 4.0 * k2z + k3z)
        t = t + h
        if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(z)):
            return x, y, z, t, DIVERGED, i
        if abs(x) > _BOUND or abs(y) > _BOUND or abs(z) > _BOUND:
            return x, y, z, t, DIVERGED, i
    return x, y, z, t, OK, -1


@njit(cache=True)
def scan_loop(x, y, z, t, a, b, c, h, n):
    """Like step_loop but also tracks max |coordinate| over the run."""
    peak = max(abs(x), abs(y), abs(z))
    for i in range(n):
        k1x = -y - z
        k1y = x + a * y
        k1z = b + z * (x - c)
        x2 = x + 0.5 * h * k1x
        y2 = y + 0.5 * h * k1y
        z2 = z + 0.5 * h * k1z
        k2x = -y2 - z2
        k2y = x2 + a * y2
        k2z = b + z2 * (x2 - c)
        x3 = x + h * (2.0 * k2x - k1x)
        y3 = y + h * (2.0 * k2y - k1y)
        z3 = z + h * (2.0 * k2z - k1z)
        k3x = -y3 - z3
        k3y = x3 + a * y3
        k3z = b + z3 * (x3 - c)
        x = x + (h / 6.0) * (k1x + 4.0 * k2x + k3x)
        y = y + (h / 6.0) * (k1y + 4.0 * k2y + k3y)
        z = z + (h / 6.0) * (k1z + 4.0 * k2z + k3z)
        t = t + h
        if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(z)):
            return x, y, z, t, peak, DIVERGED, i
        if abs(x) > _BOUND or abs(y) > _BOUND or abs(z) > _BOUND:
            return x, y, z, t, peak, DIVERGED, i
        m = max(abs(x), abs(y), abs(z))
        if m > peak:
            peak = m
    return x, y, z, t, peak, OK, -1


@njit(cache=True)
def bit_loop(x, y, z, t, a, b, c, h, n_bits, m, scale, out):
    """One RK3 step per bit; fills ``out`` (uint8) with the generated bits."""
    for i in range(n_bits):
        k1x = -y - z
        k1y = x + a * y
        k1z = b + z * (x - c)
        x2 = x + 0.5 * h * k1x
        y2 = y + 0.5 * h * k1y
        z2 = z + 0.5 * h * k1z
        k2x = -y2 - z2
        k2y = x2 + a * y2
        k2z = b + z2 * (x2 - c)
        x3 = x + h * (2.0 * k2x - k1x)
        y3 = y + h * (2.0 * k2y - k1y)
        z3 = z + h * (2.0 * k2z - k1z)
        k3x = -y3 - z3
        k3y = x3 + a * y3
        k3z = b + z3 * (x3 - c)
        x = x + (h / 6.0) * (k1x + 4.0 * k2x + k3x)
        y = y + (h / 6.0) * (k1y + 4.0 * k2y + k3y)
        z = z + (h / 6.0) * (k1z + 4.0 * k2z + k3z)
        t = t + h
        if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(z)):
            return x, y, z, t, DIVERGED, i
        if abs(x) > _BOUND or abs(y) > _BOUND or abs(z) > _BOUND:
            return x, y, z, t, DIVERGED, i
        if abs(x) * scale >= _INT64_LIMIT or abs(y) * scale >= _INT64_LIMIT:
            return x, y, z, t, OVERFLOW, i
        s0 = abs(int(x * scale))
        s1 = abs(int(y * scale))
        acc = 0
        prod = 1
        t0 = s0
        t1 = s1
        for _ in range(m):
            b0 = (t0 % 10) & 1
            b1 = (t1 % 10) & 1
            t0 //= 10
            t1 //= 10
            acc ^= b0 & b1
            prod &= b0
        out[i] = acc ^ prod
    return x, y, z, t, OK, -1


@njit(cache=True)
def digit_count_loop(x, y, z, t, a, b, c, h, n_vectors, m, scale, counts):
    """Accumulate per-position ones counts of the emitted digit vectors.

    ``counts`` has 2m slots: x-half positions 0..m-1 (most significant digit
    of the kept window first), then the y-half.
    """
    for i in range(n_vectors):
        k1x = -y - z
        k1y = x + a * y
        k1z = b + z * (x - c)
        x2 = x + 0.5 * h * k1x
        y2 = y + 0.5 * h * k1y
        z2 = z + 0.5 * h * k1z
        k2x = -y2 - z2
        k2y = x2 + a * y2
        k2z = b + z2 * (x2 - c)
        x3 = x + h * (2.0 * k2x - k1x)
        y3 = y + h * (2.0 * k2y - k1y)
        z3 = z + h * (2.0 * k2z - k1z)
        k3x = -y3 - z3
        k3y = x3 + a * y3
        k3z = b + z3 * (x3 - c)
        x = x + (h / 6.0) * (k1x + 4.0 * k2x + k3x)
        y = y + (h / 6.0) * (k1y + 4.0 * k2y + k3y)
        z = z + (h / 6.0) * (k1z + 4.0 * k2z + k3z)
        t = t + h
        if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(z)):
            return x, y, z, t, DIVERGED, i
        if abs(x) > _BOUND or abs(y) > _BOUND or abs(z) > _BOUND:
            return x, y, z, t, DIVERGED, i
        if abs(x) * scale >= _INT64_LIMIT or abs(y) * scale >= _INT64_LIMIT:
            return x, y, z, t, OVERFLOW, i
        t0 = abs(int(x * scale))
        t1 = abs(int(y * scale))
        for j in range(m):
            counts[m - 1 - j] += (t0 % 10) & 1
            counts[2 * m - 1 - j] += (t1 % 10) & 1
            t0 //= 10
            t1 //= 10
    return x, y, z, t, OK, -1


def warmup():
    """Force-compile the kernels on a throwaway call (no-op without numba)."""
    out = np.empty(1, dtype=np.uint8)
    counts = np.zeros(2, dtype=np.int64)
    step_loop(0.1, 0.15, 0.01, 0.0, 0.2, 0.2, 5.7, 0.01, 1)
    scan_loop(0.1, 0.15, 0.01, 0.0, 0.2, 0.2, 5.7, 0.01, 1)
    bit_loop(0.1, 0.15, 0.01, 0.0, 0.2, 0.2, 5.7, 0.01, 1, 1, 10, out)
    digit_count_loop(0.1, 0.15, 0.01, 0.0, 0.2, 0.2, 5.7, 0.01, 1, 1, 10, counts)
