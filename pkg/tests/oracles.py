"""Independent straight-line oracles, written before the package itself.

Deliberately primitive: scalar floats, explicit loops, no imports from the
package under test.  The unit and acceptance tests compare the package
against these, so nothing here should ever be "cleaned up" to share code
with the implementation.
"""


def oracle_derivative(x, y, z, a, b, c):
    return (-y - z, x + a * y, b + z * (x - c))


def oracle_rk3(x, y, z, a, b, c, h):
    k1x, k1y, k1z = oracle_derivative(x, y, z, a, b, c)
    x2 = x + 0.5 * h * k1x
    y2 = y + 0.5 * h * k1y
    z2 = z + 0.5 * h * k1z
    k2x, k2y, k2z = oracle_derivative(x2, y2, z2, a, b, c)
    x3 = x + h * (2.0 * k2x - k1x)
    y3 = y + h * (2.0 * k2y - k1y)
    z3 = z + h * (2.0 * k2z - k1z)
    k3x, k3y, k3z = oracle_derivative(x3, y3, z3, a, b, c)
    return (
        x + (h / 6.0) * (k1x + 4.0 * k2x + k3x),
        y + (h / 6.0) * (k1y + 4.0 * k2y + k3y),
        z + (h / 6.0) * (k1z + 4.0 * k2z + k3z),
    )


def oracle_bits(
    x0,
    y0,
    z0,
    burn_in,
    n_bits,
    a=0.2,
    b=0.2,
    c=5.7,
    h=0.01,
    digits=12,
    scale=10**13,
):
    """Straight-line transcription of the whole per-bit pipeline."""
    x, y, z = x0, y0, z0
    for _ in range(burn_in):
        x, y, z = oracle_rk3(x, y, z, a, b, c, h)
    out = []
    for _ in range(n_bits):
        x, y, z = oracle_rk3(x, y, z, a, b, c, h)
        s0 = abs(int(x * scale))
        s1 = abs(int(y * scale))
        xs = [(s0 // 10 ** (digits - 1 - i)) % 10 % 2 for i in range(digits)]
        ys = [(s1 // 10 ** (digits - 1 - i)) % 10 % 2 for i in range(digits)]
        acc = 0
        for xi, yi in zip(xs, ys):
            acc ^= xi & yi
        prod = 1
        for xi in xs:
            prod &= xi
        out.append(acc ^ prod)
    return out, (x, y, z)


def oracle_walsh(table):
    """Naive O(4^n) double sum: W(f)(w) = sum_x f(x) * (-1)^popcount(w & x).

    Pure-Python loops; only practical up to n ~ 6.
    """
    size = len(table)
    out = []
    for w in range(size):
        total = 0
        for x in range(size):
            sign = -1 if bin(w & x).count("1") % 2 else 1
            total += table[x] * sign
        out.append(total)
    return out


def oracle_sign_matrix(n):
    """The full (-1)^popcount(w & x) matrix — the naive transform as a matvec.

    Same O(4^n) definition as oracle_walsh but materialized with numpy so the
    n <= 12 comparison is feasible; still nothing like the butterfly.
    """
    import numpy as np

    idx = np.arange(1 << n, dtype=np.uint32)
    pop = np.bitwise_count(idx[:, None] & idx[None, :])
    return 1 - 2 * (pop & 1).astype(np.int32)


def oracle_pattern_counts(bits, m):
    """Overlapping m-bit pattern counts with wraparound, via dict counting."""
    n = len(bits)
    ext = list(bits) + list(bits[: m - 1])
    counts = {}
    for i in range(n):
        key = tuple(ext[i : i + m])
        counts[key] = counts.get(key, 0) + 1
    return counts
