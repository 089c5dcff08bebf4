"""Native randomness battery.

Three layers:

* special functions -- ``erfc`` (stdlib, ~1 ulp) and a native ``igamc``
  (power series below a+1, Lentz continued fraction above; relative error
  well under 1e-10 in the regimes the tests use);
* the byte-level descriptive battery (entropy, chi-square, mean, Monte Carlo
  pi, lag-1 serial correlation) plus a seven-test bit-level suite (monobit,
  block frequency, runs, longest run of ones, cumulative sums both
  directions, serial, approximate entropy);
* the meta-analyses used when many sequences are tested: P-value uniformity
  over ten bins and the pass-proportion confidence interval.

All tests are pure functions over immutable buffers.  Input lengths below a
test's documented minimum raise TooShortError rather than passing silently.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import DegenerateInputError, DomainError, TooShortError

# ---------------------------------------------------------------------------
# special functions


def erfc(x: float) -> float:
    """Complementary error function (delegates to the C library; ~1 ulp)."""
    return math.erfc(x)


_IGAMC_EPS = 1.0e-15
_IGAMC_TINY = 1.0e-300
_IGAMC_MAX_ITER = 2000


def igamc(a: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(a, x)."""
    if not a > 0:
        raise DomainError(f"igamc needs a > 0, got a = {a}")
    if x < 0:
        raise DomainError(f"igamc needs x >= 0, got x = {x}")
    if x == 0.0:
        return 1.0
    # log of the front factor x^a e^-x / Gamma(a)
    lead = a * math.log(x) - x - math.lgamma(a)
    if lead < -745.0:  # front factor underflows binary64
        return 0.0 if x > a else 1.0
    front = math.exp(lead)
    if x < a + 1.0:
        # series for P(a, x); Q = 1 - P
        term = 1.0 / a
        total = term
        k = a
        for _ in range(_IGAMC_MAX_ITER):
            k += 1.0
            term *= x / k
            total += term
            if abs(term) < abs(total) * _IGAMC_EPS:
                break
        return 1.0 - front * total
    # modified Lentz continued fraction for Q(a, x)
    b = x + 1.0 - a
    c = 1.0 / _IGAMC_TINY
    d = 1.0 / b
    frac = d
    for i in range(1, _IGAMC_MAX_ITER):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _IGAMC_TINY:
            d = _IGAMC_TINY
        c = b + an / c
        if abs(c) < _IGAMC_TINY:
            c = _IGAMC_TINY
        d = 1.0 / d
        delta = d * c
        frac *= delta
        if abs(delta - 1.0) < _IGAMC_EPS:
            break
    return front * frac


def _phi(u: float) -> float:
    """Standard normal CDF."""
    return 0.5 * erfc(-u / math.sqrt(2.0))


# ---------------------------------------------------------------------------
# result containers


@dataclass(frozen=True)
class TestResult:
    name: str
    statistic: float
    p_value: float
    passed: bool
    alpha: float


@dataclass(frozen=True)
class EntReport:
    entropy_bits_per_byte: float
    optimum_compression_percent: float
    chi_square: float
    chi_square_exceed_percent: float
    arithmetic_mean: float
    monte_carlo_pi: float
    pi_error_percent: float
    serial_correlation: float


@dataclass(frozen=True)
class BatteryReport:
    results: list[TestResult]
    ent: EntReport | None
    uniformity_p: float | None
    proportion: float | None
    proportion_bounds: tuple[float, float] | None


def _as_bits(bits) -> np.ndarray:
    arr = np.asarray(bits, dtype=np.uint8)
    if arr.ndim != 1:
        raise ValueError("expected a one-dimensional bit sequence")
    if arr.size and arr.max() > 1:
        raise ValueError("bit sequences may contain only 0 and 1")
    return arr


def _result(name, statistic, p_value, alpha) -> TestResult:
    return TestResult(name, float(statistic), float(p_value), bool(p_value >= alpha), alpha)


# ---------------------------------------------------------------------------
# bit-level tests


def monobit(bits, alpha: float = 0.01, min_length: int = 100) -> TestResult:
    """Frequency test: |#ones - #zeros| / sqrt(n) against the half-normal."""
    b = _as_bits(bits)
    n = b.size
    if n < min_length:
        raise TooShortError(f"monobit needs >= {min_length} bits, got {n}", minimum=min_length)
    s_obs = abs(2 * int(b.sum()) - n) / math.sqrt(n)
    p = erfc(s_obs / math.sqrt(2.0))
    return _result("monobit", s_obs, p, alpha)


def block_frequency(bits, block_size: int = 128, alpha: float = 0.01) -> TestResult:
    b = _as_bits(bits)
    n = b.size
    if n < 100:
        raise TooShortError(f"block_frequency needs >= 100 bits, got {n}", minimum=100)
    if block_size < 2:
        raise ValueError(f"block size must be >= 2, got {block_size}")
    n_blocks = n // block_size
    if n_blocks < 1:
        raise TooShortError(
            f"block_frequency needs at least one {block_size}-bit block", minimum=block_size
        )
    pis = b[: n_blocks * block_size].reshape(n_blocks, block_size).mean(axis=1)
    chi2 = 4.0 * block_size * float(((pis - 0.5) ** 2).sum())
    p = igamc(n_blocks / 2.0, chi2 / 2.0)
    return _result("block_frequency", chi2, p, alpha)


def runs(bits, alpha: float = 0.01) -> TestResult:
    b = _as_bits(bits)
    n = b.size
    if n < 100:
        raise TooShortError(f"runs needs >= 100 bits, got {n}", minimum=100)
    pi = float(b.mean())
    v_obs = 1 + int((b[:-1] != b[1:]).sum())
    if abs(pi - 0.5) >= 2.0 / math.sqrt(n):
        # frequency precondition failed; the runs statistic is meaningless
        return _result("runs", float(v_obs), 0.0, alpha)
    p = erfc(abs(v_obs - 2.0 * n * pi * (1 - pi)) / (2.0 * math.sqrt(2.0 * n) * pi * (1 - pi)))
    return _result("runs", float(v_obs), p, alpha)


# Longest-run-of-ones regimes: (min n, block size M, category upper edges,
# category probabilities).  The M=8 probabilities are exact enumerations over
# all 256 blocks (55/256, 94/256, 59/256, 48/256); the larger regimes use the
# standard asymptotic values.
_LONGEST_RUN_REGIMES = (
    (
        750000,
        10000,
        (10, 11, 12, 13, 14, 15),
        (0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727),
    ),
    (6272, 128, (4, 5, 6, 7, 8), (0.1174, 0.2430, 0.2493, 0.1752, 0.1027, 0.1124)),
    (128, 8, (1, 2, 3), (55 / 256, 94 / 256, 59 / 256, 48 / 256)),
)


def _longest_one_run(block: np.ndarray) -> int:
    padded = np.empty(block.size + 2, dtype=np.int8)
    padded[0] = padded[-1] = 0
    padded[1:-1] = block
    d = np.diff(padded)
    starts = np.flatnonzero(d == 1)
    if starts.size == 0:
        return 0
    ends = np.flatnonzero(d == -1)
    return int((ends - starts).max())


def longest_run_of_ones(bits, alpha: float = 0.01) -> TestResult:
    b = _as_bits(bits)
    n = b.size
    regime = next((r for r in _LONGEST_RUN_REGIMES if n >= r[0]), None)
    if regime is None:
        raise TooShortError(f"longest_run_of_ones needs >= 128 bits, got {n}", minimum=128)
    _, block_size, edges, pis = regime
    n_blocks = n // block_size
    blocks = b[: n_blocks * block_size].reshape(n_blocks, block_size)
    counts = np.zeros(len(pis), dtype=np.int64)
    for blk in blocks:
        run = _longest_one_run(blk)
        cat = np.searchsorted(edges, run)
        # searchsorted gives edges.index semantics: run <= edges[0] -> 0, etc.
        counts[min(cat, len(pis) - 1)] += 1
    expected = n_blocks * np.asarray(pis)
    chi2 = float(((counts - expected) ** 2 / expected).sum())
    p = igamc((len(pis) - 1) / 2.0, chi2 / 2.0)
    return _result("longest_run_of_ones", chi2, p, alpha)


def cumulative_sums(
    bits, direction: str = "forward", alpha: float = 0.01, min_length: int = 100
) -> TestResult:
    if direction not in ("forward", "reverse"):
        raise ValueError(f"direction must be 'forward' or 'reverse', got {direction!r}")
    b = _as_bits(bits)
    n = b.size
    if n < min_length:
        raise TooShortError(
            f"cumulative_sums needs >= {min_length} bits, got {n}", minimum=min_length
        )
    steps = 2 * b.astype(np.int64) - 1
    if direction == "reverse":
        steps = steps[::-1]
    z = int(np.abs(np.cumsum(steps)).max())
    sqrt_n = math.sqrt(n)
    total1 = 0.0
    for k in range(math.floor((-n / z + 1) / 4), math.floor((n / z - 1) / 4) + 1):
        total1 += _phi((4 * k + 1) * z / sqrt_n) - _phi((4 * k - 1) * z / sqrt_n)
    total2 = 0.0
    for k in range(math.floor((-n / z - 3) / 4), math.floor((n / z - 1) / 4) + 1):
        total2 += _phi((4 * k + 3) * z / sqrt_n) - _phi((4 * k + 1) * z / sqrt_n)
    p = 1.0 - total1 + total2
    return _result(f"cumulative_sums_{direction}", float(z), p, alpha)


def _pattern_counts(b: np.ndarray, m: int) -> np.ndarray:
    """Counts of all overlapping m-bit patterns, wrapping around the end."""
    n = b.size
    ext = np.concatenate([b, b[: m - 1]]) if m > 1 else b
    idx = np.zeros(n, dtype=np.int64)
    for j in range(m):
        idx = (idx << 1) | ext[j : j + n]
    return np.bincount(idx, minlength=1 << m)


def _psi_sq(b: np.ndarray, m: int) -> float:
    if m == 0:
        return 0.0
    n = b.size
    counts = _pattern_counts(b, m)
    return float((1 << m) / n * (counts.astype(np.float64) ** 2).sum() - n)


def serial(
    bits, m: int = 8, alpha: float = 0.01, min_length: int | None = None
) -> tuple[TestResult, TestResult]:
    """Overlapping m-bit pattern test; two P-values per the standard recipe.

    ``min_length`` overrides the default floor max(100, 2^(m+2)) — useful only
    for checking textbook worked examples on tiny sequences.
    """
    if m < 2:
        raise ValueError(f"serial needs m >= 2, got {m}")
    b = _as_bits(bits)
    n = b.size
    min_n = max(100, 1 << (m + 2)) if min_length is None else min_length
    if n < min_n:
        raise TooShortError(f"serial with m={m} needs >= {min_n} bits, got {n}", minimum=min_n)
    psi_m = _psi_sq(b, m)
    psi_m1 = _psi_sq(b, m - 1)
    psi_m2 = _psi_sq(b, m - 2)
    # both deltas are >= 0 in exact arithmetic; clamp float cancellation noise
    d1 = max(psi_m - psi_m1, 0.0)
    d2 = max(psi_m - 2.0 * psi_m1 + psi_m2, 0.0)
    p1 = igamc(2 ** (m - 2), d1 / 2.0)
    p2 = igamc(2 ** (m - 3), d2 / 2.0)
    return (
        _result("serial_1", d1, p1, alpha),
        _result("serial_2", d2, p2, alpha),
    )


def approximate_entropy(
    bits, m: int = 8, alpha: float = 0.01, min_length: int | None = None
) -> TestResult:
    if m < 1:
        raise ValueError(f"approximate_entropy needs m >= 1, got {m}")
    b = _as_bits(bits)
    n = b.size
    min_n = max(100, 1 << (m + 5)) if min_length is None else min_length
    if n < min_n:
        raise TooShortError(
            f"approximate_entropy with m={m} needs >= {min_n} bits, got {n}", minimum=min_n
        )

    def phi(mm: int) -> float:
        counts = _pattern_counts(b, mm)
        nz = counts[counts > 0].astype(np.float64)
        freqs = nz / n
        return float((freqs * np.log(freqs)).sum())

    apen = phi(m) - phi(m + 1)
    # apen <= ln 2 in exact arithmetic; clamp float cancellation noise
    chi2 = max(2.0 * n * (math.log(2.0) - apen), 0.0)
    p = igamc(2 ** (m - 1), chi2 / 2.0)
    return _result("approximate_entropy", chi2, p, alpha)


def run_nist_battery(
    bits,
    alpha: float = 0.01,
    block_size: int = 128,
    serial_m: int = 8,
    apen_m: int = 8,
) -> list[TestResult]:
    """All seven tests on one bit sequence (nine result rows; serial yields two)."""
    b = _as_bits(bits)
    rows = [
        monobit(b, alpha),
        block_frequency(b, block_size, alpha),
        runs(b, alpha),
        longest_run_of_ones(b, alpha),
        cumulative_sums(b, "forward", alpha),
        cumulative_sums(b, "reverse", alpha),
    ]
    rows.extend(serial(b, serial_m, alpha))
    rows.append(approximate_entropy(b, apen_m, alpha))
    return rows


# ---------------------------------------------------------------------------
# meta-analyses


def pvalue_uniformity(p_values) -> tuple[float, float]:
    """Ten-bin chi-square of P-values; returns (chi_square, P-value_T).

    Bin i covers [i/10, (i+1)/10), with the last bin closed at 1.0.
    """
    ps = np.asarray(list(p_values), dtype=np.float64)
    s = ps.size
    if s == 0:
        raise ValueError("need at least one P-value")
    if ps.min() < 0.0 or ps.max() > 1.0:
        raise ValueError("P-values must lie in [0, 1]")
    bins = np.minimum((ps * 10).astype(np.int64), 9)
    counts = np.bincount(bins, minlength=10)
    expected = s / 10.0
    chi2 = float(((counts - expected) ** 2 / expected).sum())
    return chi2, igamc(4.5, chi2 / 2.0)


def proportion_interval(alpha: float, m: int) -> tuple[float, float]:
    """Acceptable pass-proportion band: (1-alpha) +/- 3 sqrt(alpha(1-alpha)/m)."""
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must be in (0, 1), got {alpha}")
    if m < 1:
        raise DomainError(f"sample count must be >= 1, got {m}")
    p_hat = 1.0 - alpha
    half = 3.0 * math.sqrt(p_hat * (1.0 - p_hat) / m)
    return p_hat - half, p_hat + half


# ---------------------------------------------------------------------------
# byte-level battery


def ent_battery(data) -> EntReport:
    """Descriptive battery over a byte buffer (entropy, chi-square, mean,
    Monte Carlo pi from 6-byte groups, lag-1 serial correlation)."""
    buf = np.frombuffer(bytes(data), dtype=np.uint8) if isinstance(
        data, (bytes, bytearray)
    ) else np.asarray(data, dtype=np.uint8)
    n = buf.size
    if n < 6:
        raise TooShortError(f"ent_battery needs >= 6 bytes, got {n}", minimum=6)

    counts = np.bincount(buf, minlength=256).astype(np.float64)
    probs = counts[counts > 0] / n
    entropy = float(-(probs * np.log2(probs)).sum())
    compression = float(math.floor((8.0 - entropy) / 8.0 * 100.0))

    expected = n / 256.0
    chi2 = float(((counts - expected) ** 2 / expected).sum())
    exceed = igamc(255 / 2.0, chi2 / 2.0) * 100.0

    mean = float(buf.mean())

    groups = n // 6
    six = buf[: groups * 6].reshape(groups, 6).astype(np.int64)
    denom = float(2**24 - 1)
    xs = (six[:, 0] * 65536 + six[:, 1] * 256 + six[:, 2]) / denom
    ys = (six[:, 3] * 65536 + six[:, 4] * 256 + six[:, 5]) / denom
    inside = int((xs * xs + ys * ys <= 1.0).sum())
    mc_pi = 4.0 * inside / groups
    pi_err = abs(mc_pi - math.pi) / math.pi * 100.0

    dev = buf.astype(np.float64) - mean
    denom_scc = float((dev * dev).sum())
    if denom_scc == 0.0:
        raise DegenerateInputError("serial correlation is undefined for a constant byte stream")
    scc = float((dev[:-1] * dev[1:]).sum() / denom_scc)

    return EntReport(entropy, compression, chi2, exceed, mean, mc_pi, pi_err, scc)


# ---------------------------------------------------------------------------
# assembled report


def battery_report(data, alpha: float = 0.01, battery: str = "all") -> BatteryReport:
    """Run the selected batteries over a byte buffer.

    The meta fields describe this single stream: ``proportion`` is the
    fraction of test rows that passed and ``uniformity_p`` the ten-bin
    uniformity of the rows' P-values (a coarse diagnostic for so few values;
    the per-test, many-sequence analysis lives in scripts/reproduce_tables.py).
    """
    if battery not in ("nist", "ent", "all"):
        raise ValueError(f"unknown battery {battery!r}")
    buf = np.frombuffer(bytes(data), dtype=np.uint8) if isinstance(
        data, (bytes, bytearray)
    ) else np.asarray(data, dtype=np.uint8)

    results: list[TestResult] = []
    ent: EntReport | None = None
    if battery in ("nist", "all"):
        results = run_nist_battery(np.unpackbits(buf), alpha)
    if battery in ("ent", "all"):
        ent = ent_battery(buf)

    if results:
        _, uniformity_p = pvalue_uniformity([r.p_value for r in results])
        proportion = sum(r.passed for r in results) / len(results)
        bounds = proportion_interval(alpha, len(results))
    else:
        uniformity_p = proportion = bounds = None
    return BatteryReport(results, ent, uniformity_p, proportion, bounds)


def report_to_json(report: BatteryReport) -> str:
    """Stable-field JSON rendering for CI consumption."""
    doc = {
        "tests": [
            {
                "name": r.name,
                "statistic": r.statistic,
                "p_value": r.p_value,
                "passed": r.passed,
            }
            for r in report.results
        ],
        "ent": asdict(report.ent) if report.ent is not None else None,
        "uniformity_p_value": report.uniformity_p,
        "proportion": report.proportion,
        "proportion_lo": report.proportion_bounds[0] if report.proportion_bounds else None,
        "proportion_hi": report.proportion_bounds[1] if report.proportion_bounds else None,
    }
    return json.dumps(doc, indent=2)
