"""Acceptance gate: every shipping criterion, each at its stated tolerance
and wall-clock budget, one printed PASS/FAIL line per criterion.
"""

import math
import time

import numpy as np

from chaos_prng.battery import (
    ent_battery,
    proportion_interval,
    pvalue_uniformity,
    run_nist_battery,
)
from chaos_prng.bent import (
    BooleanFunction,
    MaioranaSpec,
    inverse_walsh,
    is_bent,
    truth_table,
    walsh_transform,
)
from chaos_prng.bitgen import (
    DigitConfig,
    GeneratorKey,
    keyspace_bits,
    new_generator,
    next_bits,
    next_bytes,
)
from chaos_prng.rossler import State3, SystemParams, integrate, trajectory

from oracles import oracle_bits, oracle_sign_matrix

KEY = GeneratorKey()


def _line(criterion, ok, detail):
    print(f"ACCEPTANCE {'PASS' if ok else 'FAIL'} criterion={criterion} {detail}")
    return ok


def test_criterion_1_bentness():
    t0 = time.perf_counter()
    verdicts = []
    for m in range(1, 9):
        f = truth_table(MaioranaSpec(m))
        verdicts.append(is_bent(f))
    elapsed = time.perf_counter() - t0
    ok = all(verdicts) and elapsed < 1.0
    assert _line(1, ok, f"bent_m1..m8={verdicts} elapsed={elapsed:.3f}s (budget 1s)")


def test_criterion_2_rk3_order():
    t0 = time.perf_counter()
    f = lambda s, p: State3(s.x, 0.0, 0.0)
    p = SystemParams()

    def err(n):
        s = integrate(State3(1.0, 0.0, 0.0), p, 1.0 / n, n, deriv=f)
        return abs(s.x - math.e)

    ratio = err(64) / err(128)
    elapsed = time.perf_counter() - t0
    ok = 6.0 <= ratio <= 10.0 and elapsed < 1.0
    assert _line(2, ok, f"error_ratio={ratio:.4f} (need [6, 10]) elapsed={elapsed:.3f}s")


def test_criterion_3a_ent_reproduction():
    t0 = time.perf_counter()
    gen = new_generator(KEY)
    data = next_bytes(gen, 1_000_000)
    rep = ent_battery(data)
    elapsed = time.perf_counter() - t0
    checks = {
        "entropy": rep.entropy_bits_per_byte >= 7.99,
        "mean": abs(rep.arithmetic_mean - 127.5) <= 1.0,
        "pi_error": rep.pi_error_percent <= 1.0,
        "scc": abs(rep.serial_correlation) <= 0.01,
        "chi2_exceed": 0.1 <= rep.chi_square_exceed_percent <= 99.9,
    }
    ok = all(checks.values()) and elapsed < 30.0
    assert _line(
        "3a",
        ok,
        f"entropy={rep.entropy_bits_per_byte:.6f} mean={rep.arithmetic_mean:.4f} "
        f"pi_err={rep.pi_error_percent:.3f}% scc={rep.serial_correlation:+.6f} "
        f"chi2_exceed={rep.chi_square_exceed_percent:.2f}% checks={checks} "
        f"elapsed={elapsed:.1f}s (budget 30s)",
    )


def test_criterion_3b_nist_proportions():
    t0 = time.perf_counter()
    n_seqs, seq_bits, alpha = 100, 100_000, 0.01
    per_test: dict[str, list[float]] = {}
    for k in range(n_seqs):
        gen = new_generator(GeneratorKey(x0=0.1 + k * 1e-6))
        bits = next_bits(gen, seq_bits)
        for row in run_nist_battery(bits, alpha=alpha):
            per_test.setdefault(row.name, []).append(row.p_value)
    lo, _ = proportion_interval(alpha, n_seqs)
    summary = {}
    ok = True
    for name, ps in per_test.items():
        proportion = sum(p >= alpha for p in ps) / n_seqs
        _, p_t = pvalue_uniformity(ps)
        summary[name] = (proportion, round(p_t, 4))
        ok = ok and proportion >= lo and p_t >= 0.0001
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 120.0
    detail = " ".join(f"{n}={prop:.2f}/{pt}" for n, (prop, pt) in summary.items())
    assert _line(
        "3b", ok, f"lo={lo:.4f} (proportion/uniformity_P) {detail} elapsed={elapsed:.1f}s"
    )


def test_criterion_4_keyspace():
    bits = keyspace_bits(15, 32)
    ok = bits >= 126.0
    assert _line(4, ok, f"keyspace_bits(15,32)={bits:.4f} (need >= 126)")


def test_criterion_5_sensitivity():
    t0 = time.perf_counter()
    base = next_bits(new_generator(KEY), 100_000)
    moved = next_bits(new_generator(GeneratorKey(x0=KEY.x0 + 1e-7)), 100_000)
    hamming = float(np.mean(base != moved))

    p = SystemParams()
    recs_a = trajectory(State3(1.0, 0.15, 0.01), p, 0.01, 10_000)
    recs_b = trajectory(State3(1.001, 0.15, 0.01), p, 0.01, 10_000)
    max_dx = max(abs(sa.x - sb.x) for (_, sa), (_, sb) in zip(recs_a, recs_b))
    elapsed = time.perf_counter() - t0
    ok = 0.48 <= hamming <= 0.52 and max_dx > 1.0 and elapsed < 10.0
    assert _line(
        5,
        ok,
        f"hamming={hamming:.5f} (need [0.48, 0.52]) max_dx={max_dx:.3f} "
        f"(need > 1.0) elapsed={elapsed:.1f}s",
    )


def test_criterion_6_oracle_equivalence():
    t0 = time.perf_counter()
    rng = np.random.default_rng(2024)
    cases = 0
    for n in range(1, 13):
        mat = oracle_sign_matrix(n)
        per_n = 9 if n < 12 else 1  # 9*11 + 1 = 100 cases
        for _ in range(per_n):
            table = rng.integers(0, 2, size=1 << n, dtype=np.uint8)
            f = BooleanFunction(n, table)
            spec = walsh_transform(f)
            assert np.array_equal(spec.coefficients, mat @ table.astype(np.int32))
            assert inverse_walsh(spec) == f
            cases += 1
    cfg = DigitConfig()
    oracle_prefix, _ = oracle_bits(
        KEY.x0, KEY.y0, KEY.z0, KEY.l1, 64,
        digits=cfg.digits_per_coordinate, scale=cfg.scale,
    )
    generated = list(next_bits(new_generator(KEY), 64))
    elapsed = time.perf_counter() - t0
    ok = cases == 100 and generated == oracle_prefix and elapsed < 10.0
    assert _line(
        6,
        ok,
        f"walsh_cases={cases} golden_prefix_match={generated == oracle_prefix} "
        f"elapsed={elapsed:.1f}s",
    )


def test_criterion_7_determinism():
    t0 = time.perf_counter()
    a = next_bytes(new_generator(KEY), 1_000_000)
    b = next_bytes(new_generator(KEY), 1_000_000)
    elapsed = time.perf_counter() - t0
    ok = a == b and len(a) == 1_000_000 and elapsed < 10.0
    assert _line(7, ok, f"identical={a == b} bytes={len(a)} elapsed={elapsed:.1f}s")
