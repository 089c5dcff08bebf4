#!/usr/bin/env python3
"""Desk-scale reproduction of the generator's headline statistics.

Two parts:

1. the byte-level descriptive battery over a stream generated from the
   reference key (entropy, chi-square, mean, Monte Carlo pi, lag-1 serial
   correlation);
2. the many-sequence bit-level analysis: generate --sequences streams from
   keys x0 = 0.1 + k*1e-6, run the seven-test battery on each, and report
   per-test pass proportions against the 3-sigma acceptance band plus the
   ten-bin P-value uniformity statistic.

Defaults finish in a few seconds; scale --bytes/--sequences/--seq-bits up for
tighter estimates.
"""

import argparse
import sys
import time

from chaos_prng.battery import (
    ent_battery,
    proportion_interval,
    pvalue_uniformity,
    run_nist_battery,
)
from chaos_prng.bitgen import GeneratorKey, new_generator, next_bits, next_bytes


def ent_section(n_bytes: int) -> None:
    t0 = time.perf_counter()
    gen = new_generator(GeneratorKey())
    rep = ent_battery(next_bytes(gen, n_bytes))
    dt = time.perf_counter() - t0
    print(f"# descriptive battery over {n_bytes} bytes (reference key), {dt:.2f}s")
    print(f"entropy              {rep.entropy_bits_per_byte:.6f} bits/byte")
    print(f"optimum compression  {rep.optimum_compression_percent:.0f}%")
    print(f"chi-square           {rep.chi_square:.2f} (exceed {rep.chi_square_exceed_percent:.2f}%)")
    print(f"arithmetic mean      {rep.arithmetic_mean:.4f} (127.5 = random)")
    print(f"monte carlo pi       {rep.monte_carlo_pi:.9f} (error {rep.pi_error_percent:.3f}%)")
    print(f"serial correlation   {rep.serial_correlation:+.6f}")


def proportions_section(n_seqs: int, seq_bits: int, alpha: float) -> bool:
    t0 = time.perf_counter()
    per_test: dict[str, list[float]] = {}
    for k in range(n_seqs):
        gen = new_generator(GeneratorKey(x0=0.1 + k * 1e-6))
        bits = next_bits(gen, seq_bits)
        for row in run_nist_battery(bits, alpha=alpha):
            per_test.setdefault(row.name, []).append(row.p_value)
    dt = time.perf_counter() - t0
    lo, hi = proportion_interval(alpha, n_seqs)
    print()
    print(
        f"# {n_seqs} sequences x {seq_bits} bits, alpha={alpha}, "
        f"acceptable proportion [{lo:.4f}, {hi:.4f}], {dt:.1f}s"
    )
    width = max(len(name) for name in per_test)
    print(f"{'test'.ljust(width)}  proportion  uniformity_P  verdict")
    all_ok = True
    for name, ps in per_test.items():
        prop = sum(p >= alpha for p in ps) / n_seqs
        _, p_t = pvalue_uniformity(ps)
        ok = prop >= lo and p_t >= 0.0001
        all_ok = all_ok and ok
        print(f"{name.ljust(width)}  {prop:10.2f}  {p_t:12.4f}  {'ok' if ok else 'FAIL'}")
    return all_ok


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bytes", type=int, default=1_000_000, help="byte-battery stream size")
    ap.add_argument("--sequences", type=int, default=100, help="independent keys to test")
    ap.add_argument("--seq-bits", type=int, default=100_000, help="bits per sequence")
    ap.add_argument("--alpha", type=float, default=0.01, help="per-test significance level")
    args = ap.parse_args(argv)

    ent_section(args.bytes)
    ok = proportions_section(args.sequences, args.seq_bits, args.alpha)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
