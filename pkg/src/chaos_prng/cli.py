"""Command-line front end.

Subcommands:

* ``generate``  -- emit a bitstream (raw packed bytes, ascii01, or hex)
* ``test``      -- run the native battery over a byte file, table or JSON out
* ``trajectory``-- dump an integration as CSV `t,x,y,z` (17 significant digits)
* ``keyspace``  -- report the key-space size estimate

Exit codes: 0 success / all selected tests passed; 1 I/O failure; 2 usage
error or divergent (invalid) key; 3 battery failure; 4 input too short or
degenerate for a requested test.

The default key, parameters, and step match the published reference setup
(x0=0.1, y0=0.15, z0=0.01, L1=2000, a=0.2, b=0.2, c=5.7, h=0.01), which is
also available explicitly as ``--profile paper`` (or the CHAOS_PRNG_PROFILE
environment variable) so invocations can pin it by name.  Seed flags are
parsed as decimal text to binary64; the key actually in effect is echoed to
stderr with 17 significant digits.
"""

from __future__ import annotations

import argparse
import enum
import os
import sys
from io import StringIO

import numpy as np

from .battery import battery_report, report_to_json
from .bitgen import DigitConfig, GeneratorKey, keyspace_bits, new_generator, next_bits
from .errors import DegenerateInputError, DivergenceError, TooShortError
from .rossler import State3, StepConfig, SystemParams, trajectory, write_trajectory_csv

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_BATTERY_FAIL = 3
EXIT_BAD_INPUT = 4


class OutputFormat(str, enum.Enum):
    """Bitstream interchange formats.

    raw: MSB-first packed bytes (final byte zero-padded when the bit count is
    not a multiple of 8); ascii01: '0'/'1' characters, no separators;
    hex: lowercase, two characters per byte of the raw packing.
    """

    RAW = "raw"
    ASCII01 = "ascii01"
    HEX = "hex"

PROFILES = {
    "paper": {
        "x0": 0.1,
        "y0": 0.15,
        "z0": 0.01,
        "burn_in": 2000,
        "a": 0.2,
        "b": 0.2,
        "c": 5.7,
        "h": 0.01,
    }
}
DEFAULTS = PROFILES["paper"]


def _add_key_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--x0", type=float, default=None, help="seed x (default 0.1)")
    p.add_argument("--y0", type=float, default=None, help="seed y (default 0.15)")
    p.add_argument("--z0", type=float, default=None, help="seed z (default 0.01)")
    p.add_argument("--burn-in", type=int, default=None, help="discarded steps L1 (default 2000)")
    p.add_argument("--a", type=float, default=None, help="system parameter a (default 0.2)")
    p.add_argument("--b", type=float, default=None, help="system parameter b (default 0.2)")
    p.add_argument("--c", type=float, default=None, help="system parameter c (default 5.7)")
    p.add_argument("--h", type=float, default=None, help="integration step (default 0.01)")
    p.add_argument(
        "--profile",
        choices=sorted(PROFILES),
        default=None,
        help="named preset for key/parameters/step (env: CHAOS_PRNG_PROFILE)",
    )


def _resolve(args: argparse.Namespace, parser: argparse.ArgumentParser) -> dict:
    name = args.profile or os.environ.get("CHAOS_PRNG_PROFILE")
    if name is not None and name not in PROFILES:
        parser.error(f"unknown profile {name!r} (choices: {', '.join(sorted(PROFILES))})")
    values = dict(PROFILES[name]) if name else dict(DEFAULTS)
    for field in values:
        flag = getattr(args, field)
        if flag is not None:
            values[field] = flag
    return values


def _echo_key(values: dict) -> None:
    print(
        "key: x0={x0:.17g} y0={y0:.17g} z0={z0:.17g} burn_in={burn_in}".format(**values),
        file=sys.stderr,
    )


def _cmd_generate(args, parser) -> int:
    v = _resolve(args, parser)
    if args.bits <= 0:
        parser.error(f"--bits must be positive, got {args.bits}")
    _echo_key(v)
    key = GeneratorKey(v["x0"], v["y0"], v["z0"], v["burn_in"])
    params = SystemParams(v["a"], v["b"], v["c"])
    cfg = DigitConfig(args.digits, args.scale)
    try:
        gen = new_generator(key, params, cfg, StepConfig(v["h"]))
        bits = next_bits(gen, args.bits)
    except (DivergenceError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"bits={args.bits}", file=sys.stderr)

    fmt = OutputFormat(args.format)
    if fmt is OutputFormat.RAW:
        payload: bytes | str = np.packbits(bits).tobytes()
    elif fmt is OutputFormat.ASCII01:
        payload = (bits + ord("0")).astype(np.uint8).tobytes().decode("ascii")
    else:
        payload = np.packbits(bits).tobytes().hex()

    try:
        if args.out == "-":
            if isinstance(payload, bytes):
                sys.stdout.buffer.write(payload)
                sys.stdout.buffer.flush()
            else:
                sys.stdout.write(payload)
        else:
            mode = "wb" if isinstance(payload, bytes) else "w"
            with open(args.out, mode) as fh:
                fh.write(payload)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _format_report(report) -> str:
    lines = []
    if report.results:
        width = max(len(r.name) for r in report.results)
        lines.append(f"{'test'.ljust(width)}  {'statistic':>14}  {'p_value':>12}  result")
        for r in report.results:
            lines.append(
                f"{r.name.ljust(width)}  {r.statistic:>14.6g}  {r.p_value:>12.6g}  "
                f"{'pass' if r.passed else 'FAIL'}"
            )
        lines.append(f"uniformity_p_value={report.uniformity_p:.6g}")
        lines.append(
            f"proportion={report.proportion:.4f} "
            f"acceptable=[{report.proportion_bounds[0]:.4f}, {report.proportion_bounds[1]:.4f}]"
        )
    if report.ent is not None:
        e = report.ent
        lines.append(f"entropy_bits_per_byte={e.entropy_bits_per_byte:.6f}")
        lines.append(f"optimum_compression_percent={e.optimum_compression_percent:.0f}")
        lines.append(
            f"chi_square={e.chi_square:.2f} exceed_percent={e.chi_square_exceed_percent:.2f}"
        )
        lines.append(f"arithmetic_mean={e.arithmetic_mean:.4f}")
        lines.append(
            f"monte_carlo_pi={e.monte_carlo_pi:.9f} error_percent={e.pi_error_percent:.2f}"
        )
        lines.append(f"serial_correlation={e.serial_correlation:.6f}")
    return "\n".join(lines)


def _cmd_test(args, parser) -> int:
    if not 0.0001 <= args.alpha <= 0.01:
        parser.error(f"--alpha must lie in [0.0001, 0.01], got {args.alpha}")
    try:
        if args.infile == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(args.infile, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.infile}: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        report = battery_report(data, alpha=args.alpha, battery=args.battery)
    except (TooShortError, DegenerateInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    print(report_to_json(report) if args.json else _format_report(report))
    failed = [r for r in report.results if not r.passed]
    return EXIT_BATTERY_FAIL if failed else EXIT_OK


def _cmd_trajectory(args, parser) -> int:
    v = _resolve(args, parser)
    if args.steps < 1:
        parser.error(f"--steps must be >= 1, got {args.steps}")
    _echo_key(v)
    s0 = State3(v["x0"], v["y0"], v["z0"])
    try:
        records = trajectory(s0, SystemParams(v["a"], v["b"], v["c"]), v["h"], args.steps)
    except DivergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    buf = StringIO()
    write_trajectory_csv(records, buf)
    try:
        if args.out == "-":
            sys.stdout.write(buf.getvalue())
        else:
            with open(args.out, "w") as fh:
                fh.write(buf.getvalue())
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _cmd_keyspace(args, parser) -> int:
    if args.precision < 1:
        parser.error(f"--precision must be >= 1, got {args.precision}")
    if args.l1_bits < 0:
        parser.error(f"--l1-bits must be >= 0, got {args.l1_bits}")
    bits = keyspace_bits(args.precision, args.l1_bits)
    met = "true" if bits >= 126.0 else "false"
    print(f"bits={bits:.6f} threshold_met={met}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chaos-prng", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="emit a pseudorandom bitstream")
    _add_key_params(g)
    g.add_argument("--bits", type=int, required=True, help="number of bits to emit")
    g.add_argument(
        "--digits", type=int, default=DigitConfig().digits_per_coordinate,
        help="decimal digits read per coordinate",
    )
    g.add_argument(
        "--scale", type=int, default=DigitConfig().scale,
        help="scaling factor applied before truncation",
    )
    g.add_argument(
        "--format", choices=[f.value for f in OutputFormat], default=OutputFormat.RAW.value
    )
    g.add_argument("--out", default="-", help="output path, '-' for stdout")
    g.set_defaults(func=_cmd_generate)

    t = sub.add_parser("test", help="run the randomness battery over a byte file")
    t.add_argument("--in", dest="infile", required=True, help="input path, '-' for stdin")
    t.add_argument("--battery", choices=("nist", "ent", "all"), default="all")
    t.add_argument("--alpha", type=float, default=0.01, help="significance level")
    t.add_argument("--json", action="store_true", help="machine-readable report")
    t.set_defaults(func=_cmd_test)

    tr = sub.add_parser("trajectory", help="integrate and dump CSV t,x,y,z")
    _add_key_params(tr)
    tr.add_argument("--steps", type=int, required=True, help="number of RK3 steps")
    tr.add_argument("--out", default="-", help="output path, '-' for stdout")
    tr.set_defaults(func=_cmd_trajectory)

    k = sub.add_parser("keyspace", help="report the key-space size estimate")
    k.add_argument("--precision", type=int, default=15, help="decimal digits per seed")
    k.add_argument("--l1-bits", type=int, default=32, help="bits attributed to the burn-in count")
    k.set_defaults(func=_cmd_keyspace)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
