"""Bitstream generator: chaotic trajectory in, bent-function-filtered bits out.

Pipeline per emitted bit: advance the Rossler state by one RK3 step, scale
x and y by a power of ten and truncate to integers (absolute value after
truncation), read a fixed window of decimal digits from each, map digits to
parity bits, and feed the two halves through the Maiorana bent function --
x-digits as the x-half, y-digits as the y-half.  z drives the dynamics only.

Digit window choice (DigitConfig defaults): twelve least-significant digits
at scale 10^13, i.e. decimal places 10^-2 .. 10^-13 of the coordinate.
Sub-unit places mix fast under the flow (the top kept digit moves ~5 per
step) and are individually near-balanced, and twelve digit pairs dilute the
bent function's inherent output imbalance to 2^-13 ~ 1.2e-4 -- below what
the built-in battery can resolve at supported stream lengths.  A narrower
window such as eight digits at scale 10^7 spans the units place, keeps only
~8 effective pairs, and leaves a measurable output bias (~2e-3, a hard
monobit failure within a few million bits); it stays expressible through the
config for comparison experiments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _fast
from .bent import MaioranaSpec, maiorana_eval
from .errors import DivergenceError
from .rossler import State3, StepConfig, SystemParams, integrate, rk3_step


@dataclass(frozen=True)
class GeneratorKey:
    """Seed point plus burn-in length; the whole tuple is the secret key."""

    x0: float = 0.1
    y0: float = 0.15
    z0: float = 0.01
    l1: int = 2000

    def __post_init__(self):
        if not (math.isfinite(self.x0) and math.isfinite(self.y0) and math.isfinite(self.z0)):
            raise ValueError("key coordinates must be finite")
        if self.l1 < 0:
            raise ValueError(f"burn-in count must be >= 0, got {self.l1}")


@dataclass(frozen=True)
class DigitConfig:
    """How many decimal digits to read per coordinate and at which scale."""

    digits_per_coordinate: int = 12
    scale: int = 10**13

    def __post_init__(self):
        if self.digits_per_coordinate < 1:
            raise ValueError(f"need at least one digit, got {self.digits_per_coordinate}")
        if self.scale < 10:
            raise ValueError(f"scale must be >= 10, got {self.scale}")


@dataclass
class GeneratorState:
    """Mutable stream state; one RK3 step is consumed per emitted bit."""

    current: State3
    params: SystemParams
    step: StepConfig
    digit_config: DigitConfig
    bits_emitted: int = 0
    _mspec: MaioranaSpec = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self._mspec = MaioranaSpec(self.digit_config.digits_per_coordinate)


def new_generator(
    key: GeneratorKey,
    params: SystemParams | None = None,
    cfg: DigitConfig | None = None,
    step: StepConfig | None = None,
) -> GeneratorState:
    """Burn in the trajectory for key.l1 steps and return a ready stream state."""
    params = params if params is not None else SystemParams()
    cfg = cfg if cfg is not None else DigitConfig()
    step = step if step is not None else StepConfig()
    seed = State3(key.x0, key.y0, key.z0, 0.0)
    if _fast.HAVE_NUMBA and key.l1 > 8:
        x, y, z, t, status, idx = _fast.step_loop(
            seed.x, seed.y, seed.z, seed.t, params.a, params.b, params.c, step.h, key.l1
        )
        if status == _fast.DIVERGED:
            raise DivergenceError(
                f"trajectory diverged during burn-in (iteration {idx}); invalid key", step=idx
            )
        current = State3(x, y, z, t)
    else:
        try:
            current = integrate(seed, params, step.h, key.l1)
        except DivergenceError as exc:
            raise DivergenceError(f"{exc.args[0]}; invalid key", step=exc.step) from None
    return GeneratorState(current, params, step, cfg)


def postprocess(v: float, scale: int) -> int:
    """abs(truncate_toward_zero(v * scale)) as a nonnegative integer."""
    if not math.isfinite(v):
        raise ValueError(f"cannot post-process non-finite value {v!r}")
    scaled = v * scale
    if not abs(scaled) < 2.0**63:
        raise OverflowError(f"|{v!r} * {scale}| exceeds the 64-bit integer range")
    return abs(int(scaled))


def digit_vector(s0: int, s1: int, cfg: DigitConfig) -> list[int]:
    """Parity bits of the m least-significant decimal digits of s0 then s1.

    Each half is ordered most-significant digit first and zero-padded on the
    left when the integer has fewer digits than the window.
    """
    m = cfg.digits_per_coordinate
    out = []
    for s in (s0, s1):
        for i in range(m):
            out.append((s // 10 ** (m - 1 - i)) % 10 & 1)
    return out


def next_bit(state: GeneratorState) -> int:
    """Advance one step and emit one bit through the bent function."""
    cfg = state.digit_config
    s = rk3_step(state.current, state.params, state.step.h)
    s0 = postprocess(s.x, cfg.scale)
    s1 = postprocess(s.y, cfg.scale)
    v = digit_vector(s0, s1, cfg)
    m = cfg.digits_per_coordinate
    bit = maiorana_eval(state._mspec, v[:m], v[m:])
    state.current = s
    state.bits_emitted += 1
    return bit


def next_bits(state: GeneratorState, n: int, use_fast: bool | None = None) -> np.ndarray:
    """n bits as a uint8 array; compiled path when available, else scalar loop.

    Both paths are bit-identical (the suite gates on it); ``use_fast`` exists
    so tests can force the scalar reference path.
    """
    if n < 0:
        raise ValueError(f"bit count must be >= 0, got {n}")
    if use_fast is None:
        use_fast = _fast.HAVE_NUMBA
    if not use_fast:
        return np.array([next_bit(state) for _ in range(n)], dtype=np.uint8)
    cfg = state.digit_config
    cur = state.current
    out = np.empty(n, dtype=np.uint8)
    x, y, z, t, status, idx = _fast.bit_loop(
        cur.x,
        cur.y,
        cur.z,
        cur.t,
        state.params.a,
        state.params.b,
        state.params.c,
        state.step.h,
        n,
        cfg.digits_per_coordinate,
        cfg.scale,
        out,
    )
    if status == _fast.DIVERGED:
        raise DivergenceError(
            f"trajectory diverged at bit {state.bits_emitted + idx}", step=idx
        )
    if status == _fast.OVERFLOW:
        raise OverflowError(
            f"scaled coordinate exceeds the 64-bit integer range at bit {state.bits_emitted + idx}"
        )
    state.current = State3(x, y, z, t)
    state.bits_emitted += n
    return out


def next_bytes(state: GeneratorState, n: int) -> bytes:
    """8n bits packed MSB-first into n bytes."""
    if n < 0:
        raise ValueError(f"byte count must be >= 0, got {n}")
    if n == 0:
        return b""
    return np.packbits(next_bits(state, 8 * n)).tobytes()


def keyspace_bits(precision_decimal_digits: int, l1_bits: int) -> float:
    """Key-space size estimate in bits: three seeds at the given decimal
    precision plus the burn-in counter."""
    if precision_decimal_digits < 1:
        raise ValueError(f"precision must be >= 1 digit, got {precision_decimal_digits}")
    if l1_bits < 0:
        raise ValueError(f"l1_bits must be >= 0, got {l1_bits}")
    return 3 * precision_decimal_digits * math.log2(10.0) + l1_bits
