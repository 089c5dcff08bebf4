"""Rossler system integrated with a fixed-step third-order Runge-Kutta scheme.

The vector field is

    dx/dt = -y - z
    dy/dt = x + a*y
    dz/dt = b + z*(x - c)

with positive parameters (a, b, c); the classic chaotic regime is
(0.2, 0.2, 5.7).  Everything here is plain IEEE-754 double arithmetic with a
fixed evaluation order so that runs are bit-reproducible across platforms.
The stepper is the classical Kutta third-order tableau (stages at 0, h/2, h;
weights 1/6, 2/3, 1/6).   Any change to the arithmetic expressions below is a
breaking change: golden values elsewhere depend on the exact rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Iterable, TextIO

from .errors import DivergenceError

#: Magnitude bound beyond which a trajectory is declared divergent.  The
#: attractor itself stays within |coordinate| < 100, so escape past 1e6 means
#: the seed/parameters are invalid, not that the integrator needs more room.
DIVERGENCE_BOUND = 1.0e6


@dataclass(frozen=True)
class SystemParams:
    """Rossler parameters; all three must be positive."""

    a: float = 0.2
    b: float = 0.2
    c: float = 5.7

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0 and self.c > 0):
            raise ValueError(f"parameters must be positive, got {(self.a, self.b, self.c)}")


@dataclass(frozen=True)
class State3:
    """Phase-space point (x, y, z) plus optional time bookkeeping t."""

    x: float
    y: float
    z: float
    t: float = 0.0

    def is_finite(self) -> bool:
        return math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.z)


@dataclass(frozen=True)
class StepConfig:
    """Integration step size."""

    h: float = 0.01

    def __post_init__(self):
        if not self.h > 0:
            raise ValueError(f"step size must be positive, got {self.h}")


DerivativeFn = Callable[[State3, SystemParams], State3]


def derivative(s: State3, p: SystemParams) -> State3:
    """Right-hand side of the Rossler system at state ``s``."""
    dx = -s.y - s.z
    dy = s.x + p.a * s.y
    dz = p.b + s.z * (s.x - p.c)
    return State3(dx, dy, dz)


def _check(s: State3, step: int | None = None) -> State3:
    if (
        not s.is_finite()
        or abs(s.x) > DIVERGENCE_BOUND
        or abs(s.y) > DIVERGENCE_BOUND
        or abs(s.z) > DIVERGENCE_BOUND
    ):
        where = "" if step is None else f" at step {step}"
        raise DivergenceError(
            f"trajectory diverged{where}: state ({s.x!r}, {s.y!r}, {s.z!r})", step=step
        )
    return s


def rk3_step(s: State3, p: SystemParams, h: float, deriv: DerivativeFn = derivative) -> State3:
    """One explicit third-order step.

    k1 = f(s); k2 = f(s + h/2*k1); k3 = f(s + h*(-k1 + 2*k2));
    s' = s + h/6*(k1 + 4*k2 + k3).

    ``deriv`` is injectable so tests can drive scalar model problems through
    the same tableau; production use is the Rossler field only.
    """
    k1 = deriv(s, p)
    s2 = State3(s.x + 0.5 * h * k1.x, s.y + 0.5 * h * k1.y, s.z + 0.5 * h * k1.z)
    k2 = deriv(s2, p)
    s3 = State3(
        s.x + h * (2.0 * k2.x - k1.x),
        s.y + h * (2.0 * k2.y - k1.y),
        s.z + h * (2.0 * k2.z - k1.z),
    )
    k3 = deriv(s3, p)
    out = State3(
        s.x + (h / 6.0) * (k1.x + 4.0 * k2.x + k3.x),
        s.y + (h / 6.0) * (k1.y + 4.0 * k2.y + k3.y),
        s.z + (h / 6.0) * (k1.z + 4.0 * k2.z + k3.z),
        s.t + h,
    )
    return _check(out)


def integrate(
    s0: State3,
    p: SystemParams,
    h: float,
    n: int,
    deriv: DerivativeFn = derivative,
) -> State3:
    """Apply ``rk3_step`` n times; n=0 returns the input unchanged.

    Divergence is re-raised with the failing iteration index attached.
    """
    if n < 0:
        raise ValueError(f"step count must be >= 0, got {n}")
    s = s0
    for k in range(n):
        try:
            s = rk3_step(s, p, h, deriv)
        except DivergenceError as exc:
            raise DivergenceError(f"{exc.args[0]} (iteration {k})", step=k) from None
    return s


def trajectory(
    s0: State3,
    p: SystemParams,
    h: float,
    n: int,
    deriv: DerivativeFn = derivative,
) -> list[tuple[float, State3]]:
    """n+1 records (k*h, state_k), k = 0..n, including the initial state."""
    if n < 1:
        raise ValueError(f"need at least one step, got {n}")
    records = [(0.0, replace(s0, t=0.0))]
    s = records[0][1]
    for k in range(1, n + 1):
        s = rk3_step(s, p, h, deriv)
        records.append((k * h, s))
    return records


def write_trajectory_csv(records: Iterable[tuple[float, State3]], fh: TextIO) -> None:
    """CSV dump `t,x,y,z`, 17 significant digits (binary64 round-trip exact)."""
    fh.write("t,x,y,z\n")
    for t, s in records:
        fh.write(f"{t:.17g},{s.x:.17g},{s.y:.17g},{s.z:.17g}\n")
