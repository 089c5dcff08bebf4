"""Chaotic pseudorandom bitstream generator with a built-in randomness battery.

A Rossler attractor integrated with a fixed-step third-order Runge-Kutta
scheme drives a Maiorana bent Boolean function: each integration step yields
one output bit from the decimal digits of the scaled (x, y) coordinates.
Statistical quality is checked natively (byte-level descriptive battery plus
a seven-test bit-level suite with the usual meta-analyses).
"""

from .battery import (
    BatteryReport,
    EntReport,
    TestResult,
    approximate_entropy,
    battery_report,
    block_frequency,
    cumulative_sums,
    ent_battery,
    erfc,
    igamc,
    longest_run_of_ones,
    monobit,
    proportion_interval,
    pvalue_uniformity,
    report_to_json,
    run_nist_battery,
    runs,
    serial,
)
from .bent import (
    BooleanFunction,
    MaioranaSpec,
    WalshSpectrum,
    inverse_walsh,
    is_bent,
    maiorana_eval,
    sign_spectrum,
    table_from_hex,
    table_to_hex,
    truth_table,
    walsh_transform,
)
from .bitgen import (
    DigitConfig,
    GeneratorKey,
    GeneratorState,
    digit_vector,
    keyspace_bits,
    new_generator,
    next_bit,
    next_bits,
    next_bytes,
    postprocess,
)
from .errors import (
    DegenerateInputError,
    DivergenceError,
    DomainError,
    LengthMismatchError,
    NotBooleanValuedError,
    OddVariableCountError,
    TooLargeError,
    TooShortError,
)
from .rossler import (
    DIVERGENCE_BOUND,
    State3,
    StepConfig,
    SystemParams,
    derivative,
    integrate,
    rk3_step,
    trajectory,
    write_trajectory_csv,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
