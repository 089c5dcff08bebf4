"""Boolean functions as truth tables: Walsh spectra, bentness, Maiorana family.

Truth tables are indexed lexicographically with the *first* variable as the
most significant bit of the row index.  Spectra are exact integers throughout
(coefficients are bounded by 2^n <= 2^24), because bentness is an exact
+/-2^(n/2) test and floating point would blur it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import (
    LengthMismatchError,
    NotBooleanValuedError,
    OddVariableCountError,
    TooLargeError,
)

#: Largest variable count for which tables/spectra are materialized (16M rows).
MAX_VARIABLES = 24


@dataclass(frozen=True)
class BooleanFunction:
    """Truth table of an n-variable Boolean function.

    ``table[k]`` is the value at the input whose bits, first variable to
    last, spell k in binary (first variable = MSB).
    """

    n: int
    table: np.ndarray

    def __post_init__(self):
        tab = np.asarray(self.table, dtype=np.uint8)
        if tab.shape != (1 << self.n,):
            raise ValueError(f"table must have 2^{self.n} entries, got shape {tab.shape}")
        if not np.all(tab <= 1):
            raise ValueError("table entries must be bits")
        object.__setattr__(self, "table", tab)

    def __eq__(self, other):
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.table, other.table)


@dataclass(frozen=True)
class WalshSpectrum:
    """Integer Walsh coefficients, indexed by the mask w (same bit order)."""

    n: int
    coefficients: np.ndarray

    def __post_init__(self):
        coef = np.asarray(self.coefficients, dtype=np.int64)
        if coef.shape != (1 << self.n,):
            raise ValueError(f"spectrum must have 2^{self.n} entries, got shape {coef.shape}")
        object.__setattr__(self, "coefficients", coef)


def _product_term(xs: Sequence[int]) -> int:
    out = 1
    for b in xs:
        out &= int(b)
    return out


@dataclass(frozen=True)
class MaioranaSpec:
    """Maiorana-family function on 2m variables (x_0..x_{m-1}, y_0..y_{m-1}).

    The mixing term ``r_term`` applied to the x-half defaults to the full
    product x_0*x_1*...*x_{m-1}; other choices stay in the bent family but are
    exposed only for experimentation.
    """

    m: int
    r_term: Callable[[Sequence[int]], int] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")


def maiorana_eval(spec: MaioranaSpec, xs: Sequence[int], ys: Sequence[int]) -> int:
    """(x_0 y_0 ^ ... ^ x_{m-1} y_{m-1}) ^ R(x_0..x_{m-1}); R defaults to the product."""
    if len(xs) != spec.m or len(ys) != spec.m:
        raise LengthMismatchError(
            f"expected two length-{spec.m} halves, got {len(xs)} and {len(ys)}"
        )
    acc = 0
    for xb, yb in zip(xs, ys):
        acc ^= int(xb) & int(yb)
    r = spec.r_term if spec.r_term is not None else _product_term
    return acc ^ (int(r(xs)) & 1)


def truth_table(spec: MaioranaSpec) -> BooleanFunction:
    """Materialize the full table, variable order (x_0..x_{m-1}, y_0..y_{m-1})."""
    n = 2 * spec.m
    if n > MAX_VARIABLES:
        raise TooLargeError(f"2m = {n} exceeds the {MAX_VARIABLES}-variable bound")
    idx = np.arange(1 << n, dtype=np.uint32)
    xs_int = idx >> spec.m
    ys_int = idx & ((1 << spec.m) - 1)
    if spec.r_term is None:
        inner = (np.bitwise_count(xs_int & ys_int) & 1).astype(np.uint8)
        prod = (xs_int == (1 << spec.m) - 1).astype(np.uint8)
        return BooleanFunction(n, inner ^ prod)
    # custom mixing term: fall back to scalar evaluation
    table = np.empty(1 << n, dtype=np.uint8)
    for k in idx:
        xs = [(int(k) >> (n - 1 - i)) & 1 for i in range(spec.m)]
        ys = [(int(k) >> (spec.m - 1 - i)) & 1 for i in range(spec.m)]
        table[k] = maiorana_eval(spec, xs, ys)
    return BooleanFunction(n, table)


def _butterfly(values: np.ndarray, n: int) -> np.ndarray:
    """In-place Walsh-Hadamard butterfly over int64; n*2^n additions."""
    v = values.astype(np.int64, copy=True)
    half = 1
    while half < len(v):
        v = v.reshape(-1, 2 * half)
        top, bottom = v[:, :half].copy(), v[:, half:].copy()
        v[:, :half] = top + bottom
        v[:, half:] = top - bottom
        v = v.reshape(-1)
        half *= 2
    return v


def walsh_transform(f: BooleanFunction) -> WalshSpectrum:
    """W(f)(w) = sum_x f(x) * (-1)^(w.x), exact integers."""
    if f.n > MAX_VARIABLES:
        raise TooLargeError(f"n = {f.n} exceeds the {MAX_VARIABLES}-variable bound")
    return WalshSpectrum(f.n, _butterfly(f.table, f.n))


def sign_spectrum(f: BooleanFunction) -> WalshSpectrum:
    """Walsh transform of the sign function (-1)^f; equals 2^n*[w=0] - 2*W(f)(w)."""
    if f.n > MAX_VARIABLES:
        raise TooLargeError(f"n = {f.n} exceeds the {MAX_VARIABLES}-variable bound")
    signs = 1 - 2 * f.table.astype(np.int64)
    return WalshSpectrum(f.n, _butterfly(signs, f.n))


def inverse_walsh(spectrum: WalshSpectrum) -> BooleanFunction:
    """Recover f from W(f): f(x) = 2^(-n) sum_w W(f)(w) * (-1)^(w.x)."""
    raw = _butterfly(spectrum.coefficients, spectrum.n)
    size = 1 << spectrum.n
    if np.any(raw % size):
        raise NotBooleanValuedError("spectrum is not 2^n times a 0/1 table")
    table = raw // size
    if not np.all((table == 0) | (table == 1)):
        raise NotBooleanValuedError("reconstruction yields values outside {0, 1}")
    return BooleanFunction(spectrum.n, table.astype(np.uint8))


def is_bent(f: BooleanFunction) -> bool:
    """True iff every sign-spectrum coefficient is exactly +/-2^(n/2)."""
    if f.n % 2:
        raise OddVariableCountError(f"bentness needs an even variable count, got n = {f.n}")
    target = 1 << (f.n // 2)
    return bool(np.all(np.abs(sign_spectrum(f).coefficients) == target))


def table_to_hex(f: BooleanFunction) -> str:
    """Truth table packed MSB-first into bytes, rendered as lowercase hex."""
    return np.packbits(f.table).tobytes().hex()


def table_from_hex(hexstr: str, n: int) -> BooleanFunction:
    size = 1 << n
    data = np.frombuffer(bytes.fromhex(hexstr), dtype=np.uint8)
    bits = np.unpackbits(data)
    if len(bits) < size or np.any(bits[size:]):
        raise ValueError(f"hex string does not encode a 2^{n}-entry table")
    return BooleanFunction(n, bits[:size])
