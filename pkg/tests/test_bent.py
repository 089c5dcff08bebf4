"""Boolean-function layer: truth tables, Walsh spectra, bentness, hex I/O."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from chaos_prng.bent import (
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
from chaos_prng.errors import (
    LengthMismatchError,
    NotBooleanValuedError,
    OddVariableCountError,
    TooLargeError,
)

from oracles import oracle_sign_matrix, oracle_walsh

# Hand-evaluated tables for the two smallest family members (variable order
# x_0..x_{m-1}, y_0..y_{m-1}; first variable = MSB of the row index).
M1_TABLE = (0, 0, 1, 0)
M2_TABLE = (0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 1, 0, 0, 1)


def test_m1_truth_table():
    f = truth_table(MaioranaSpec(1))
    assert f.n == 2
    assert tuple(f.table) == M1_TABLE


def test_m2_truth_table():
    f = truth_table(MaioranaSpec(2))
    assert f.n == 4
    assert tuple(f.table) == M2_TABLE


def test_m2_all_ones_input():
    # x = (1,1), y = (1,1): inner product 1^1 = 0, product term 1 -> 1.
    assert maiorana_eval(MaioranaSpec(2), (1, 1), (1, 1)) == 1
    f = truth_table(MaioranaSpec(2))
    assert f.table[0b1111] == 1


def test_maiorana_eval_examples():
    spec = MaioranaSpec(3)
    assert maiorana_eval(spec, (0, 0, 0), (0, 0, 0)) == 0
    assert maiorana_eval(spec, (1, 1, 1), (0, 0, 0)) == 1  # product term only
    assert maiorana_eval(spec, (1, 0, 0), (1, 0, 0)) == 1  # inner product only
    assert maiorana_eval(spec, (1, 1, 1), (1, 1, 0)) == 1  # 1^1^0 ^ 1


def test_maiorana_eval_rejects_wrong_lengths():
    with pytest.raises(LengthMismatchError):
        maiorana_eval(MaioranaSpec(3), (0, 0), (0, 0, 0))
    with pytest.raises(LengthMismatchError):
        maiorana_eval(MaioranaSpec(3), (0, 0, 0), (0, 0, 0, 0))


@pytest.mark.parametrize("m", range(1, 7))
def test_truth_table_matches_pointwise_eval(m):
    f = truth_table(MaioranaSpec(m))
    assert f.table.shape == (1 << (2 * m),)
    spec = MaioranaSpec(m)
    rng = np.random.default_rng(7)
    for k in rng.integers(0, 1 << (2 * m), size=32):
        xs = [(int(k) >> (2 * m - 1 - i)) & 1 for i in range(m)]
        ys = [(int(k) >> (m - 1 - i)) & 1 for i in range(m)]
        assert f.table[k] == maiorana_eval(spec, xs, ys)


def test_ones_count_is_bent_balanced():
    # 2^(2m-1) +/- 2^(m-1) ones, the characteristic near-balance of the family.
    for m in range(1, 9):
        ones = int(truth_table(MaioranaSpec(m)).table.sum())
        assert ones in (
            (1 << (2 * m - 1)) - (1 << (m - 1)),
            (1 << (2 * m - 1)) + (1 << (m - 1)),
        )


def test_table_validation():
    with pytest.raises(ValueError):
        BooleanFunction(2, np.array([0, 1, 1]))
    with pytest.raises(ValueError):
        BooleanFunction(1, np.array([0, 2]))


def test_walsh_of_constants():
    size = 8
    zero = BooleanFunction(3, np.zeros(size, dtype=np.uint8))
    one = BooleanFunction(3, np.ones(size, dtype=np.uint8))
    assert np.array_equal(walsh_transform(zero).coefficients, np.zeros(size))
    w1 = walsh_transform(one).coefficients
    assert w1[0] == size and not np.any(w1[1:])


@settings(max_examples=60)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(st.just(n), st.lists(
    st.integers(0, 1), min_size=1 << n, max_size=1 << n))))
def test_fast_walsh_matches_naive_double_sum(n_and_table):
    n, table = n_and_table
    f = BooleanFunction(n, np.array(table, dtype=np.uint8))
    fast = walsh_transform(f).coefficients
    assert list(fast) == oracle_walsh(table)


@pytest.mark.parametrize("n", [8, 10, 12])
def test_fast_walsh_matches_matrix_naive_large(n):
    rng = np.random.default_rng(n)
    mat = oracle_sign_matrix(n)
    for _ in range(3):
        table = rng.integers(0, 2, size=1 << n, dtype=np.uint8)
        f = BooleanFunction(n, table)
        # W(f) over 0/1 values relates to the sign matvec by
        # mat @ table = sum_x (-1)^(w.x) table[x]  ==  W(f)(w) directly.
        assert np.array_equal(
            walsh_transform(f).coefficients, mat @ table.astype(np.int32)
        )


def test_m1_walsh_spectrum_by_brute_force():
    f = truth_table(MaioranaSpec(1))
    assert list(walsh_transform(f).coefficients) == oracle_walsh(M1_TABLE) == [1, 1, -1, -1]


def test_sign_spectrum_relation():
    # W_sign(w) = 2^n [w=0] - 2 W_f(w), for every w.
    f = truth_table(MaioranaSpec(3))
    wf = walsh_transform(f).coefficients
    ws = sign_spectrum(f).coefficients
    expected = -2 * wf
    expected[0] += 1 << f.n
    assert np.array_equal(ws, expected)


def test_m1_sign_spectrum():
    assert tuple(sign_spectrum(truth_table(MaioranaSpec(1))).coefficients) == (2, -2, 2, 2)


def test_parseval_identity():
    f = truth_table(MaioranaSpec(4))
    ws = sign_spectrum(f).coefficients.astype(np.int64)
    assert int((ws * ws).sum()) == 1 << (2 * f.n)


@pytest.mark.parametrize("m", range(1, 9))
def test_family_is_bent_up_to_m8(m):
    assert is_bent(truth_table(MaioranaSpec(m)))


def test_constant_is_not_bent():
    assert not is_bent(BooleanFunction(2, np.zeros(4, dtype=np.uint8)))


def test_linear_function_is_not_bent():
    # f(x) = x_0 on 2 variables: flat at 0 and one mask, zero elsewhere.
    table = np.array([0, 0, 1, 1], dtype=np.uint8)
    assert not is_bent(BooleanFunction(2, table))


def test_is_bent_rejects_odd_variable_count():
    with pytest.raises(OddVariableCountError):
        is_bent(BooleanFunction(3, np.zeros(8, dtype=np.uint8)))


def test_inverse_walsh_round_trip():
    f = truth_table(MaioranaSpec(3))
    assert inverse_walsh(walsh_transform(f)) == f


@given(st.lists(st.integers(0, 1), min_size=256, max_size=256))
def test_inverse_walsh_round_trip_random_8var(table):
    f = BooleanFunction(8, np.array(table, dtype=np.uint8))
    assert inverse_walsh(walsh_transform(f)) == f


def test_inverse_walsh_rejects_non_boolean_spectrum():
    with pytest.raises(NotBooleanValuedError):
        inverse_walsh(WalshSpectrum(2, np.array([1, 0, 0, 0])))
    with pytest.raises(NotBooleanValuedError):
        inverse_walsh(WalshSpectrum(2, np.array([8, 0, 0, 0])))


def test_size_limits_enforced():
    with pytest.raises(TooLargeError):
        truth_table(MaioranaSpec(13))
    fake = BooleanFunction.__new__(BooleanFunction)
    object.__setattr__(fake, "n", 25)
    object.__setattr__(fake, "table", np.zeros(2, dtype=np.uint8))
    with pytest.raises(TooLargeError):
        walsh_transform(fake)


def test_hex_round_trip():
    f = truth_table(MaioranaSpec(2))
    assert table_from_hex(table_to_hex(f), f.n) == f


def test_m1_hex_export():
    # table (0,0,1,0) packed MSB-first is 0b0010_0000 = 0x20.
    assert table_to_hex(truth_table(MaioranaSpec(1))) == "20"


def test_hex_import_rejects_bad_payload():
    with pytest.raises(ValueError):
        table_from_hex("20", 4)  # too short for 16 entries
    with pytest.raises(ValueError):
        table_from_hex("2001", 2)  # set bits past the table end


def test_custom_r_term():
    # R = 0 turns the function into the pure inner product; still bent, and
    # the m=1 table becomes AND(x, y).
    spec = MaioranaSpec(1, r_term=lambda xs: 0)
    f = truth_table(spec)
    assert tuple(f.table) == (0, 0, 0, 1)
    assert is_bent(f)
    spec3 = MaioranaSpec(3, r_term=lambda xs: 0)
    assert is_bent(truth_table(spec3))
