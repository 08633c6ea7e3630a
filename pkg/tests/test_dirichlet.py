import math

import mpmath
import numpy as np
import pytest

from zetaratio.errors import UsageError
from zetaratio.kernel import PrecisionContext, approx_error, approx_error_array, inv_zeta, inv_zeta_poly, mollifier_length, zeta

from oracles import mobius_bruteforce


def test_single_term(small_table):
    assert inv_zeta_poly(123.4, 2, 1, small_table) == 1


def test_t0_x2(small_table):
    assert abs(inv_zeta_poly(0, 2, 2, small_table) - 0.5) < 1e-25


def test_t0_mertens_like_sum(small_table):
    v = inv_zeta_poly(0, 1, 10**4, small_table)
    brute = math.fsum(mobius_bruteforce(n) / n for n in range(1, 10**4 + 1))
    assert float(v.real) == pytest.approx(brute, abs=1e-13)
    assert abs(v) < 0.02


def test_poly_overflow(small_table):
    with pytest.raises(UsageError):
        inv_zeta_poly(1.0, 1, 10**4 + 1, small_table)


def test_x1_reduces(small_table):
    t, a = 321.0, 2.0
    direct = abs(1 / zeta(complex(1, a * t)) - 1)
    assert abs(approx_error(t, a, 1, small_table) - direct) < 1e-25


def test_t0_reduces(small_table):
    assert inv_zeta(0, 2) == 0
    assert abs(approx_error(0, 2, 30, small_table) - abs(inv_zeta_poly(0, 2, 30, small_table))) < 1e-25


def test_golden_value(small_table):
    v = approx_error(100, 2, 1000, small_table)
    assert abs(v - mpmath.mpf("0.008999153290879431883957746")) < 1e-24


def test_float_path_agrees(small_table):
    ctx = PrecisionContext(15)
    v = approx_error(100, 2, 1000, small_table, ctx)
    assert float(v) == pytest.approx(0.008999153290879432, abs=1e-10)
    arr = approx_error_array(np.array([100.0, 2500.0]), 2, 1000, small_table)
    assert arr[0] == pytest.approx(0.008999153290879432, abs=1e-10)
    assert arr[1] == pytest.approx(float(approx_error(2500, 2, 1000, small_table)), abs=1e-10)


def test_mollifier_length():
    assert mollifier_length(1e4, 0.8) == math.floor(math.exp(math.log(1e4) ** 0.8))
