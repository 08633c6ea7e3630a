import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaratio import build_tables, pair_sum, tail_fit
from zetaratio.errors import UsageError
from zetaratio.pairsum import pair_term

from oracles import pair_sum_bruteforce

T2000 = build_tables(2000)


def test_trivial_cases():
    assert pair_sum(2, 1, "plain", T2000).value == 1.0
    assert pair_sum(2, 2, "plain", T2000).value == pytest.approx(0.75, abs=1e-15)
    assert pair_sum(2, 2, "log-ratio", T2000).value == pytest.approx(math.log(2), abs=1e-15)


def test_b_is_derived():
    r = pair_sum(3, 10, "plain", T2000)
    assert r.b == 1 - 3 / 2


@pytest.mark.parametrize("a", [1, 2, 3])
@pytest.mark.parametrize("variant", ["plain", "log-ratio"])
def test_against_power_oracle(a, variant):
    got = pair_sum(a, 40, variant, T2000).value
    assert got == pytest.approx(pair_sum_bruteforce(a, 40, variant == "log-ratio"), rel=1e-12, abs=1e-14)


@pytest.mark.parametrize("a", [0.7, 1, 2, 3.5])
def test_divisor_route_matches_direct(a):
    for variant in ("plain", "log-ratio"):
        d = pair_sum(a, 600, variant, T2000, method="direct").value
        v = pair_sum(a, 600, variant, T2000).value
        assert v == pytest.approx(d, rel=1e-12)


_SQF = [n for n in range(1, 200) if T2000.mu(n) != 0]


@given(st.sampled_from(_SQF), st.sampled_from(_SQF), st.sampled_from([1.0, 2.0, 3.0, 2.5]))
@settings(max_examples=200, deadline=None)
def test_term_symmetry_and_direct_powers(m, n, a):
    b = 1 - a / 2
    assert pair_term(m, n, a) == pytest.approx(pair_term(n, m, a), rel=1e-14)
    g = math.gcd(m, n)
    lcm = m * n // g
    direct = T2000.mu(m) * T2000.mu(n) / ((m * n) ** b * lcm**a)
    assert pair_term(m, n, a) == pytest.approx(direct, rel=1e-12)
    assert pair_term(m, n, a, "log-ratio") == pytest.approx(direct * a * math.log(g / lcm), rel=1e-12, abs=1e-300)


def test_errors():
    with pytest.raises(UsageError):
        pair_sum(2, 2001, "plain", T2000)
    with pytest.raises(UsageError):
        pair_sum(2, 10, "cubic", T2000)
    with pytest.raises(UsageError):
        tail_fit(2, "plain", [16, 32, 64], None, T2000)
    with pytest.raises(UsageError):
        tail_fit(2, "plain", [16, 32, 64, 128], 1024, T2000)


def test_tail_fit_structure(table):
    grid = [2**k for k in range(4, 11)]
    fit = tail_fit(3, "plain", grid, None, table)
    assert fit.reference_X == 16 * 1024
    r = np.array(fit.residuals)
    half = len(r) // 2
    assert np.median(r[half:]) <= np.median(r[:half])
    assert fit.envelope(1024) >= fit.residuals[-1]
    assert fit.slope_stderr > 0
