import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaratio.arithmetic import PairIndex, build_tables, is_squarefree, jordan_table, log_gcd_lcm_pow, squarefree_upto
from zetaratio.errors import ResourceError, UsageError

from oracles import is_prime_bruteforce, mobius_bruteforce


def test_primes_to_10():
    assert build_tables(10).primes.tolist() == [2, 3, 5, 7]


def test_mobius_to_6():
    assert build_tables(6).mobius[1:].tolist() == [1, -1, -1, 0, -1, 1]


def test_limit_one():
    t = build_tables(1)
    assert t.primes.size == 0 and t.mu(1) == 1


@pytest.mark.parametrize("limit", [2, 97, 100, 1000])
def test_against_trial_division(limit):
    t = build_tables(limit)
    assert t.primes.tolist() == [n for n in range(2, limit + 1) if is_prime_bruteforce(n)]
    assert t.mobius[1:].tolist() == [mobius_bruteforce(n) for n in range(1, limit + 1)]


def test_squarefree_count_100():
    expected = sum(1 for n in range(1, 101) if mobius_bruteforce(n) != 0)
    assert expected == 61
    assert len(squarefree_upto(100, build_tables(100))) == 61


def test_squarefree_small():
    t = build_tables(100)
    assert squarefree_upto(1, t).tolist() == [1]
    assert squarefree_upto(10, t).tolist() == [1, 2, 3, 5, 6, 7, 10]


def test_squarefree_beyond_table():
    with pytest.raises(UsageError):
        squarefree_upto(101, build_tables(100))


def test_bad_limits():
    with pytest.raises(UsageError):
        build_tables(0)
    with pytest.raises(ResourceError, match="10000000000"):
        build_tables(10**10)


def test_tables_immutable_and_deterministic():
    a, b = build_tables(5000), build_tables(5000)
    assert a.same_as(b)
    with pytest.raises(ValueError):
        a.mobius[3] = 0


def test_divisor_sum_of_mobius():
    t = build_tables(10**4)
    acc = np.zeros(10**4 + 1, dtype=np.int64)
    for d in range(1, 10**4 + 1):
        acc[d::d] += t.mobius[d]
    assert acc[1] == 1
    assert not acc[2:].any()


@given(st.integers(1, 3000), st.integers(1, 3000))
@settings(max_examples=200, deadline=None)
def test_mobius_multiplicative(m, n):
    t = _T3000
    if math.gcd(m, n) == 1 and m * n <= t.limit:
        assert t.mu(m * n) == t.mu(m) * t.mu(n)


_T3000 = build_tables(3000 * 3000 // 100)


@pytest.mark.parametrize(
    "m,n,a,expected",
    [
        (2, 3, 2, (0.0, math.log(36))),
        (5, 5, 3, (3 * math.log(5), 3 * math.log(5))),
        (6, 10, 1, (math.log(2), math.log(30))),
    ],
)
def test_log_gcd_lcm_examples(m, n, a, expected):
    got = log_gcd_lcm_pow(PairIndex(m, n, a))
    assert got == pytest.approx(expected, abs=1e-14)


_SQF = [n for n in range(1, 1001) if is_squarefree(n)]


@given(st.sampled_from(_SQF), st.sampled_from(_SQF), st.sampled_from([1, 2, 3]))
@settings(max_examples=300, deadline=None)
def test_gcd_lcm_product_identity(m, n, a):
    lg, ll = log_gcd_lcm_pow(PairIndex(m, n, a))
    assert math.exp(lg) * math.exp(ll) == pytest.approx(float(m * n) ** a, rel=1e-12)


def test_pair_index_rejects_square_factor():
    with pytest.raises(UsageError):
        PairIndex(4, 3, 1.0)


def test_jordan_identity():
    t = build_tables(500)
    for a in (1.0, 2.5):
        J, _ = jordan_table(500, a, t)
        for m, n in [(30, 42), (210, 330), (7, 11), (1, 1)]:
            g = math.gcd(m, n)
            assert sum(J[d] for d in range(1, g + 1) if g % d == 0) == pytest.approx(g**a, rel=1e-12)
