import math

import mpmath
import numpy as np
import pytest

from zetaratio.errors import AccuracyError, DomainError, PoleError, UsageError
from zetaratio.kernel import (
    PrecisionContext,
    ZetaEvalConfig,
    functional_equation_residual,
    gamma,
    zeta,
    zeta_array,
    zeta_deriv_real,
)

from oracles import zeta2_series, zeta_deriv_series

CTX = PrecisionContext(30)


def test_zeta2_against_basel_series():
    assert float(zeta(2).real) == pytest.approx(zeta2_series(), abs=1e-13)
    assert float(zeta(2).real) == pytest.approx(1.6449340668, abs=1e-10)


def test_zeta0():
    z = zeta(0)
    assert abs(z + mpmath.mpf("0.5")) < CTX.tol


def test_zeta0_against_functional_equation():
    # zeta(0) = lim zeta(1-s) * 2^s pi^(s-1) sin(pi s/2) Gamma(1-s); at s = 0 the
    # identity reads zeta(0) = -1/2 through the residue of zeta at 1.
    assert functional_equation_residual(complex(0.3, 0.0)) <= 10 * CTX.tol


def test_first_zero_bracketed():
    # Z(t) = exp(i theta) zeta(1/2+it) is real; bracket its sign change.
    with mpmath.workdps(40):
        def Z(t):
            return float((mpmath.exp(1j * mpmath.siegeltheta(t)) * zeta(complex(0.5, t))).real)

        assert Z(14.13) * Z(14.14) < 0
    assert abs(zeta(complex(0.5, 14.1347251417))) < 1e-6


def test_pole_and_domain():
    with pytest.raises(PoleError):
        zeta(1)
    with pytest.raises(DomainError):
        zeta(complex(0.6, 100), ZetaEvalConfig(method="riemann-siegel"))
    with pytest.raises(DomainError):
        zeta(complex(0.5, 5), ZetaEvalConfig(method="riemann-siegel"))
    with pytest.raises(UsageError):
        ZetaEvalConfig(method="simpson")


def test_accuracy_error_carries_estimate():
    cfg = ZetaEvalConfig(em_terms=5, em_order=1)
    with pytest.raises(AccuracyError) as info:
        zeta(complex(0.5, 1000), cfg)
    assert info.value.estimate is not None and info.value.estimate > CTX.tol


@pytest.mark.parametrize("s", [complex(0.5, 30), complex(2.5, -7), complex(0.8, 400), complex(3, 1e4)])
def test_against_mpmath(s):
    with mpmath.workdps(40):
        ref = mpmath.zeta(mpmath.mpc(s.real, s.imag))
        assert abs(zeta(s) - ref) < CTX.tol


def test_conjugation_symmetry():
    rng = np.random.default_rng(11)
    for sig, t in zip(rng.uniform(0.5, 3, 100), rng.uniform(-200, 200, 100)):
        z1 = zeta(complex(sig, t))
        z2 = zeta(complex(sig, -t))
        assert abs(z1 - mpmath.conj(z2)) <= CTX.tol


def test_doubling_em_terms():
    for s in [complex(0.5, 100), complex(1, 2000), complex(2, 50)]:
        base = zeta(s)
        N = max(50, math.ceil(abs(s.imag) / math.pi) + 30)
        assert abs(zeta(s, ZetaEvalConfig(em_terms=2 * N)) - base) <= CTX.tol


def test_functional_equation_residuals():
    rng = np.random.default_rng(5)
    for sig, t in zip(rng.uniform(0.05, 0.95, 20), rng.uniform(-50, 50, 20)):
        assert functional_equation_residual(complex(sig, t)) <= 10 * CTX.tol


def test_gamma_kernel():
    with mpmath.workdps(40):
        for z in [complex(0.3, 4), complex(-2.5, 1), complex(7, -20), 0.5]:
            assert abs(gamma(z) - mpmath.gamma(z)) <= CTX.tol * max(1, abs(mpmath.gamma(z)))
    assert abs(gamma(0.5) - mpmath.sqrt(mpmath.pi)) < CTX.tol


def test_zeta_deriv():
    assert abs(zeta_deriv_real(2) - zeta_deriv_series(2)) < 1e-20
    assert float(zeta_deriv_real(2)) == pytest.approx(-0.9375482543, abs=1e-10)
    assert float(zeta_deriv_real(4)) == pytest.approx(float(zeta_deriv_series(4)), abs=1e-20)
    assert float(zeta_deriv_real(4)) == pytest.approx(-0.0689, abs=5e-5)
    # the p = 2 term dominates; the rest of the series is close to log 3 / 3^10
    rest = float(zeta_deriv_real(10)) + math.log(2) / 1024
    assert -1.2 * math.log(3) / 3**10 < rest < -math.log(3) / 3**10
    with pytest.raises(DomainError):
        zeta_deriv_real(1)


def test_float_path_matches_extended():
    s = np.array([0.5 + 30j, 1 + 500j, 0.5 + 12345.6j, 2 - 3j])
    got = zeta_array(s)
    with mpmath.workdps(30):
        for si, g in zip(s, got):
            assert abs(g - complex(mpmath.zeta(si))) < 1e-10


def test_float_context_routes_to_array():
    v = zeta(complex(0.5, 100), ctx=PrecisionContext(15))
    assert abs(complex(v) - complex(zeta(complex(0.5, 100)))) < 1e-10


def test_inverse_zeta_bounded_on_one_line():
    t = np.random.default_rng(0).uniform(1e2, 1e6, 1000)
    v = zeta_array(1 + 1j * t, tol=1e-6)
    assert np.all(np.abs(1 / v) < 10)


def test_float_error_estimate_reported():
    v, err = zeta_array(np.array([0.5 + 1000j]), return_error=True)
    assert err[0] < 1e-10
