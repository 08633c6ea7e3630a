import math

import numpy as np
import pytest

from zetaratio import QuadratureConfig, build_tables, error_term_scan, integrate_hl_baseline, integrate_ratio_moment
from zetaratio.errors import AccuracyError, DomainError, UsageError
from zetaratio.quadrature import hardy_littlewood_main, integrate_panels

CFG = QuadratureConfig()


def test_constant_integrand_gives_T():
    est = integrate_ratio_moment(1234.5, 2, integrand=np.ones_like)
    assert est.value == pytest.approx(1234.5, rel=1e-14)


def test_polynomial_integrand_exact():
    v, _, _ = integrate_panels(lambda t: t**3, 0.0, 2.0, 0.3, CFG)
    assert v == pytest.approx(4.0, rel=1e-14)


def test_config_validation():
    for bad in (dict(order=3), dict(order=65), dict(panel_c=0), dict(panel_c=2.5), dict(kernel="simpson")):
        with pytest.raises(UsageError):
            QuadratureConfig(**bad)
    assert QuadratureConfig(kernel="em").kernel == "euler-maclaurin"


def test_domain():
    with pytest.raises(DomainError):
        integrate_ratio_moment(99, 2)
    with pytest.raises(DomainError):
        integrate_ratio_moment(1e3, 0)


def test_depth_exhaustion_reports_panel():
    cfg = QuadratureConfig(order=4, rtol=1e-15, max_depth=1)
    with pytest.raises(AccuracyError, match="panel"):
        integrate_panels(lambda t: np.abs(np.sin(37 * t)), 0.0, 10.0, 1.0, cfg)


def test_golden_ratio_moment(ratio_moments):
    est = ratio_moments[1e3]
    assert est.value == pytest.approx(5390.456178034063, rel=1e-10)
    assert est.value > 0 and est.err_est <= CFG.rtol * est.value


def test_order_stability(ratio_moments):
    hi = integrate_ratio_moment(1e3, 2, QuadratureConfig(order=32))
    assert abs(hi.value - ratio_moments[1e3].value) <= CFG.rtol * hi.value


def test_additivity_ratio():
    T = 1e3
    whole = integrate_ratio_moment(T, 1)
    left = integrate_ratio_moment(T, 1, upper=1.5 * T)
    right = integrate_ratio_moment(1.5 * T, 1, upper=2 * T, cfg=QuadratureConfig(panel_c=0.5 * math.log(1.5 * T / (2 * math.pi)) / math.log(T / (2 * math.pi))))
    assert abs(left.value + right.value - whole.value) <= 2 * CFG.rtol * whole.value


def test_additivity_baseline():
    T = 1e3
    whole = integrate_hl_baseline(T)
    parts = integrate_hl_baseline(T, upper=1.5 * T).value + integrate_hl_baseline(1.5 * T, upper=2 * T).value
    assert abs(parts - whole.value) <= 2 * CFG.rtol * whole.value


def test_baseline_small_T():
    est = integrate_hl_baseline(1e3)
    F = hardy_littlewood_main
    assert abs(est.value / (F(2e3) - F(1e3)) - 1) <= 0.03
    assert est.value == pytest.approx(6617.559479768125, rel=1e-10)


def test_kernel_independence_baseline():
    em = integrate_hl_baseline(1e4, QuadratureConfig(kernel="em"))
    rs = integrate_hl_baseline(1e4, QuadratureConfig(kernel="rs"))
    assert abs(em.value - rs.value) <= 1e-4 * rs.value


def test_kernel_independence_ratio(ratio_moments):
    em = integrate_ratio_moment(1e3, 2, QuadratureConfig(kernel="em"))
    assert abs(em.value - ratio_moments[1e3].value) <= 1e-4 * em.value


def test_deterministic():
    a = integrate_ratio_moment(300, 3)
    b = integrate_ratio_moment(300, 3, QuadratureConfig(chunk_panels=7))
    assert a.value == b.value


def test_scan_single_row():
    t = build_tables(10**4)
    rows = error_term_scan([1e3], 1, CFG, 10**4, t)
    assert len(rows) == 1 and rows[0].lhs > 0
    assert rows[0].rel_dev == pytest.approx((rows[0].lhs - rows[0].prediction) / (1e3 * math.log(1e3)))
    with pytest.raises(UsageError):
        error_term_scan([1e3, 500], 1, CFG, 10**4, t)
