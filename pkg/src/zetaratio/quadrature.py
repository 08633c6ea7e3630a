"""Second moments on [T, 2T] by adaptive Gauss-Legendre panels.

Panels have width c 2 pi / log(T / 2 pi), a fixed fraction of the mean gap
between zeros of zeta(1/2 + it). Each panel is integrated at orders p and
2p; panels where the two disagree by more than ``rtol`` are bisected.
Accepted panels are reduced with ``math.fsum`` in left-edge order, so the
result does not depend on how the work was chunked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .arithmetic import PrimeTable
from .errors import AccuracyError, DomainError, UsageError
from .kernel.precision import DEFAULT_CONTEXT, PrecisionContext
from .kernel.riemann_siegel import hardy_z
from .kernel.zeta import EM, zeta_array
from .mollifier import MIN_T, theorem_prediction

KERNELS = {"em": "euler-maclaurin", "rs": "riemann-siegel"}


@dataclass(frozen=True)
class QuadratureConfig:
    """Panel rule and refinement policy.

    Attributes:
        panel_c: panel width as a multiple of 2 pi / log(T / 2 pi), in (0, 2].
        order: Gauss-Legendre order p; each panel is checked against 2p.
        rtol: per-panel relative tolerance between the two orders.
        max_depth: maximum number of bisections of a base panel.
        kernel: zeta(1/2 + it) kernel, ``"riemann-siegel"`` or
            ``"euler-maclaurin"``. zeta(1 + iat) always uses Euler-Maclaurin.
        zeta_tol: absolute accuracy demanded from the float64 zeta kernel.
        chunk_panels: panels evaluated per kernel call.
    """

    panel_c: float = 0.5
    order: int = 16
    rtol: float = 1e-6
    max_depth: int = 8
    kernel: str = "riemann-siegel"
    zeta_tol: float = 1e-9
    chunk_panels: int = 2048

    def __post_init__(self):
        object.__setattr__(self, "kernel", KERNELS.get(self.kernel, self.kernel))
        if not 4 <= self.order <= 64:
            raise UsageError("order must lie in [4, 64]")
        if not 0 < self.panel_c <= 2:
            raise UsageError("panel_c must lie in (0, 2]")
        if not self.rtol > 0:
            raise UsageError("rtol must be positive")
        if self.kernel not in KERNELS.values():
            raise UsageError(f"unknown kernel {self.kernel!r}")

    def panel_width(self, T: float) -> float:
        return self.panel_c * 2 * math.pi / math.log(T / (2 * math.pi))


@dataclass(frozen=True)
class MomentEstimate:
    lower: float
    upper: float
    a: Optional[float]
    value: float
    nodes_used: int
    err_est: float


@lru_cache(maxsize=16)
def _gauss_legendre(order: int):
    x, w = np.polynomial.legendre.leggauss(order)
    return x, w


def integrate_panels(
    f: Callable[[np.ndarray], np.ndarray],
    lo: float,
    hi: float,
    width: float,
    cfg: QuadratureConfig,
) -> tuple[float, int, float]:
    """Adaptive panel integral of a vectorized ``f`` over [lo, hi].

    Returns:
        (value, number of integrand evaluations, summed |Q_2p - Q_p|).

    Raises:
        AccuracyError: a panel still fails after ``cfg.max_depth`` bisections.
    """
    if not hi > lo:
        raise UsageError("integration interval must have hi > lo")
    n = max(1, int(math.ceil((hi - lo) / width)))
    edges = np.linspace(lo, hi, n + 1)
    xp, wp = _gauss_legendre(cfg.order)
    x2, w2 = _gauss_legendre(2 * cfg.order)
    accepted_left = []
    accepted_val = []
    err_parts = []
    nodes = 0
    pending = [(edges[:-1], edges[1:])]
    depth = 0
    while pending:
        next_left = []
        next_right = []
        for left_all, right_all in pending:
            for start in range(0, left_all.size, cfg.chunk_panels):
                left = left_all[start : start + cfg.chunk_panels]
                right = right_all[start : start + cfg.chunk_panels]
                mid = 0.5 * (left + right)
                half = 0.5 * (right - left)
                tp = mid[:, None] + half[:, None] * xp[None, :]
                t2 = mid[:, None] + half[:, None] * x2[None, :]
                vals = np.asarray(f(np.concatenate([tp, t2], axis=1).ravel()), dtype=float)
                vals = vals.reshape(left.size, 3 * cfg.order)
                nodes += vals.size
                qp = half * (vals[:, : cfg.order] @ wp)
                q2 = half * (vals[:, cfg.order :] @ w2)
                diff = np.abs(q2 - qp)
                ok = diff <= cfg.rtol * np.abs(q2)
                accepted_left.append(left[ok])
                accepted_val.append(q2[ok])
                err_parts.append(diff[ok])
                if not np.all(ok):
                    if depth >= cfg.max_depth:
                        bad = np.argmax(np.where(ok, -np.inf, diff))
                        raise AccuracyError(
                            f"refinement depth {cfg.max_depth} exhausted on panel "
                            f"[{left[bad]:.6f}, {right[bad]:.6f}] with |Q2p - Qp| = {diff[bad]:.3g}",
                            estimate=float(diff[bad]),
                        )
                    lb, rb, mb = left[~ok], right[~ok], mid[~ok]
                    next_left.append(np.concatenate([lb, mb]))
                    next_right.append(np.concatenate([mb, rb]))
        pending = [(np.concatenate(next_left), np.concatenate(next_right))] if next_left else []
        depth += 1
    left = np.concatenate(accepted_left)
    vals = np.concatenate(accepted_val)
    order = np.argsort(left, kind="stable")
    value = math.fsum(vals[order].tolist())
    err = math.fsum(np.concatenate(err_parts).tolist())
    return value, nodes, err


def critical_line_abs2(t: np.ndarray, cfg: QuadratureConfig) -> np.ndarray:
    """|zeta(1/2 + it)|^2 via the configured kernel."""
    if cfg.kernel == "riemann-siegel":
        return hardy_z(t) ** 2
    return np.abs(zeta_array(0.5 + 1j * t, EM, tol=cfg.zeta_tol)) ** 2


def ratio_integrand(t: np.ndarray, a: float, cfg: QuadratureConfig) -> np.ndarray:
    """|zeta(1/2 + it)|^2 / |zeta(1 + iat)|^2."""
    den = np.abs(zeta_array(1.0 + 1j * a * t, EM, tol=cfg.zeta_tol)) ** 2
    return critical_line_abs2(t, cfg) / den


def _check_T(T):
    if T < MIN_T:
        raise DomainError(f"T must be >= {MIN_T:g}")


def integrate_ratio_moment(
    T: float,
    a: float,
    cfg: QuadratureConfig = QuadratureConfig(),
    ctx: PrecisionContext = DEFAULT_CONTEXT,
    *,
    upper: Optional[float] = None,
    integrand: Optional[Callable[[np.ndarray], np.ndarray]] = None,
) -> MomentEstimate:
    """int_T^{2T} |zeta(1/2 + it) / zeta(1 + iat)|^2 dt.

    ``upper`` overrides 2T (for split-interval checks); ``integrand``
    replaces the zeta ratio, a hook for testing the panel machinery.
    The panel width always follows ``T``.
    """
    _check_T(T)
    if not a > 0:
        raise DomainError("a must be positive")
    hi = 2 * T if upper is None else upper
    f = integrand if integrand is not None else (lambda t: ratio_integrand(t, a, cfg))
    value, nodes, err = integrate_panels(f, T, hi, cfg.panel_width(T), cfg)
    return MomentEstimate(T, hi, a, value, nodes, err)


def integrate_hl_baseline(
    T: float,
    cfg: QuadratureConfig = QuadratureConfig(),
    ctx: PrecisionContext = DEFAULT_CONTEXT,
    *,
    upper: Optional[float] = None,
) -> MomentEstimate:
    """int_T^{2T} |zeta(1/2 + it)|^2 dt."""
    _check_T(T)
    hi = 2 * T if upper is None else upper
    value, nodes, err = integrate_panels(lambda t: critical_line_abs2(t, cfg), T, hi, cfg.panel_width(T), cfg)
    return MomentEstimate(T, hi, None, value, nodes, err)


def hardy_littlewood_main(T: float, ctx: PrecisionContext = DEFAULT_CONTEXT) -> float:
    """F(T) = T log(T / 2 pi) + (2 gamma - 1) T."""
    from .kernel.precision import constants

    c = constants(ctx)
    return T * (math.log(T) - float(c.log_2pi)) + (2 * float(c.euler_gamma) - 1) * T


@dataclass(frozen=True)
class ScanRow:
    T: float
    a: float
    lhs: float
    prediction: float
    rel_dev: float
    nodes: int
    err_est: float


def error_term_scan(
    T_grid,
    a: float,
    cfg: QuadratureConfig,
    P: int,
    table: PrimeTable,
    ctx: PrecisionContext = DEFAULT_CONTEXT,
) -> list[ScanRow]:
    """Pair the measured moment with D1 T log T + D0 T on each grid point.

    ``rel_dev`` is (lhs - prediction) / (T log T).
    """
    T_grid = [float(T) for T in T_grid]
    if any(b <= a_ for a_, b in zip(T_grid, T_grid[1:])):
        raise UsageError("T grid must be strictly ascending")
    rows = []
    for T in T_grid:
        est = integrate_ratio_moment(T, a, cfg, ctx)
        pred = theorem_prediction(T, a, P, table, ctx)
        rows.append(ScanRow(T, a, est.value, pred, (est.value - pred) / (T * math.log(T)), est.nodes_used, est.err_est))
    return rows
