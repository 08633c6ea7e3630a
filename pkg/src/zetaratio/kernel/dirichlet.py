"""Truncated Moebius Dirichlet polynomial approximating 1/zeta(1 + iat)."""

from __future__ import annotations

import math

import mpmath
import numpy as np
from mpmath import mpc, mpf

from ..arithmetic import PrimeTable, squarefree_upto
from ..errors import UsageError
from .precision import DEFAULT_CONTEXT, PrecisionContext
from .zeta import EM, ZetaEvalConfig, zeta, zeta_array


def mollifier_length(T: float, beta: float) -> int:
    """Cutoff X = floor(exp((log T)^beta)) for 2/3 < beta < 1."""
    if T < 100:
        raise UsageError("T must be >= 100")
    if not 0 < beta < 1:
        raise UsageError("beta must lie in (0, 1)")
    return int(math.floor(math.exp(math.log(T) ** beta)))


def inv_zeta_poly(t: float, a: float, X: int, table: PrimeTable, ctx: PrecisionContext = DEFAULT_CONTEXT) -> mpc:
    """sum_{n <= X} mu(n) n^(-1 - i a t), exactly as a finite sum."""
    if X > table.limit:
        raise UsageError(f"X={X} exceeds table limit {table.limit}")
    ns = squarefree_upto(X, table)
    mu = table.mobius[ns].astype(float)
    if ctx.is_float:
        logs = np.log(ns.astype(float))
        v = np.sum(mu / ns * np.exp(-1j * (a * t) * logs))
        return mpc(v.real, v.imag)
    with ctx.workdps():
        w = -1 - 1j * mpf(a) * mpf(t)
        return mpmath.fsum(int(m) * mpmath.exp(w * mpmath.log(int(n))) for n, m in zip(ns, mu))


def inv_zeta(t: float, a: float, cfg: ZetaEvalConfig = EM, ctx: PrecisionContext = DEFAULT_CONTEXT) -> mpc:
    """1/zeta(1 + i a t), with the convention 1/zeta(1) = 0."""
    if a * t == 0:
        return mpc(0)
    with ctx.workdps():
        return 1 / zeta(mpc(1, mpf(a) * mpf(t)), cfg, ctx)


def approx_error(
    t: float,
    a: float,
    X: int,
    table: PrimeTable,
    ctx: PrecisionContext = DEFAULT_CONTEXT,
    cfg: ZetaEvalConfig = EM,
) -> mpf:
    """|1/zeta(1 + i a t) - sum_{n <= X} mu(n) n^(-1 - i a t)|."""
    with ctx.workdps():
        return abs(inv_zeta(t, a, cfg, ctx) - inv_zeta_poly(t, a, X, table, ctx))


def approx_error_array(ts, a: float, X: int, table: PrimeTable, tol: float = 1e-10) -> np.ndarray:
    """Float64 version of :func:`approx_error` over many ``t``."""
    ts = np.asarray(ts, dtype=float)
    if X > table.limit:
        raise UsageError(f"X={X} exceeds table limit {table.limit}")
    ns = squarefree_upto(X, table)
    coef = table.mobius[ns] / ns
    logs = np.log(ns.astype(float))
    poly = np.array([np.sum(coef * np.exp(-1j * (a * t) * logs)) for t in ts])
    inv = np.zeros(ts.shape, dtype=complex)
    nz = a * ts != 0
    inv[nz] = 1 / zeta_array(1 + 1j * a * ts[nz], tol=tol)
    return np.abs(inv - poly)
