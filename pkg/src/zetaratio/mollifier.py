"""Mollified second moment: the BCHB main term and Theorem-level prediction.

The mollifier puts a(h) = mu(n)/n^b at h = n^a (b = 1 - a/2) and zero
elsewhere. Everything is indexed by n, never by h = n^a, so large or
non-integer ``a`` cost nothing extra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arithmetic import PrimeTable, squarefree_upto
from .errors import DomainError
from .euler import d0, d1
from .kernel.precision import DEFAULT_CONTEXT, PrecisionContext, constants

MIN_T = 100.0
_BLOCK = 512


@dataclass(frozen=True)
class MollifierCoeffs:
    """Coefficients a(n^a) = mu(n) n^-b on square-free n <= X."""

    a: float
    X: int
    n: np.ndarray
    coefficient: np.ndarray

    @property
    def b(self) -> float:
        return 1.0 - self.a / 2

    def log_h(self) -> np.ndarray:
        return self.a * np.log(self.n.astype(float))

    def at(self, h: int) -> float:
        """a(h) for an integer h; zero unless h = n^a with n in the support."""
        if h == 1:
            return float(self.coefficient[0])
        root = round(h ** (1.0 / self.a))
        for cand in (root - 1, root, root + 1):
            if cand >= 1 and cand**self.a == h:
                k = np.searchsorted(self.n, cand)
                if k < self.n.size and self.n[k] == cand:
                    return float(self.coefficient[k])
        return 0.0


def mollifier_coeffs(a: float, X: int, table: PrimeTable) -> MollifierCoeffs:
    if not a > 0:
        raise DomainError("a must be positive")
    n = squarefree_upto(X, table)
    mu = table.mobius[n].astype(float)
    coef = mu * n.astype(float) ** -(1.0 - a / 2)
    return MollifierCoeffs(a=a, X=X, n=n, coefficient=coef)


@dataclass(frozen=True)
class MollifiedPrediction:
    T: float
    a: float
    X: int
    S1: float
    S2: float
    S3: float
    gamma_used: float

    @property
    def total(self) -> float:
        return self.S1 + self.S2 + self.S3


def _pair_blocks(coeffs: MollifierCoeffs):
    """Yield (weight, log ratio) blocks; weight = a(h) a(k) (h,k)/(hk)."""
    a = coeffs.a
    n = coeffs.n
    logs = np.log(n.astype(float))
    c = coeffs.coefficient
    for lo in range(0, n.size, _BLOCK):
        rows = slice(lo, lo + _BLOCK)
        log_g = np.log(np.gcd(n[rows, None], n[None, :]))
        log_l = logs[rows, None] + logs[None, :] - log_g
        weight = c[rows, None] * c[None, :] * np.exp(a * (log_g - logs[rows, None] - logs[None, :]))
        yield weight, a * (log_g - log_l)


def bchb_main_term(T: float, coeffs: MollifierCoeffs, ctx: PrecisionContext = DEFAULT_CONTEXT) -> MollifiedPrediction:
    """Main term of int_0^T |zeta(1/2+it)|^2 |A(1/2+it)|^2 dt, split as S1+S2+S3.

    S1 = T log T P, S2 = T (2 gamma - 1 - log 2 pi) P, S3 = T L, where P and L
    are the plain and log-ratio pair sums over the coefficient support.
    """
    if T < MIN_T:
        raise DomainError(f"T must be >= {MIN_T:g}")
    c = constants(ctx)
    gamma = float(c.euler_gamma)
    plain = []
    logr = []
    for weight, ratio in _pair_blocks(coeffs):
        plain.append(weight.sum())
        logr.append((weight * ratio).sum())
    P = math.fsum(plain)
    L = math.fsum(logr)
    shift = 2 * gamma - 1 - float(c.log_2pi)
    return MollifiedPrediction(
        T=T, a=coeffs.a, X=coeffs.X, S1=T * math.log(T) * P, S2=T * shift * P, S3=T * L, gamma_used=gamma
    )


def theorem_prediction(
    T: float, a: float, P: int, table: PrimeTable, ctx: PrecisionContext = DEFAULT_CONTEXT
) -> float:
    """D1(a) T log T + D0(a) T, the predicted int_T^{2T} |zeta(1/2+it)/zeta(1+iat)|^2 dt."""
    if T < MIN_T:
        raise DomainError(f"T must be >= {MIN_T:g}")
    return d1(a, P, table, ctx).value * T * math.log(T) + d0(a, P, table, ctx).value * T
