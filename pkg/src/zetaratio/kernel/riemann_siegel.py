"""Float64 Riemann-Siegel evaluation of Z(t) and zeta(1/2 + it).

The remainder uses Gabcke's coefficients C_0..C_4, written as polynomials in
x = p - 1/2 where p is the fractional part of sqrt(t / 2 pi). The Taylor
series of Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p) about p = 1/2 is
computed once in mpmath; Psi is entire, so the series converges on the whole
range |x| <= 1/2.
"""

from __future__ import annotations

import math
from functools import lru_cache

import mpmath
import numba
import numpy as np

from ..errors import DomainError

RS_MIN_T = 10.0

# C_k = sum of coef * Psi^{(order)} / pi^{pipow}, as (order, coef, pipow)
_C_TERMS = (
    ((0, 1, 0),),
    ((3, -1 / 96, 2),),
    ((2, 1 / 64, 2), (6, 1 / 18432, 4)),
    ((1, -1 / 64, 2), (5, -1 / 3840, 4), (9, -1 / 5308416, 6)),
    ((0, 1 / 128, 2), (4, 19 / 24576, 4), (8, 11 / 5898240, 6), (12, 1 / 2038431744, 8)),
)


@lru_cache(maxsize=1)
def remainder_polynomials(degree: int = 80) -> np.ndarray:
    """Coefficient matrix ``P[k, j]`` with C_k(1/2 + x) = sum_j P[k, j] x^j."""
    with mpmath.workdps(60):
        pi = mpmath.pi
        D = degree + 14
        # Psi(1/2 + x) = -cos(2 pi x^2 - 5 pi / 8) / cos(2 pi x)
        c58, s58 = mpmath.cos(5 * pi / 8), mpmath.sin(5 * pi / 8)
        num = [mpmath.mpf(0)] * (D + 1)
        for j in range(0, D // 2 + 1):
            coef = (2 * pi) ** j / mpmath.factorial(j)
            if j % 2 == 0:
                num[2 * j] += -c58 * coef * (-1) ** (j // 2)
            else:
                num[2 * j] += -s58 * coef * (-1) ** (j // 2)
        den = [mpmath.mpf(0)] * (D + 1)
        for j in range(0, D // 2 + 1):
            den[2 * j] = (-1) ** j * (2 * pi) ** (2 * j) / mpmath.factorial(2 * j)
        psi = [mpmath.mpf(0)] * (D + 1)
        for j in range(D + 1):
            acc = num[j] - sum(psi[i] * den[j - i] for i in range(j))
            psi[j] = acc / den[0]

        def deriv(series, order):
            out = list(series)
            for _ in range(order):
                out = [out[j + 1] * (j + 1) for j in range(len(out) - 1)]
            return out

        P = np.zeros((len(_C_TERMS), degree + 1))
        for k, terms in enumerate(_C_TERMS):
            for order, mult, pipow in terms:
                d = deriv(psi, order)
                scale = mpmath.mpf(mult) / pi**pipow
                for j in range(degree + 1):
                    P[k, j] += float(scale * d[j])
        return P


@numba.njit(cache=True)
def _theta(t):
    it = 1.0 / t
    it2 = it * it
    return (
        0.5 * t * math.log(t / (2.0 * math.pi))
        - 0.5 * t
        - math.pi / 8.0
        + it * (1.0 / 48.0 + it2 * (7.0 / 5760.0 + it2 * (31.0 / 80640.0 + it2 * (127.0 / 430080.0))))
    )


@numba.njit(cache=True)
def _hardy_z(ts, P, n_corr):
    out = np.empty(ts.shape[0])
    for i in range(ts.shape[0]):
        t = ts[i]
        tau = math.sqrt(t / (2.0 * math.pi))
        N = int(tau)
        th = _theta(t)
        s = 0.0
        for n in range(1, N + 1):
            s += math.cos(th - t * math.log(n)) / math.sqrt(n)
        x = tau - N - 0.5
        rem = 0.0
        scale = 1.0
        for k in range(n_corr):
            c = 0.0
            for j in range(P.shape[1] - 1, -1, -1):
                c = c * x + P[k, j]
            rem += c * scale
            scale /= tau
        sign = 1.0 if (N - 1) % 2 == 0 else -1.0
        out[i] = 2.0 * s + sign * rem / math.sqrt(tau)
    return out


@numba.njit(cache=True)
def _theta_array(ts):
    out = np.empty(ts.shape[0])
    for i in range(ts.shape[0]):
        out[i] = _theta(ts[i])
    return out


def _as_t(t):
    t = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(np.abs(t) < RS_MIN_T):
        raise DomainError(f"Riemann-Siegel path needs |t| >= {RS_MIN_T}")
    return t


def riemann_siegel_theta(t):
    """theta(t) from its Stirling expansion (t >= 10)."""
    t = _as_t(t)
    return np.sign(t) * _theta_array(np.abs(t))


def hardy_z(t, corrections: int = 5):
    """Hardy's Z(t), real-valued with |Z(t)| = |zeta(1/2 + it)|.

    Args:
        t: scalar or array, |t| >= 10.
        corrections: number of remainder terms C_0.. used (1 to 5).
    """
    t = _as_t(t)
    if not 1 <= corrections <= len(_C_TERMS):
        raise DomainError(f"corrections must be in 1..{len(_C_TERMS)}")
    return _hardy_z(np.abs(t), remainder_polynomials(), corrections)


def zeta_critical_rs(t, corrections: int = 5):
    """zeta(1/2 + it) = exp(-i theta(t)) Z(t), vectorized over ``t``."""
    t = _as_t(t)
    ta = np.abs(t)
    z = _hardy_z(ta, remainder_polynomials(), corrections) * np.exp(-1j * _theta_array(ta))
    return np.where(t < 0, np.conj(z), z)
