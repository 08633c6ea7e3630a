"""Working-precision policy and the mathematical constants pi, gamma, log 2pi."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import mpmath
from mpmath import mpf

from ..errors import UsageError

# digits at or below this run on the float64 kernels
FLOAT_DIGITS = 15


@dataclass(frozen=True)
class PrecisionContext:
    """Target significant digits and the derived comparison tolerance.

    ``digits == 15`` selects the float64 kernels; anything larger runs the
    mpmath kernels with ``digits + GUARD`` working digits.
    """

    digits: int = 30

    GUARD = 10

    def __post_init__(self):
        if int(self.digits) != self.digits or self.digits < FLOAT_DIGITS:
            raise UsageError(f"digits must be an integer >= {FLOAT_DIGITS}, got {self.digits}")

    @property
    def tol(self) -> float:
        return 10.0 ** (-self.digits + 5)

    @property
    def is_float(self) -> bool:
        return self.digits <= FLOAT_DIGITS

    @property
    def dps(self) -> int:
        return self.digits + self.GUARD

    def workdps(self):
        return mpmath.workdps(self.dps)


DEFAULT_CONTEXT = PrecisionContext()


class MathConstants(NamedTuple):
    pi: mpf
    euler_gamma: mpf
    log_2pi: mpf


def _arctan_inv(x: int, unity: int) -> int:
    """Fixed-point arctan(1/x) scaled by ``unity``."""
    total = term = unity // x
    x2 = x * x
    k = 1
    sign = -1
    while term:
        term //= x2
        total += sign * (term // (2 * k + 1))
        sign = -sign
        k += 1
    return total


def pi_machin(dps: int) -> mpf:
    """pi = 16 arctan(1/5) - 4 arctan(1/239), in fixed-point integers."""
    guard = 10
    unity = 10 ** (dps + guard)
    p = 4 * (4 * _arctan_inv(5, unity) - _arctan_inv(239, unity))
    with mpmath.workdps(dps + guard):
        return mpf(p) / unity


def pi_agm(dps: int) -> mpf:
    """Gauss-Legendre arithmetic-geometric-mean iteration."""
    with mpmath.workdps(dps + 10):
        a, b, t, p = mpf(1), 1 / mpmath.sqrt(2), mpf(1) / 4, mpf(1)
        eps = mpf(10) ** (-(dps + 5))
        while abs(a - b) > eps:
            an = (a + b) / 2
            b = mpmath.sqrt(a * b)
            t -= p * (a - an) ** 2
            a = an
            p *= 2
        return (a + b) ** 2 / (4 * t)


def euler_gamma_brent_mcmillan(dps: int) -> mpf:
    """Euler-Mascheroni constant by the Brent-McMillan Bessel-function scheme.

    gamma = U/V - log n with U, V Bessel-type sums; the truncation error is
    O(exp(-4n)), so n ~ dps*log(10)/4 suffices.
    """
    n = int(math.ceil(dps * math.log(10) / 4)) + 2
    with mpmath.workdps(dps + 15):
        n2 = mpf(n) ** 2
        A = -mpmath.log(n)
        B = mpf(1)
        U, V = A, B
        k = 1
        kmax = int(3.6 * n) + 10
        while k <= kmax:
            B = B * n2 / (k * k)
            A = (A * n2 / k + B) / k
            U += A
            V += B
            k += 1
        return U / V


@lru_cache(maxsize=16)
def _constants(dps: int) -> MathConstants:
    pi = pi_machin(dps)
    gamma = euler_gamma_brent_mcmillan(dps)
    with mpmath.workdps(dps):
        return MathConstants(+pi, +gamma, mpmath.log(2 * pi))


def constants(ctx: PrecisionContext = DEFAULT_CONTEXT) -> MathConstants:
    """pi, Euler's gamma and log(2 pi), each correct to ``ctx.digits``."""
    return _constants(ctx.dps)
