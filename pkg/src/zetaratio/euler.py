"""Euler-product constants D1(a), D0~(a), D0(a) with certified prime tails.

For square-free pair sums the local factor at p is

    1 - 2/p^(1+a/2) + 1/p^2,

and the constants are

    D1(a)  = prod_p (1 - 2/p^(1+a/2) + 1/p^2),
    D0~(a) = 2a D1(a) sum_p log p / p^(1+a/2) / (1 - 2/p^(1+a/2) + 1/p^2),
    D0(a)  = (log(2/pi) + 2 gamma - 1) D1(a) + D0~(a).

The truncated values are over primes p <= P. Tail bounds use only
sum_{n>Q} n^-s <= Q^(1-s)/(s-1) and, for the log-weighted sum, the
integral of log x / x^s; they hold for every real a > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arithmetic import PrimeTable
from .errors import DomainError
from .kernel.precision import DEFAULT_CONTEXT, PrecisionContext, constants

KINDS = ("D1", "D0tilde", "D0")


@dataclass(frozen=True)
class EulerProductValue:
    """A truncated constant and a bound on its distance to the full value."""

    value: float
    prime_cutoff: int
    tail_bound: float
    a: float
    kind: str

    def interval(self) -> tuple[float, float]:
        return self.value - self.tail_bound, self.value + self.tail_bound


def _check(a, P, table):
    if not a > 0:
        raise DomainError("a must be positive")
    if P < 1:
        raise DomainError("prime cutoff must be >= 1")
    return table.primes_upto(P).astype(float)


def local_factors(a: float, p: np.ndarray) -> np.ndarray:
    return 1.0 - 2.0 * p ** (-1.0 - a / 2) + p**-2.0


def _fsum(x) -> float:
    return math.fsum(np.asarray(x, dtype=float).tolist())


def _log_tail_bound(a: float, P: int) -> float:
    """Bound on sum_{p > P} |log(local factor)|.

    With u = p^-(1+a/2) <= u_0 = (P+1)^-(1+a/2) <= 1/2 the factor lies in
    [(1-u)^2, 1 + p^-2], so |log| <= p^-2 + 2u/(1-u_0).
    """
    s = 1.0 + a / 2
    u0 = (P + 1.0) ** -s
    return 1.0 / P + 2.0 / (1.0 - u0) * P ** (1.0 - s) / (s - 1.0)


def _log_weight_tail_bound(a: float, P: int) -> float:
    """Bound on sum_{p > P} log p p^-(1+a/2) / (local factor)."""
    s = 1.0 + a / 2
    u0 = (P + 1.0) ** -s
    denom = 1.0 - 2.0 * u0
    # explicit terms below 3, where log x / x^s may still be increasing
    head = sum(math.log(n) * n**-s for n in range(P + 1, 3))
    Q = max(P, 2)
    integral = Q ** (1.0 - s) * (math.log(Q) / (s - 1.0) + 1.0 / (s - 1.0) ** 2)
    return (head + integral) / denom


def d1(a: float, P: int, table: PrimeTable, ctx: PrecisionContext = DEFAULT_CONTEXT) -> EulerProductValue:
    """D1(a) = prod_p (1 - 2/p^(1+a/2) + 1/p^2), truncated at p <= P.

    ``tail_bound`` certifies |D1(a) - value|.
    """
    p = _check(a, P, table)
    value = math.exp(_fsum(np.log(local_factors(a, p)))) if p.size else 1.0
    B = _log_tail_bound(a, P)
    return EulerProductValue(value, P, value * math.expm1(B), a, "D1")


def d0_tilde(a: float, P: int, table: PrimeTable, ctx: PrecisionContext = DEFAULT_CONTEXT) -> EulerProductValue:
    """D0~(a) = 2a D1(a) sum_p log p p^-(1+a/2) / (local factor), truncated at P."""
    p = _check(a, P, table)
    prod = d1(a, P, table, ctx)
    if p.size:
        weights = np.log(p) * p ** (-1.0 - a / 2) / local_factors(a, p)
        S = _fsum(weights)
    else:
        S = 0.0
    ES = _log_weight_tail_bound(a, P)
    rel = math.expm1(_log_tail_bound(a, P))
    value = 2 * a * prod.value * S
    bound = 2 * a * prod.value * (rel * (S + ES) + ES)
    return EulerProductValue(value, P, bound, a, "D0tilde")


def main_term_shift(ctx: PrecisionContext = DEFAULT_CONTEXT) -> float:
    """log(2/pi) + 2 gamma - 1."""
    c = constants(ctx)
    return float(math.log(2) - c.log_2pi + math.log(2) + 2 * c.euler_gamma - 1)


def d0(a: float, P: int, table: PrimeTable, ctx: PrecisionContext = DEFAULT_CONTEXT) -> EulerProductValue:
    """D0(a) = (log(2/pi) + 2 gamma - 1) D1(a) + D0~(a)."""
    one = d1(a, P, table, ctx)
    tilde = d0_tilde(a, P, table, ctx)
    c = main_term_shift(ctx)
    return EulerProductValue(c * one.value + tilde.value, P, abs(c) * one.tail_bound + tilde.tail_bound, a, "D0")


def all_constants(a: float, P: int, table: PrimeTable, ctx: PrecisionContext = DEFAULT_CONTEXT):
    return d1(a, P, table, ctx), d0_tilde(a, P, table, ctx), d0(a, P, table, ctx)
