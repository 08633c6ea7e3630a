"""Sieve-backed integer arithmetic: primes, Moebius values, square-free support.

Tables are built once and shared read-only by the Euler-product, pair-sum,
Dirichlet-polynomial and mollifier code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ResourceError, UsageError

# beyond this the int8/bool arrays stop being a "desk" table
MAX_TABLE_LIMIT = 10**9


@dataclass(frozen=True, eq=False)
class PrimeTable:
    """Primes and Moebius values up to ``limit``.

    Attributes:
        limit: inclusive upper bound of the table.
        primes: ascending int64 array of all primes <= limit.
        mobius: int8 array of length limit + 1 with ``mobius[n] = mu(n)``;
            index 0 is a zero placeholder.
    """

    limit: int
    primes: np.ndarray
    mobius: np.ndarray

    def mu(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise UsageError(f"n={n} outside table range [1, {self.limit}]")
        return int(self.mobius[n])

    def primes_upto(self, P: int) -> np.ndarray:
        if P > self.limit:
            raise UsageError(f"prime cutoff {P} exceeds table limit {self.limit}")
        return self.primes[: np.searchsorted(self.primes, P, side="right")]

    def same_as(self, other: "PrimeTable") -> bool:
        return (
            self.limit == other.limit
            and np.array_equal(self.primes, other.primes)
            and np.array_equal(self.mobius, other.mobius)
        )


def build_tables(limit: int) -> PrimeTable:
    """Sieve primes and mu(1..limit) in one Eratosthenes pass.

    Args:
        limit: inclusive upper bound, at least 1.

    Returns:
        An immutable :class:`PrimeTable`.

    Raises:
        UsageError: if ``limit < 1``.
        ResourceError: if the arrays for ``limit`` cannot be allocated.
    """
    limit = int(limit)
    if limit < 1:
        raise UsageError(f"table limit must be >= 1, got {limit}")
    if limit > MAX_TABLE_LIMIT:
        raise ResourceError(f"table limit {limit} exceeds supported maximum {MAX_TABLE_LIMIT}")
    try:
        composite = np.zeros(limit + 1, dtype=bool)
        mobius = np.ones(limit + 1, dtype=np.int8)
    except MemoryError as exc:
        raise ResourceError(f"cannot allocate prime table for limit {limit}") from exc

    mobius[0] = 0
    composite[:2] = True
    root = math.isqrt(limit)
    for p in range(2, root + 1):
        if not composite[p]:
            composite[p * p :: p] = True
    primes = np.flatnonzero(~composite).astype(np.int64)
    for p in primes:
        p = int(p)
        mobius[p::p] *= -1
        if p <= root:
            mobius[p * p :: p * p] = 0

    primes.flags.writeable = False
    mobius.flags.writeable = False
    return PrimeTable(limit=limit, primes=primes, mobius=mobius)


def squarefree_upto(X: int, table: PrimeTable) -> np.ndarray:
    """Ascending array of the square-free integers n <= X."""
    if X > table.limit:
        raise UsageError(f"X={X} exceeds table limit {table.limit}")
    if X < 1:
        return np.zeros(0, dtype=np.int64)
    return np.flatnonzero(table.mobius[: X + 1]).astype(np.int64)


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PairIndex:
    """A pair of square-free integers with a real exponent ``a > 0``."""

    m: int
    n: int
    a: float

    def __post_init__(self):
        if not (is_squarefree(self.m) and is_squarefree(self.n)):
            raise UsageError(f"pair ({self.m}, {self.n}) is not square-free")
        if not self.a > 0:
            raise UsageError("a must be positive")


def log_gcd_lcm_pow(idx: PairIndex) -> tuple[float, float]:
    """Return ``(log gcd(m^a, n^a), log lcm(m^a, n^a))``.

    Uses gcd(m^a, n^a) = gcd(m, n)^a and lcm(m^a, n^a) = lcm(m, n)^a so the
    powers are never formed.
    """
    g = math.gcd(idx.m, idx.n)
    log_g = math.log(g)
    log_l = math.log(idx.m) + math.log(idx.n) - log_g
    return idx.a * log_g, idx.a * log_l


def jordan_table(X: int, a: float, table: PrimeTable) -> tuple[np.ndarray, np.ndarray]:
    """Jordan totient J_a(d) = prod_{p|d} (p^a - 1) on square-free d <= X.

    Also returns dJ_a/da. Entries at non-square-free d are left at their
    partial products and must be masked by the caller with mu(d).

    Used through gcd(m, n)^a = sum_{d | gcd(m, n)} J_a(d), valid for
    square-free m, n and any real a.
    """
    J = np.ones(X + 1)
    logderiv = np.zeros(X + 1)
    for p in table.primes_upto(X):
        p = int(p)
        pa = float(p) ** a
        J[p::p] *= pa - 1.0
        logderiv[p::p] += pa * math.log(p) / (pa - 1.0)
    return J, J * logderiv
