"""Square-free pair sums and their tail behaviour.

For square-free m, n and b = 1 - a/2 the plain pair sum is

    sum_{m, n <= X} mu(m) mu(n) / ((mn)^b lcm(m, n)^a)

and the log-ratio variant inserts log(gcd(m^a, n^a) / lcm(m^a, n^a)).

Two evaluation routes are provided:

* ``direct`` walks every pair (m, n), blockwise in numpy, with each term
  formed in log space.
* ``divisor`` expands gcd(m, n)^a = sum_{d | gcd} J_a(d) with Jordan's
  totient, turning the double sum into sum_d J_a(d) F_d^2 where
  F_d = sum_{d | m <= X} mu(m) m^-(a+b). Cost is O(X log X) instead of
  O(X^2), which makes large reference cutoffs affordable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .arithmetic import PairIndex, PrimeTable, jordan_table, log_gcd_lcm_pow, squarefree_upto
from .errors import DomainError, UsageError
from .kernel.precision import DEFAULT_CONTEXT, PrecisionContext

VARIANTS = ("plain", "log-ratio")
_BLOCK = 512


@dataclass(frozen=True)
class PairSumResult:
    value: float
    X: int
    a: float
    variant: str

    @property
    def b(self) -> float:
        return 1.0 - self.a / 2


def _validate(a, X, variant, table):
    if not a > 0:
        raise DomainError("a must be positive")
    if variant not in VARIANTS:
        raise UsageError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    if X > table.limit:
        raise UsageError(f"X={X} exceeds table limit {table.limit}")
    if X < 1:
        raise UsageError("X must be >= 1")


def pair_term(m: int, n: int, a: float, variant: str = "plain") -> float:
    """One summand, exp(-b log(mn) - a log lcm(m, n)) times mu(m) mu(n)."""
    idx = PairIndex(m, n, a)
    log_g, log_l = log_gcd_lcm_pow(idx)
    b = 1.0 - a / 2
    sign = (-1) ** (_omega(m) + _omega(n))
    w = sign * math.exp(-b * (math.log(m) + math.log(n)) - log_l)
    if variant == "log-ratio":
        w *= log_g - log_l
    return w


def _omega(n: int) -> int:
    count, d = 0, 2
    while d * d <= n:
        if n % d == 0:
            count += 1
            n //= d
        d += 1
    return count + (n > 1)


def pair_sum_direct(a: float, X: int, variant: str, table: PrimeTable) -> float:
    """Walk all square-free pairs; each term built in log space."""
    _validate(a, X, variant, table)
    b = 1.0 - a / 2
    ns = squarefree_upto(X, table)
    mu = table.mobius[ns].astype(float)
    logs = np.log(ns.astype(float))
    total = 0.0
    partials = []
    for lo in range(0, ns.size, _BLOCK):
        rows = slice(lo, lo + _BLOCK)
        g = np.gcd(ns[rows, None], ns[None, :])
        log_g = np.log(g)
        log_sum = logs[rows, None] + logs[None, :]
        log_l = log_sum - log_g
        w = np.exp(-b * log_sum - a * log_l) * (mu[rows, None] * mu[None, :])
        if variant == "log-ratio":
            w *= a * (log_g - log_l)
        partials.append(w.sum())
    total = math.fsum(partials)
    return total


def _divisor_sums(a: float, X: int, table: PrimeTable, J=None, dJ=None):
    b = 1.0 - a / 2
    mu = table.mobius[: X + 1].astype(float)
    n = np.arange(X + 1, dtype=float)
    n[0] = 1.0
    w = mu * n ** (-(a + b))
    wl = w * np.log(n)
    if J is None:
        J, dJ = jordan_table(X, a, table)
    plain = []
    logr = []
    for d in np.flatnonzero(mu):
        F = w[d::d].sum()
        G = wl[d::d].sum()
        plain.append(J[d] * F * F)
        logr.append(2.0 * (dJ[d] * F * F - J[d] * F * G))
    return math.fsum(plain), a * math.fsum(logr)


def pair_sum(
    a: float,
    X: int,
    variant: str,
    table: PrimeTable,
    ctx: PrecisionContext = DEFAULT_CONTEXT,
    method: str = "divisor",
) -> PairSumResult:
    """Finite double sum over square-free m, n <= X.

    Args:
        a: exponent, any real a > 0.
        X: cutoff, at most ``table.limit``.
        variant: ``"plain"`` or ``"log-ratio"``.
        method: ``"divisor"`` (default, O(X log X)) or ``"direct"``.
    """
    _validate(a, X, variant, table)
    if method == "direct":
        value = pair_sum_direct(a, X, variant, table)
    elif method == "divisor":
        plain, logr = _divisor_sums(a, X, table)
        value = plain if variant == "plain" else logr
    else:
        raise UsageError(f"unknown pair-sum method {method!r}")
    return PairSumResult(value, X, a, variant)


def pair_sums_on_grid(a: float, X_grid, table: PrimeTable) -> dict[int, tuple[float, float]]:
    """(plain, log-ratio) at every X in the grid, sharing one Jordan table."""
    X_grid = sorted(set(int(x) for x in X_grid))
    J, dJ = jordan_table(X_grid[-1], a, table)
    return {X: _divisor_sums(a, X, table, J, dJ) for X in X_grid}


@dataclass(frozen=True)
class TailFit:
    """Least-squares fit of log R(X) against log X.

    ``residuals`` already include ``reference_error``, the change of the
    stand-in infinite sum between reference_X/2 and reference_X.
    """

    variant: str
    a: float
    X_grid: tuple
    residuals: tuple
    slope: float
    slope_stderr: float
    reference_X: int
    reference_value: float
    reference_error: float
    intercept: float = field(default=0.0)

    def envelope(self, X: float) -> float:
        """Extrapolated residual C X^slope, C the largest grid coefficient."""
        C = max(r * x ** (-self.slope) for x, r in zip(self.X_grid, self.residuals))
        return C * X**self.slope


def tail_fit(
    a: float,
    variant: str,
    X_grid,
    reference_X: int | None,
    table: PrimeTable,
    ctx: PrecisionContext = DEFAULT_CONTEXT,
) -> TailFit:
    """Fit the decay of R(X) = |S(reference_X) - S(X)| over ``X_grid``.

    Raises:
        UsageError: fewer than 4 grid points, or a reference cutoff below
            16 times the largest grid point.
    """
    if variant not in VARIANTS:
        raise UsageError(f"unknown variant {variant!r}")
    X_grid = sorted(set(int(x) for x in X_grid))
    if len(X_grid) < 4:
        raise UsageError("tail_fit needs at least 4 grid points")
    if reference_X is None:
        reference_X = 16 * X_grid[-1]
    if reference_X < 16 * X_grid[-1]:
        raise UsageError("reference_X must be at least 16 times the largest grid point")
    if reference_X > table.limit:
        raise UsageError(f"reference_X={reference_X} exceeds table limit {table.limit}")
    k = 0 if variant == "plain" else 1
    sums = pair_sums_on_grid(a, X_grid + [reference_X // 2, reference_X], table)
    ref = sums[reference_X][k]
    ref_err = abs(ref - sums[reference_X // 2][k])
    R = np.array([abs(ref - sums[X][k]) + ref_err for X in X_grid])
    lx = np.log(np.array(X_grid, dtype=float))
    ly = np.log(R)
    A = np.vstack([lx, np.ones_like(lx)]).T
    coef, res, *_ = np.linalg.lstsq(A, ly, rcond=None)
    dof = len(X_grid) - 2
    resid = ly - A @ coef
    sigma2 = float(resid @ resid) / dof
    cov = sigma2 * np.linalg.inv(A.T @ A)
    return TailFit(
        variant=variant,
        a=a,
        X_grid=tuple(X_grid),
        residuals=tuple(float(r) for r in R),
        slope=float(coef[0]),
        slope_stderr=float(math.sqrt(cov[0, 0])),
        reference_X=reference_X,
        reference_value=float(ref),
        reference_error=float(ref_err),
        intercept=float(coef[1]),
    )
