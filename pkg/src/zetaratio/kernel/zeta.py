"""Euler-Maclaurin evaluation of zeta(s), zeta'(sigma) and Gamma(z).

Two backends share one formula:

* mpmath, at the working precision of a :class:`PrecisionContext`, for
  scalar high-precision values;
* a numba float64 kernel for arrays, used by the quadrature code. Points
  close in ``t`` are grouped and the partial sum sum n^{-s} is Taylor
  expanded about the cluster centre, so one pass over n serves the whole
  cluster.

The series length is tied to |Im s| so that consecutive correction terms
shrink by a fixed ratio; see ``EM_RATIO_MP`` and ``EM_RATIO_FLOAT``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import mpmath
import numba
import numpy as np
from mpmath import mpc, mpf

from ..errors import AccuracyError, DomainError, PoleError, UsageError
from .precision import DEFAULT_CONTEXT, PrecisionContext
from .riemann_siegel import RS_MIN_T, zeta_critical_rs

METHODS = ("euler-maclaurin", "riemann-siegel")

# |s|/(2 pi N) at the auto series length; correction terms decay like its square
EM_RATIO_MP = 0.5
EM_RATIO_FLOAT = 0.8
EM_MIN_TERMS = 50
FLOAT_MAX_ORDER = 80
# float64 cluster radius in units of 1/log N
TAYLOR_RADIUS = 2.0


@dataclass(frozen=True)
class ZetaEvalConfig:
    """Kernel choice for zeta evaluations.

    Attributes:
        method: ``"euler-maclaurin"`` or ``"riemann-siegel"``. The latter is
            only legal on the critical line with |t| >= 10.
        em_terms: series length N; ``None`` picks it from |Im s|.
        em_order: maximum number of Bernoulli correction terms; ``None``
            means "as many as the target tolerance needs".
        rs_corrections: Riemann-Siegel remainder terms C_0.. (1 to 5).
    """

    method: str = "euler-maclaurin"
    em_terms: Optional[int] = None
    em_order: Optional[int] = None
    rs_corrections: int = 5

    def __post_init__(self):
        aliases = {"em": "euler-maclaurin", "rs": "riemann-siegel"}
        object.__setattr__(self, "method", aliases.get(self.method, self.method))
        if self.method not in METHODS:
            raise UsageError(f"unknown zeta method {self.method!r}")
        if self.em_terms is not None and self.em_terms < 2:
            raise UsageError("em_terms must be >= 2")
        if self.em_order is not None and self.em_order < 0:
            raise UsageError("em_order must be >= 0")


EM = ZetaEvalConfig()
RS = ZetaEvalConfig(method="riemann-siegel")


def auto_terms(t: float, ratio: float) -> int:
    return max(EM_MIN_TERMS, int(math.ceil(abs(t) / (2 * math.pi * ratio))) + 30)


@lru_cache(maxsize=8)
def _bernoulli_ratios_mp(kmax: int, dps: int):
    with mpmath.workdps(dps):
        return [mpmath.bernoulli(2 * k) / mpmath.factorial(2 * k) for k in range(1, kmax + 1)]


@lru_cache(maxsize=1)
def _bernoulli_ratios_float() -> np.ndarray:
    with mpmath.workdps(30):
        return np.array(
            [float(mpmath.bernoulli(2 * k) / mpmath.factorial(2 * k)) for k in range(1, FLOAT_MAX_ORDER + 2)]
        )


def _as_mpc(s) -> mpc:
    return mpmath.mpmathify(s) if isinstance(s, (mpf, mpc)) else mpc(complex(s))


def _check_finite(z, what):
    if not (mpmath.isfinite(z.real) and mpmath.isfinite(z.imag)):
        raise AccuracyError(f"non-finite value for {what}")
    return z


def _em_mp(s: mpc, N: int, kmax: int, tol: mpf, deriv: bool = False):
    """Euler-Maclaurin zeta(s) (or zeta'(s)) with N terms at current precision.

    Returns (value, error estimate).
    """
    one = mpf(1)
    logs = [mpmath.log(n) for n in range(1, N + 1)]
    if deriv:
        total = -mpmath.fsum(logs[n - 1] * mpmath.exp(-s * logs[n - 1]) for n in range(2, N))
    else:
        total = mpmath.fsum(mpmath.exp(-s * logs[n - 1]) for n in range(1, N))
    logN = logs[N - 1]
    Ns = mpmath.exp(-s * logN)
    if deriv:
        total += -logN * N * Ns / (s - 1) - N * Ns / (s - 1) ** 2 - logN * Ns / 2
    else:
        total += N * Ns / (s - 1) + Ns / 2
    bern = _bernoulli_ratios_mp(kmax + 1, mpmath.mp.dps)
    # poch = s (s+1) ... (s+2k-2), dpoch its s-derivative
    poch = s
    dpoch = one
    NN = mpf(N) ** 2
    scale = Ns / N
    err = None
    for k in range(1, kmax + 2):
        if deriv:
            term = bern[k - 1] * (dpoch - logN * poch) * scale
        else:
            term = bern[k - 1] * poch * scale
        if k == kmax + 1:
            err = abs(term) * abs(s + 2 * k - 1) / max(s.real + 2 * k - 1, one)
            break
        total += term
        if abs(term) < tol * 1e-3 * max(one, abs(total)):
            err = abs(term)
            break
        a1, a2 = s + 2 * k - 1, s + 2 * k
        dpoch = dpoch * a1 * a2 + poch * (a1 + a2)
        poch = poch * a1 * a2
        scale = scale / NN
    return total, err


def zeta(s, cfg: ZetaEvalConfig = EM, ctx: PrecisionContext = DEFAULT_CONTEXT) -> mpc:
    """zeta(s) for complex s != 1.

    Args:
        s: complex point (python or mpmath number).
        cfg: kernel selection; Riemann-Siegel requires Re s = 1/2, |t| >= 10.
        ctx: precision policy; ``ctx.is_float`` routes to the float64 kernel.

    Returns:
        mpmath ``mpc``.

    Raises:
        PoleError: at s = 1.
        DomainError: Riemann-Siegel requested off its domain.
        AccuracyError: the configured series cannot reach ``ctx.tol``.
    """
    s = _as_mpc(s)
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    if cfg.method == "riemann-siegel":
        if s.real != 0.5 or abs(s.imag) < RS_MIN_T:
            raise DomainError("Riemann-Siegel is only valid on Re s = 1/2 with |t| >= 10")
        z = zeta_critical_rs(float(s.imag), cfg.rs_corrections)[0]
        return mpc(z.real, z.imag)
    if ctx.is_float:
        z = zeta_array(np.array([complex(s)]), cfg, tol=ctx.tol)[0]
        return mpc(z.real, z.imag)
    with ctx.workdps():
        N = cfg.em_terms or auto_terms(float(s.imag), EM_RATIO_MP)
        kmax = cfg.em_order if cfg.em_order is not None else 2 * ctx.dps + 20
        value, err = _em_mp(s, N, kmax, mpf(ctx.tol))
        if err > ctx.tol:
            raise AccuracyError(
                f"Euler-Maclaurin error estimate {mpmath.nstr(err, 3)} exceeds tol {ctx.tol:g}"
                f" (N={N}, order={kmax})",
                estimate=float(err),
            )
        return _check_finite(+value, f"zeta({s})")


def zeta_deriv_real(sigma, ctx: PrecisionContext = DEFAULT_CONTEXT) -> mpf:
    """zeta'(sigma) = -sum log n / n^sigma for real sigma > 1."""
    if not sigma > 1:
        raise DomainError(f"zeta_deriv_real needs sigma > 1, got {sigma}")
    with mpmath.workdps(max(ctx.dps, 25)):
        value, err = _em_mp(mpc(mpmath.mpmathify(sigma)), EM_MIN_TERMS, 2 * ctx.dps + 20, mpf(ctx.tol), deriv=True)
        if err > ctx.tol:
            raise AccuracyError(f"zeta' error estimate {float(err):.3g} exceeds tol", estimate=float(err))
        return value.real


def gamma(z, ctx: PrecisionContext = DEFAULT_CONTEXT) -> mpc:
    """Gamma(z) by the Stirling series after shifting Re z to the right.

    Reflection handles Re z < 1/2.
    """
    with ctx.workdps():
        z = _as_mpc(z)
        if z.real < 0.5:
            return mpmath.pi / (mpmath.sin(mpmath.pi * z) * gamma(1 - z, ctx))
        # |w| >= R keeps the Stirling terms below 10^-dps before they diverge
        R = 1.2 * ctx.dps
        shift = 0
        prod = mpc(1)
        w = z
        while abs(w) < R:
            prod *= w
            w += 1
            shift += 1
        lg = (w - mpf(0.5)) * mpmath.log(w) - w + mpmath.log(2 * mpmath.pi) / 2
        eps = mpf(10) ** (-ctx.dps)
        wpow = w
        w2 = w * w
        for k in range(1, 4 * ctx.dps):
            term = mpmath.bernoulli(2 * k) / (2 * k * (2 * k - 1) * wpow)
            lg += term
            if abs(term) < eps:
                break
            wpow *= w2
        return mpmath.exp(lg) / prod


def functional_equation_residual(s, cfg: ZetaEvalConfig = EM, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """|zeta(s) - 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)|."""
    s = _as_mpc(s)
    with ctx.workdps():
        lhs = zeta(s, cfg, ctx)
        rhs = 2**s * mpmath.pi ** (s - 1) * mpmath.sin(mpmath.pi * s / 2) * gamma(1 - s, ctx) * zeta(1 - s, cfg, ctx)
        return abs(lhs - rhs)


# ---------------------------------------------------------------- float64 kernel


@numba.njit(cache=True)
def _em_float_clusters(sig, t, starts, Ns, centres, radii, logn, bern, kmax, tol, out, err):
    """Evaluate zeta at sorted points grouped into clusters [starts[c], starts[c+1])."""
    nclus = starts.shape[0] - 1
    for c in range(nclus):
        lo = starts[c]
        hi = starts[c + 1]
        N = Ns[c]
        sigma = sig[lo]
        tc = centres[c]
        radius = radii[c]
        L = logn[N - 1]
        # Taylor degree: (radius L)^(K+1)/(K+1)! below 1e-17
        x = radius * L
        K = 0
        bound = x
        while bound > 1e-17 and K < 60:
            K += 1
            bound *= x / (K + 1)
        Mr = np.zeros(K + 1)
        Mi = np.zeros(K + 1)
        inv = np.empty(K + 1)
        for k in range(K + 1):
            inv[k] = 1.0 / (k + 1)
        absum = 0.0
        sqsum = 0.0
        for n in range(1, N):
            ln = logn[n - 1]
            mag = math.exp(-sigma * ln)
            absum += mag
            sqsum += mag * mag
            ph = tc * ln
            wr = mag * math.cos(ph)
            wi = -mag * math.sin(ph)
            for k in range(K + 1):
                Mr[k] += wr
                Mi[k] += wi
                # w *= -i ln / (k + 1)
                f = ln * inv[k]
                wr, wi = wi * f, -wr * f
        for i in range(lo, hi):
            d = t[i] - tc
            pr = 0.0
            pi_ = 0.0
            for k in range(K, -1, -1):
                pr = pr * d + Mr[k]
                pi_ = pi_ * d + Mi[k]
            part = complex(pr, pi_)
            s = complex(sigma, t[i])
            Ns_ = complex(math.exp(-sigma * L) * math.cos(t[i] * L), -math.exp(-sigma * L) * math.sin(t[i] * L))
            total = part + N * Ns_ / (s - 1.0) + 0.5 * Ns_
            # ps = s (s+1) ... (s+2k-2) N^(-s-2k+1), updated as one product
            ps = s * Ns_ / N
            NN = float(N) * float(N)
            last = 0.0
            for k in range(1, kmax + 1):
                term = bern[k - 1] * ps
                total += term
                last = abs(term)
                if last < 1e-17 * max(1.0, abs(total)):
                    break
                ps = ps * ((s + 2 * k - 1) * (s + 2 * k) / NN)
            out[i] = total
            # truncation + summation rounding + phase rounding (random-sign rms)
            err[i] = last + 4e-16 * absum + 2e-16 * abs(t[i]) * L * math.sqrt(sqsum)


@numba.njit(cache=True)
def _make_clusters(sig, t, ratio, fixed_N, min_terms, radius_units):
    """Group sorted points into fixed cells so each value depends on its own t only.

    N is constant on bands of 32 terms in |t|; inside a band, cells of width
    2 radius_units / log N sit on a global grid and carry their own centre.
    """
    n = t.shape[0]
    starts = np.empty(n + 1, dtype=np.int64)
    Ns = np.empty(n, dtype=np.int64)
    centres = np.empty(n)
    radii = np.empty(n)
    nc = 0
    prev_N = -1
    prev_cell = 0
    for i in range(n):
        if fixed_N > 0:
            N = fixed_N
        else:
            m = int(math.ceil(abs(t[i]) / (2 * math.pi * ratio)))
            N = max(min_terms, 32 * ((m + 31) // 32) + 30)
        w = 2.0 * radius_units / math.log(N)
        cell = int(math.floor(t[i] / w))
        if i == 0 or N != prev_N or cell != prev_cell or sig[i] != sig[i - 1]:
            starts[nc] = i
            Ns[nc] = N
            centres[nc] = (cell + 0.5) * w
            radii[nc] = 0.5 * w
            nc += 1
            prev_N = N
            prev_cell = cell
    starts[nc] = n
    return starts[: nc + 1], Ns[:nc], centres[:nc], radii[:nc]


def zeta_array(s, cfg: ZetaEvalConfig = EM, tol: float = 1e-10, return_error: bool = False):
    """Vectorized float64 zeta(s) over an array of complex points.

    Euler-Maclaurin with nearby points sharing one Taylor-expanded partial
    sum; or, when ``cfg`` selects Riemann-Siegel, the critical-line formula.

    Raises:
        AccuracyError: when any pointwise error estimate exceeds ``tol``.
    """
    s = np.atleast_1d(np.asarray(s, dtype=complex))
    if np.any(s == 1):
        raise PoleError("zeta has a pole at s = 1")
    if cfg.method == "riemann-siegel":
        if np.any(s.real != 0.5):
            raise DomainError("Riemann-Siegel is only valid on Re s = 1/2")
        z = zeta_critical_rs(s.imag, cfg.rs_corrections)
        return (z, np.zeros(z.shape)) if return_error else z
    order = np.lexsort((s.imag, s.real))
    sig = np.ascontiguousarray(s.real[order])
    t = np.ascontiguousarray(s.imag[order])
    fixed = int(cfg.em_terms or 0)
    starts, Ns, centres, radii = _make_clusters(sig, t, EM_RATIO_FLOAT, fixed, EM_MIN_TERMS, TAYLOR_RADIUS)
    logn = np.log(np.arange(1, int(Ns.max()) + 1, dtype=float))
    kmax = FLOAT_MAX_ORDER if cfg.em_order is None else min(cfg.em_order, FLOAT_MAX_ORDER)
    out = np.empty(t.shape[0], dtype=complex)
    err = np.empty(t.shape[0])
    _em_float_clusters(sig, t, starts, Ns, centres, radii, logn, _bernoulli_ratios_float(), kmax, tol, out, err)
    if not np.all(np.isfinite(out)):
        raise AccuracyError("non-finite zeta value in float64 kernel")
    worst = float(err.max())
    if worst > tol:
        raise AccuracyError(f"float64 zeta error estimate {worst:.3g} exceeds tol {tol:g}", estimate=worst)
    result = np.empty_like(out)
    result[order] = out
    if return_error:
        e = np.empty_like(err)
        e[order] = err
        return result, e
    return result
