"""Numerical study of int_T^{2T} |zeta(1/2+it) / zeta(1+iat)|^2 dt.

Submodules:

* :mod:`zetaratio.arithmetic` - primes, Moebius values, square-free support
* :mod:`zetaratio.kernel` - zeta, zeta', Gamma, Riemann-Siegel, 1/zeta polynomials
* :mod:`zetaratio.euler` - Euler-product constants with certified tails
* :mod:`zetaratio.pairsum` - square-free pair sums and tail fits
* :mod:`zetaratio.mollifier` - BCHB main term and the asymptotic prediction
* :mod:`zetaratio.quadrature` - adaptive panel quadrature of the moments
* :mod:`zetaratio.cli` - command-line tables
"""

from .arithmetic import PairIndex, PrimeTable, build_tables, log_gcd_lcm_pow, squarefree_upto
from .errors import AccuracyError, DomainError, PoleError, ResourceError, UsageError, ZetaRatioError
from .euler import EulerProductValue, d0, d0_tilde, d1
from .kernel import (
    PrecisionContext,
    ZetaEvalConfig,
    approx_error,
    constants,
    inv_zeta_poly,
    mollifier_length,
    zeta,
    zeta_deriv_real,
)
from .mollifier import MollifiedPrediction, MollifierCoeffs, bchb_main_term, mollifier_coeffs, theorem_prediction
from .pairsum import PairSumResult, TailFit, pair_sum, tail_fit
from .quadrature import (
    MomentEstimate,
    QuadratureConfig,
    error_term_scan,
    integrate_hl_baseline,
    integrate_ratio_moment,
)

__all__ = [
    "AccuracyError",
    "DomainError",
    "EulerProductValue",
    "MollifiedPrediction",
    "MollifierCoeffs",
    "MomentEstimate",
    "PairIndex",
    "PairSumResult",
    "PoleError",
    "PrecisionContext",
    "PrimeTable",
    "QuadratureConfig",
    "ResourceError",
    "TailFit",
    "UsageError",
    "ZetaEvalConfig",
    "ZetaRatioError",
    "approx_error",
    "bchb_main_term",
    "build_tables",
    "constants",
    "d0",
    "d0_tilde",
    "d1",
    "error_term_scan",
    "integrate_hl_baseline",
    "integrate_ratio_moment",
    "inv_zeta_poly",
    "log_gcd_lcm_pow",
    "mollifier_coeffs",
    "mollifier_length",
    "pair_sum",
    "squarefree_upto",
    "tail_fit",
    "theorem_prediction",
    "zeta",
    "zeta_deriv_real",
]

__version__ = "0.1.0"
