"""Extended-precision and float64 kernels for zeta and related objects."""

from .precision import DEFAULT_CONTEXT, MathConstants, PrecisionContext, constants
from .zeta import (
    ZetaEvalConfig,
    functional_equation_residual,
    gamma,
    zeta,
    zeta_array,
    zeta_deriv_real,
)
from .riemann_siegel import hardy_z, riemann_siegel_theta, zeta_critical_rs
from .dirichlet import approx_error, approx_error_array, inv_zeta, inv_zeta_poly, mollifier_length

__all__ = [
    "DEFAULT_CONTEXT",
    "MathConstants",
    "PrecisionContext",
    "ZetaEvalConfig",
    "approx_error",
    "approx_error_array",
    "inv_zeta",
    "constants",
    "functional_equation_residual",
    "gamma",
    "hardy_z",
    "inv_zeta_poly",
    "mollifier_length",
    "riemann_siegel_theta",
    "zeta",
    "zeta_array",
    "zeta_critical_rs",
    "zeta_deriv_real",
]
