"""Beta-function integral identities and the beta/arcsine distribution on [r1, r2]."""

from .distribution import GeneralizedBetaDist, MomentTable, make_dist
from .errors import ConvergenceError, DomainError, UnsupportedCaseError
from .params import ShapeParams, SupportInterval
from .quadrature import QuadratureEstimate, integrate
from .special import (
    beta,
    gamma_half_integer,
    inv_reg_inc_beta,
    log_beta,
    log_gamma,
    reg_inc_beta,
)

__version__ = "0.1.0"

__all__ = [
    "GeneralizedBetaDist",
    "MomentTable",
    "make_dist",
    "ConvergenceError",
    "DomainError",
    "UnsupportedCaseError",
    "ShapeParams",
    "SupportInterval",
    "QuadratureEstimate",
    "integrate",
    "beta",
    "gamma_half_integer",
    "inv_reg_inc_beta",
    "log_beta",
    "log_gamma",
    "reg_inc_beta",
]
