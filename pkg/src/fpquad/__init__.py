"""Hadamard finite-part integrals on (0, inf) by double-exponential contour quadrature.

>>> from fpquad import FpProblem, compute_symmetric, get_integrand
>>> res = compute_symmetric(FpProblem(get_integrand("exp_decay"), n=1))
>>> round(res.value, 10)
-0.5772156649
"""

from .contour import Contour, check_contour, default_contour, scaled_contour
from .engine import (
    ErrorBoundParams,
    FpProblem,
    FpResult,
    QuadratureConfig,
    compute,
    compute_full,
    compute_symmetric,
    error_bound,
    error_bound_terms,
    term,
    truncation_should_stop,
)
from .exceptions import ContourError, FpQuadError, IntegrandError, NotConverged, OracleUnstable
from .integrands import BUILTIN_INTEGRANDS, EULER_GAMMA, Integrand, get_integrand
from .oracle import EpsilonSchedule, Extrapolation, exact_value, fp_by_definition, fp_oracle
from .transforms import DETransformKind, psi, psi_prime

__version__ = "0.1.0"
