"""Optimal shape parameter selection for Gaussian RBF interpolation.

The package evaluates the explicit constants of the exponential error bounds
for Gaussian h-spline interpolation, minimizes the resulting MN objective over
the shape parameter ``beta``, and checks the predictions empirically with a
small interpolation engine.
"""

from gaussbeta.errors import (
    DomainError,
    HypothesisViolationError,
    InfeasibleConfigurationError,
)
from gaussbeta.logscalar import LogScalar
from gaussbeta.constants import BoundConstants, bound_constants, gamma
from gaussbeta.mn_criteria import (
    AdvisorResult,
    Criterion,
    MNCurve,
    ProblemConfig,
    Space,
    advise,
    closed_form_minimizer,
    log_mn,
    mn_curve,
    numeric_minimizer,
)
from gaussbeta.interpolation import Interpolant, SolveReport, build, evaluate

__all__ = [
    "AdvisorResult",
    "BoundConstants",
    "Criterion",
    "DomainError",
    "HypothesisViolationError",
    "InfeasibleConfigurationError",
    "Interpolant",
    "LogScalar",
    "MNCurve",
    "ProblemConfig",
    "SolveReport",
    "Space",
    "advise",
    "bound_constants",
    "build",
    "closed_form_minimizer",
    "evaluate",
    "gamma",
    "log_mn",
    "mn_curve",
    "numeric_minimizer",
]

__version__ = "0.1.0"
