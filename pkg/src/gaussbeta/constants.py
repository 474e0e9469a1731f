"""Constants of the Gaussian interpolation error bounds.

Two families are covered: the scattered-data bound on a cube (constants
``c``, ``C``, ``delta_n``, ``delta_0`` and the scale factor ``Delta''``) and
the evenly-spaced bound on a simplex (``c1``, ``c2``, ``c3``, ``delta_0`` and
its own ``Delta''``).  Anything containing ``exp(2*n*gamma_n)`` or worse is
returned as a :class:`LogScalar`; already at ``n = 2`` those overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from gaussbeta.errors import DomainError, InfeasibleConfigurationError
from gaussbeta.logscalar import LogScalar

MAX_DIMENSION = 64

# rho = sqrt(3)/e appears in both Delta'' variants and in C.
RHO = math.sqrt(3.0) / math.e
LOG_RHO = 0.5 * math.log(3.0) - 1.0

# rho_3**4 * 3**3 * 2**7 = 12 e^2 beta^2 * 3456; 12 * 3456 = 41472.
EVEN_C2_FACTOR = 41472

_LOG_2PI = math.log(2.0 * math.pi)


def _check_dimension(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"dimension must be a positive integer, got {n!r}")


def _check_positive(name, value):
    if not (value > 0 and math.isfinite(value)):
        raise DomainError(f"{name} must be positive and finite, got {value!r}")


def gamma(n: int) -> int:
    """gamma_1 = 2, gamma_n = 2 n (1 + gamma_{n-1}); exact integers."""
    _check_dimension(n)
    if n > MAX_DIMENSION:
        raise DomainError(f"gamma_n is only supported for n <= {MAX_DIMENSION}, got {n}")
    g = 2
    for k in range(2, n + 1):
        g = 2 * k * (1 + g)
    return g


def _gamma_half_integer_plus_one(n):
    # Gamma(n/2 + 1) from factorials: (n/2)! for even n,
    # n!! * sqrt(pi) / 2**((n+1)/2) for odd n.
    if n % 2 == 0:
        return float(math.factorial(n // 2))
    double_fact = 1
    for k in range(n, 0, -2):
        double_fact *= k
    return double_fact * math.sqrt(math.pi) / 2.0 ** ((n + 1) // 2)


def unit_ball_volume(n: int) -> float:
    """Volume of the unit ball in R^n."""
    _check_dimension(n)
    return math.pi ** (n / 2.0) / _gamma_half_integer_plus_one(n)


def delta_pp_thm22(n: int) -> float:
    """Delta'' of the scattered-data (cube) bound."""
    _check_dimension(n)
    root = math.sqrt(n * unit_ball_volume(n))
    if n % 2 == 0:
        return math.pi ** ((n - 1) / 4.0) * root * 2.0 ** ((n + 1) / 4.0) * RHO ** ((n - 2) / 4.0)
    return math.pi ** (n / 4.0) * root * RHO ** ((n - 1) / 4.0)


def delta_pp_thm27(n: int) -> float:
    """Delta'' of the evenly-spaced (simplex) bound."""
    _check_dimension(n)
    root = math.sqrt(n * unit_ball_volume(n))
    if n % 2 == 0:
        return math.pi ** ((n - 1) / 4.0) * root * 2.0 ** ((n + 1) / 4.0) * RHO ** ((n - 2) / 4.0)
    return (
        math.sqrt(2.0 + 1.0 / math.e)
        * math.pi ** ((n - 1) / 4.0)
        * root
        * 2.0 ** (n / 4.0)
        * RHO ** ((n - 1) / 4.0)
    )


def log_C_thm22(n: int, b0: float, beta: float) -> LogScalar:
    """C = (3^(3/4) e sqrt(2 rho beta) sqrt(n) e^(2 n gamma_n))^4 b0^3 gamma_n.

    Expanded as 27 e^4 (4 rho^2 beta^2) n^2 e^(8 n gamma_n) b0^3 gamma_n and
    summed in log domain.
    """
    _check_positive("b0", b0)
    _check_positive("beta", beta)
    g = gamma(n)
    log_c = (
        math.log(27.0)
        + 4.0
        + math.log(4.0)
        + 2.0 * LOG_RHO
        + 2.0 * math.log(beta)
        + 2.0 * math.log(n)
        + 8.0 * n * g
        + 3.0 * math.log(b0)
        + math.log(g)
    )
    return LogScalar(log_c)


def c_thm22(n: int, b0: float) -> float:
    _check_positive("b0", b0)
    return b0 / (8 * gamma(n))


def delta_n(n: int, b0: float) -> float:
    """Upper limit on delta that does not depend on beta (cube bound)."""
    _check_positive("b0", b0)
    g = gamma(n)
    if n <= 2:
        return b0 / (2 * g)
    if n % 2 == 1:
        return b0 / (2 * g * (n - 1))
    return b0 / (2 * g * (n - 2))


def log_delta0_thm22(n: int, b0: float, beta: float) -> LogScalar:
    # The first branch, read literally, is 1/C.
    return LogScalar.min(log_C_thm22(n, b0, beta).reciprocal(), LogScalar.from_value(delta_n(n, b0)))


def log_c2_thm27(b0: float, beta: float) -> LogScalar:
    _check_positive("b0", b0)
    _check_positive("beta", beta)
    return LogScalar(math.log(EVEN_C2_FACTOR) + 2.0 + 2.0 * math.log(beta) + 3.0 * math.log(b0))


def log_delta0_thm27(b0: float, beta: float) -> LogScalar:
    return LogScalar.min(LogScalar.from_value(b0), log_c2_thm27(b0, beta).reciprocal())


def c1_c2_c3_thm27(n: int, b0: float, beta: float) -> tuple[float, LogScalar, float]:
    _check_positive("b0", b0)
    c1 = delta_pp_thm27(n) / math.sqrt(16.0 * math.pi) / math.sqrt(b0)
    return c1, log_c2_thm27(b0, beta), b0 / 4.0


def log_beta0_scattered(n: int, b0: float, delta: float) -> LogScalar:
    """Largest beta allowed by delta <= delta_0 for the cube bound.

    beta_0 = 1 / (3^(3/2) 2 rho n e^(4 n gamma_n + 2) b0^(3/2) sqrt(gamma_n) sqrt(delta))
    """
    _check_positive("b0", b0)
    _check_positive("delta", delta)
    g = gamma(n)
    log_denominator = (
        1.5 * math.log(3.0)
        + math.log(2.0)
        + LOG_RHO
        + math.log(n)
        + (4.0 * n * g + 2.0)
        + 1.5 * math.log(b0)
        + 0.5 * math.log(g)
        + 0.5 * math.log(delta)
    )
    return LogScalar(-log_denominator)


def beta0_evenly_spaced(b0: float, delta: float) -> float:
    """Largest beta allowed by delta <= delta_0 for the simplex bound."""
    _check_positive("b0", b0)
    _check_positive("delta", delta)
    if delta > b0:
        raise InfeasibleConfigurationError("delta", "b0", b0)
    return 1.0 / (144.0 * math.sqrt(2.0) * math.e * b0**1.5 * math.sqrt(delta))


def admissible_degrees(b0: float, delta: float) -> range:
    """Integers l with b0/delta <= l <= 2 b0/delta.

    The simplex bound needs evenly spaced centers of degree l - 1 for each
    such l.
    """
    _check_positive("b0", b0)
    _check_positive("delta", delta)
    lo = math.ceil(b0 / delta - 1e-12)
    hi = math.floor(2.0 * b0 / delta + 1e-12)
    return range(lo, hi + 1)


@dataclass(frozen=True)
class BoundConstants:
    n: int
    b0: float
    beta: float
    gamma_n: int
    alpha_n: float
    delta_pp_22: float
    delta_pp_27: float
    c_22: float
    log_C_22: LogScalar
    delta_n: float
    log_delta0_22: LogScalar
    c1_27: float
    log_c2_27: LogScalar
    c3_27: float
    log_delta0_27: LogScalar

    def as_dict(self) -> dict:
        """Flat mapping with log-domain fields under a ``log_`` prefix."""
        out = {}
        for key, value in self.__dict__.items():
            if isinstance(value, LogScalar):
                name = key if key.startswith("log_") else f"log_{key}"
                out[name] = value.log_value
            else:
                out[key] = value
        return out


def bound_constants(n: int, b0: float, beta: float) -> BoundConstants:
    c1, log_c2, c3 = c1_c2_c3_thm27(n, b0, beta)
    return BoundConstants(
        n=n,
        b0=b0,
        beta=beta,
        gamma_n=gamma(n),
        alpha_n=unit_ball_volume(n),
        delta_pp_22=delta_pp_thm22(n),
        delta_pp_27=delta_pp_thm27(n),
        c_22=c_thm22(n, b0),
        log_C_22=log_C_thm22(n, b0, beta),
        delta_n=delta_n(n, b0),
        log_delta0_22=log_delta0_thm22(n, b0, beta),
        c1_27=c1,
        log_c2_27=log_c2,
        c3_27=c3,
        log_delta0_27=log_delta0_thm27(b0, beta),
    )
