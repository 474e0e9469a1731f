"""MN objective functions and the shape-parameter advisor.

Every MN function has the form ``beta**a * exp(E(beta))`` where the exponent
``a`` comes from the density criterion and ``E`` from the function space:

* scattered data on a cube:   ``a = b0 / (4 gamma_n delta)``
* evenly spaced on a simplex: ``a = b0 / (2 delta)``
* band-limited ``B_sigma``:   ``E = sigma**2 / (8 beta)``
* ``G_sigma``:                ``E = sigma**2 / (864 beta**3)`` (half the sup exponent)

In ``u = ln(beta)`` the log of MN is ``a*u + k*exp(-p*u)`` with ``k, p > 0``,
which is strictly convex.  That gives closed-form minimizers and lets the
feasibility cap ``beta_0`` be applied by clamping.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from gaussbeta import constants
from gaussbeta.errors import DomainError, InfeasibleConfigurationError

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


class Space(str, enum.Enum):
    BAND_LIMITED = "B"
    GAUSSIAN_CUBIC = "G"


class Criterion(str, enum.Enum):
    SCATTERED = "scattered"
    EVENLY_SPACED = "evenly-spaced"


@dataclass(frozen=True)
class ProblemConfig:
    n: int
    b0: float
    delta: float
    sigma: float
    space: Space = Space.BAND_LIMITED
    criterion: Criterion = Criterion.SCATTERED

    def __post_init__(self):
        try:
            object.__setattr__(self, "space", Space(self.space))
            object.__setattr__(self, "criterion", Criterion(self.criterion))
        except ValueError as exc:
            raise DomainError(str(exc)) from exc
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n!r}")
        if self.n > constants.MAX_DIMENSION:
            raise DomainError(f"n must be <= {constants.MAX_DIMENSION}, got {self.n}")
        for name in ("b0", "delta", "sigma"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise DomainError(f"{name} must be positive and finite, got {value!r}")

    def check_feasible(self):
        """Raise InfeasibleConfigurationError if delta exceeds its cap."""
        if self.criterion is Criterion.SCATTERED:
            cap = constants.delta_n(self.n, self.b0)
            if self.delta > cap:
                raise InfeasibleConfigurationError("delta", "delta_n", cap)
        elif self.delta > self.b0:
            raise InfeasibleConfigurationError("delta", "b0", self.b0)

    @property
    def exponent(self) -> float:
        """The power ``a`` of beta in MN."""
        if self.criterion is Criterion.SCATTERED:
            return self.b0 / (4 * constants.gamma(self.n) * self.delta)
        return self.b0 / (2.0 * self.delta)

    @property
    def _penalty(self):
        # (k, p) with E(beta) = k * beta**-p
        if self.space is Space.BAND_LIMITED:
            return self.sigma**2 / 8.0, 1
        return self.sigma**2 / 864.0, 3


@dataclass(frozen=True)
class MNCurve:
    betas: np.ndarray
    log_mn: np.ndarray
    exponent_a: float

    @property
    def samples(self):
        return list(zip(self.betas.tolist(), self.log_mn.tolist()))


@dataclass(frozen=True)
class AdvisorResult:
    beta_unconstrained: float
    beta_star: float
    log_beta0: float
    clamped: bool
    log_mn_at_star: float
    # beta_star may underflow for scattered n >= 3; this stays exact.
    log_beta_star: float


def sup_exponent(sigma: float, beta: float) -> float:
    """max over t >= 0 of t**2/(4 beta) - t**3/sigma, attained at t = sigma/(6 beta)."""
    if not (sigma > 0 and beta > 0):
        raise DomainError("sigma and beta must be positive")
    return sigma**2 / (432.0 * beta**3)


def sup_exponent_grid(sigma: float, beta: float, points: int = 1_000_000) -> float:
    """Brute-force maximization of t**2/(4 beta) - t**3/sigma on [0, 10 sigma/beta]."""
    t = np.linspace(0.0, 10.0 * sigma / beta, points)
    return float(np.max(t * t / (4.0 * beta) - t**3 / sigma))


def _log_mn_u(config, u):
    k, p = config._penalty
    try:
        return config.exponent * u + k * math.exp(-p * u)
    except OverflowError:
        return math.inf


def log_mn(config: ProblemConfig, beta: float, *, sup_oracle: bool = False) -> float:
    """Natural log of MN(beta) for the given configuration.

    With ``sup_oracle`` the G_sigma term is obtained from the grid search
    instead of the closed form.
    """
    if not beta > 0:
        raise DomainError(f"beta must be positive, got {beta!r}")
    if sup_oracle and config.space is Space.GAUSSIAN_CUBIC:
        return config.exponent * math.log(beta) + 0.5 * sup_exponent_grid(config.sigma, beta)
    return _log_mn_u(config, math.log(beta))


def log_mn_difference(config: ProblemConfig, beta1: float, beta2: float) -> float:
    """log MN(beta1) - log MN(beta2) without cancellation between large terms."""
    k, p = config._penalty
    u1, u2 = math.log(beta1), math.log(beta2)
    du = u1 - u2
    return config.exponent * du + k * math.exp(-p * u2) * math.expm1(-p * du)


def closed_form_minimizer(config: ProblemConfig) -> float:
    a = config.exponent
    if config.space is Space.BAND_LIMITED:
        return config.sigma**2 / (8.0 * a)
    return (config.sigma**2 / (288.0 * a)) ** (1.0 / 3.0)


def golden_section(diff, lo, hi, tol=1e-10, max_iter=500):
    """Golden-section search for the minimizer of a unimodal function on [lo, hi].

    ``diff(x, y)`` must return ``f(x) - f(y)``; taking the difference directly
    keeps the comparison accurate when ``f`` is large and flat near its
    minimum.
    """
    a, b = lo, hi
    x1 = b - INVPHI * (b - a)
    x2 = a + INVPHI * (b - a)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if diff(x1, x2) <= 0:
            b, x2 = x2, x1
            x1 = b - INVPHI * (b - a)
        else:
            a, x1 = x1, x2
            x2 = a + INVPHI * (b - a)
    x = 0.5 * (a + b)
    # convexity: if the minimizer sits outside the bracket, an endpoint wins
    if diff(lo, x) < 0:
        return lo
    if diff(hi, x) < 0:
        return hi
    return x


def numeric_minimizer(config: ProblemConfig, beta_lo: float, beta_hi: float) -> float:
    """Golden-section minimization of log MN over ln(beta) in [ln beta_lo, ln beta_hi]."""
    if not 0 < beta_lo < beta_hi:
        raise DomainError(f"need 0 < beta_lo < beta_hi, got [{beta_lo!r}, {beta_hi!r}]")
    for endpoint in (beta_lo, beta_hi):
        if not math.isfinite(log_mn(config, endpoint)):
            raise DomainError(f"log MN is not finite at bracket endpoint {endpoint!r}")

    def diff(u1, u2):
        return log_mn_difference(config, math.exp(u1), math.exp(u2))

    u_lo, u_hi = math.log(beta_lo), math.log(beta_hi)
    u = golden_section(diff, u_lo, u_hi)
    if u == u_lo:
        return beta_lo
    if u == u_hi:
        return beta_hi
    return math.exp(u)


def log_beta0(config: ProblemConfig) -> float:
    if config.criterion is Criterion.SCATTERED:
        return constants.log_beta0_scattered(config.n, config.b0, config.delta).log_value
    return math.log(constants.beta0_evenly_spaced(config.b0, config.delta))


def advise(config: ProblemConfig) -> AdvisorResult:
    """Optimal beta on (0, beta_0] for the configuration.

    log MN decreases left of the unconstrained minimizer, so the constrained
    optimum is whichever of the two is smaller.
    """
    config.check_feasible()
    beta_unc = closed_form_minimizer(config)
    log_cap = log_beta0(config)
    log_unc = math.log(beta_unc)
    clamped = log_unc > log_cap
    if clamped:
        log_star = log_cap
        beta_star = math.exp(log_cap)
    else:
        log_star = log_unc
        beta_star = beta_unc
    log_mn_star = _log_mn_u(config, log_star)
    return AdvisorResult(
        beta_unconstrained=beta_unc,
        beta_star=beta_star,
        log_beta0=log_cap,
        clamped=clamped,
        log_mn_at_star=log_mn_star,
        log_beta_star=log_star,
    )


def mn_curve(config: ProblemConfig, beta_min: float, beta_max: float, count: int) -> MNCurve:
    if not 0 < beta_min < beta_max:
        raise DomainError(f"need 0 < beta_min < beta_max, got [{beta_min!r}, {beta_max!r}]")
    if count < 2:
        raise DomainError(f"count must be at least 2, got {count}")
    betas = np.geomspace(beta_min, beta_max, count)
    values = np.array([log_mn(config, float(b)) for b in betas])
    if not np.all(np.isfinite(values)):
        raise DomainError("log MN is not finite on the requested range")
    return MNCurve(betas=betas, log_mn=values, exponent_a=config.exponent)
