"""Test functions, norm computations, error bounds and beta sweeps.

Fourier transforms use the unitary convention
``f_hat(xi) = (2 pi)^(-1/2) * integral f(x) exp(-i x xi) dx`` so that
``integral |f_hat|^2 = ||f||_2^2`` holds with no extra factor; this is the
identity the norm transforms below rely on.  Under it the band-limited sinc
``sin(sigma x) / (pi x)`` has spectrum ``(2 pi)^(-1/2)`` on ``[-sigma, sigma]``.

Experiments are one-dimensional.
"""

from __future__ import annotations

import csv
import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate

from gaussbeta import constants as K
from gaussbeta.constants import BoundConstants, bound_constants
from gaussbeta.errors import DomainError, HypothesisViolationError
from gaussbeta.geometry import Simplex, evenly_spaced_nodes
from gaussbeta.interpolation import build, evaluate
from gaussbeta.mn_criteria import Criterion, ProblemConfig, Space, log_mn, sup_exponent

ILL_CONDITIONED = 1e14
EVAL_OVERSAMPLING = 20

_LOG_2PI = math.log(2.0 * math.pi)


class BoundVariant(str, enum.Enum):
    EQ5 = "Eq5"  # cube bound, native norm
    EQ6 = "Eq6"  # cube bound, B_sigma
    EQ7 = "Eq7"  # cube bound, G_sigma
    EQ8 = "Eq8"  # simplex bound, native norm
    EQ9 = "Eq9"  # simplex bound, B_sigma
    EQ10 = "Eq10"  # simplex bound, G_sigma


class NodeLayout(str, enum.Enum):
    EQUISPACED_GRID = "grid"
    SIMPLEX_EVEN = "simplex"


@dataclass(frozen=True)
class TestFunction:
    kind: str
    sigma: float
    evaluator: Callable
    spectrum: Callable
    dimension: int = 1

    __test__ = False  # not a pytest class

    def __call__(self, x):
        return self.evaluator(x)

    @property
    def l2_norm(self) -> float:
        """Closed form of ||f||_2 from Plancherel."""
        return math.sqrt(self.sigma / math.pi)


def sinc_band_limited(sigma: float) -> TestFunction:
    """f(x) = sin(sigma x) / (pi x) with f(0) = sigma / pi."""
    if not sigma > 0:
        raise DomainError(f"sigma must be positive, got {sigma!r}")
    height = 1.0 / math.sqrt(2.0 * math.pi)

    def f(x):
        # np.sinc(t) = sin(pi t) / (pi t) and is exact at t = 0
        return sigma / math.pi * np.sinc(sigma * np.asarray(x, dtype=float) / math.pi)

    def spectrum(xi):
        xi = np.asarray(xi, dtype=float)
        return np.where(np.abs(xi) <= sigma, height, 0.0)

    return TestFunction(kind="SincBandLimited", sigma=sigma, evaluator=f, spectrum=spectrum)


def l2_norm_quadrature(fn: TestFunction) -> float:
    """||f||_2 of the sinc by quadrature, independent of Plancherel.

    sin^2(s x) / (pi x)^2 = (1 - cos(2 s x)) / (2 pi^2 x^2); the finite part is
    integrated directly and the tail uses the Fourier-weighted QAWF rule.
    """
    s = fn.sigma
    cut = 50.0 * math.pi / s
    head, _ = integrate.quad(lambda x: float(fn(x)) ** 2, 0.0, cut, limit=500, epsabs=0, epsrel=1e-11)
    tail_smooth = 1.0 / (2.0 * math.pi**2 * cut)
    tail_osc, _ = integrate.quad(
        lambda x: 1.0 / (2.0 * math.pi**2 * x * x), cut, np.inf, weight="cos", wvar=2.0 * s
    )
    return math.sqrt(2.0 * (head + tail_smooth - tail_osc))


def _spectral_integral_log(sigma, spectrum, log_weight, log_shift):
    # log of integral_{-sigma}^{sigma} |spectrum|^2 exp(log_weight(xi)) dxi,
    # with exp(log_shift) factored out to avoid overflow
    def integrand(xi):
        return float(spectrum(xi)) ** 2 * math.exp(log_weight(xi) - log_shift)

    value, _ = integrate.quad(integrand, 0.0, sigma, epsabs=0, epsrel=1e-10, limit=500)
    return math.log(2.0 * value) + log_shift


def log_native_norm_bandlimited(sigma: float, beta: float, spectrum) -> float:
    """ln ||f||_h for f with spectrum supported in [-sigma, sigma] (even spectrum, 1D)."""
    if not (sigma > 0 and beta > 0):
        raise DomainError("sigma and beta must be positive")
    peak = sigma**2 / (4.0 * beta)
    log_int = _spectral_integral_log(sigma, spectrum, lambda xi: xi * xi / (4.0 * beta), peak)
    return -_LOG_2PI + 0.5 * log_int


def native_norm_bandlimited(sigma: float, beta: float, spectrum) -> float:
    """||f||_h = (2 pi)^-1 (integral |f_hat|^2 exp(xi^2 / (4 beta)) dxi)^(1/2)."""
    return math.exp(log_native_norm_bandlimited(sigma, beta, spectrum))


def log_g_norm(space_sigma: float, fn: TestFunction) -> float:
    """ln ||f||_{G_sigma} for a band-limited test function."""
    peak = fn.sigma**3 / space_sigma
    log_int = _spectral_integral_log(fn.sigma, fn.spectrum, lambda xi: abs(xi) ** 3 / space_sigma, peak)
    return 0.5 * log_int


def log_error_bound(config: ProblemConfig, consts: BoundConstants, norm, variant, *, log_norm=None) -> float:
    """Natural log of the right-hand side of the chosen error bound.

    ``norm`` is ||f||_h for Eq5/Eq8, ||f||_2 for Eq6/Eq9 and ||f||_{G_sigma}
    for Eq7/Eq10; the shape parameter is the one ``consts`` was built with.
    Pass ``log_norm`` instead when the norm overflows (||f||_h at small beta).
    """
    variant = BoundVariant(variant)
    if consts.n != config.n or consts.b0 != config.b0:
        raise DomainError("constants were built for a different (n, b0)")
    if log_norm is None:
        if not norm > 0:
            raise DomainError(f"norm must be positive, got {norm!r}")
        log_norm = math.log(norm)
    beta, delta, n = consts.beta, config.delta, config.n
    log_delta = math.log(delta)

    if variant in (BoundVariant.EQ5, BoundVariant.EQ6, BoundVariant.EQ7):
        if log_delta > consts.log_delta0_22.log_value:
            raise HypothesisViolationError("delta_0", consts.log_delta0_22.log_value, log_delta)
        core = math.log(consts.delta_pp_22) + consts.c_22 / delta * (consts.log_C_22.log_value + log_delta)
    else:
        if log_delta > consts.log_delta0_27.log_value:
            raise HypothesisViolationError("delta_0", consts.log_delta0_27.log_value, log_delta)
        core = (
            math.log(consts.c1_27)
            + 0.5 * log_delta
            + consts.c3_27 / delta * (consts.log_c2_27.log_value + log_delta)
        )

    if variant in (BoundVariant.EQ5, BoundVariant.EQ8):
        return core + log_norm
    if variant in (BoundVariant.EQ6, BoundVariant.EQ9):
        return core - n * _LOG_2PI + config.sigma**2 / (8.0 * beta) + log_norm
    return core - n * _LOG_2PI + 0.5 * sup_exponent(config.sigma, beta) + log_norm


def bound_variant_for(config: ProblemConfig) -> BoundVariant:
    if config.criterion is Criterion.SCATTERED:
        return BoundVariant.EQ6 if config.space is Space.BAND_LIMITED else BoundVariant.EQ7
    return BoundVariant.EQ9 if config.space is Space.BAND_LIMITED else BoundVariant.EQ10


@dataclass(frozen=True)
class SweepRow:
    beta: float
    empirical_sup_error: float
    log_mn: float
    log_bound: float
    flag: str = ""
    condition_estimate: float = math.nan
    max_node_residual: float = math.nan


@dataclass(frozen=True)
class ExperimentReport:
    config: ProblemConfig
    rows: list
    layout: NodeLayout = NodeLayout.EQUISPACED_GRID

    def __post_init__(self):
        if not self.rows:
            raise DomainError("an experiment report needs at least one row")
        betas = [r.beta for r in self.rows]
        if any(b2 <= b1 for b1, b2 in zip(betas, betas[1:])):
            raise DomainError("report betas must be strictly increasing")

    @property
    def argmin_empirical(self) -> float:
        return min(self.rows, key=lambda r: r.empirical_sup_error).beta

    @property
    def argmin_mn(self) -> float:
        return min(self.rows, key=lambda r: r.log_mn).beta


def layout_nodes(config: ProblemConfig, layout) -> tuple[np.ndarray, float]:
    """Nodes on [0, b0] for the layout, with the node spacing."""
    layout = NodeLayout(layout)
    b0, delta = config.b0, config.delta
    if layout is NodeLayout.EQUISPACED_GRID:
        if config.criterion is not Criterion.SCATTERED:
            raise DomainError("the equispaced grid layout goes with the scattered criterion")
        cells = math.ceil(b0 / delta - 1e-12)
        nodes = np.linspace(0.0, b0, cells + 1)
        return nodes, b0 / cells
    if config.criterion is not Criterion.EVENLY_SPACED:
        raise DomainError("the simplex layout goes with the evenly spaced criterion")
    degree = K.admissible_degrees(b0, delta).start - 1
    if degree < 1:
        raise DomainError("delta must be smaller than b0 for at least two simplex nodes")
    nodes = evenly_spaced_nodes(Simplex([[0.0], [b0]]), degree).cartesian[:, 0]
    return np.sort(nodes), b0 / degree


def beta_sweep(config: ProblemConfig, test_fn: TestFunction, node_layout, beta_grid) -> ExperimentReport:
    """Interpolate ``test_fn`` at each beta and compare the error with MN and the bound."""
    if config.n != 1 or test_fn.dimension != 1:
        raise DomainError("experiments are one-dimensional")
    config.check_feasible()
    betas = np.unique(np.asarray(beta_grid, dtype=float))
    if betas.size == 0 or betas[0] <= 0:
        raise DomainError("beta grid must be nonempty and positive")

    nodes, _ = layout_nodes(config, node_layout)
    values = test_fn(nodes)
    grid = np.linspace(0.0, config.b0, EVAL_OVERSAMPLING * nodes.size + 1)
    truth = test_fn(grid)

    variant = bound_variant_for(config)
    if variant in (BoundVariant.EQ6, BoundVariant.EQ9):
        norm = test_fn.l2_norm
    else:
        norm = math.exp(log_g_norm(config.sigma, test_fn))

    rows = []
    for beta in betas:
        beta = float(beta)
        interp, report = build(nodes, values, beta)
        err = float(np.max(np.abs(evaluate(interp, grid.reshape(-1, 1)) - truth)))
        flags = []
        if report.condition_estimate > ILL_CONDITIONED:
            flags.append("ill-conditioned")
        try:
            lb = log_error_bound(config, bound_constants(config.n, config.b0, beta), norm, variant)
        except HypothesisViolationError:
            lb = math.nan
            flags.append("delta>delta_0")
        rows.append(
            SweepRow(
                beta=beta,
                empirical_sup_error=err,
                log_mn=log_mn(config, beta),
                log_bound=lb,
                flag=";".join(flags),
                condition_estimate=report.condition_estimate,
                max_node_residual=report.max_node_residual,
            )
        )
    return ExperimentReport(config=config, rows=rows, layout=NodeLayout(node_layout))


def _fmt(x):
    return format(x, ".17g")


def emit_csv(report: ExperimentReport, path) -> None:
    if not report.rows:
        raise DomainError("refusing to write an empty report")
    try:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["beta", "empirical_sup_error", "log_mn", "log_bound", "flag"])
            for r in report.rows:
                writer.writerow(
                    [_fmt(r.beta), _fmt(r.empirical_sup_error), _fmt(r.log_mn), _fmt(r.log_bound), r.flag]
                )
    except OSError as exc:
        raise OSError(f"could not write experiment CSV to {path}: {exc}") from exc
