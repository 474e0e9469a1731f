"""Gaussian h-spline interpolation.

The Gaussian is positive definite, so the interpolant carries no polynomial
part and the coefficients solve ``A c = y`` with ``A[i, j] = exp(-beta |x_i - x_j|^2)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy import linalg
from scipy.linalg import lapack

from gaussbeta.errors import DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Interpolant:
    beta: float
    centers: np.ndarray
    coefficients: np.ndarray

    @property
    def n(self) -> int:
        return self.centers.shape[1]

    def __call__(self, x):
        return evaluate(self, x)


@dataclass(frozen=True)
class SolveReport:
    condition_estimate: float
    max_node_residual: float
    method: str = "cholesky"


def _as_points(x, n=None):
    pts = np.asarray(x, dtype=float)
    if pts.ndim == 0:
        pts = pts.reshape(1, 1)
    elif pts.ndim == 1:
        # a bare vector is a batch of 1D points unless a dimension says otherwise
        pts = pts.reshape(1, -1) if n is not None and n > 1 else pts.reshape(-1, 1)
    if n is not None and pts.shape[1] != n:
        raise DomainError(f"expected points of dimension {n}, got {pts.shape[1]}")
    return pts


def _sq_distances(x, y):
    d = x[:, None, :] - y[None, :, :]
    return np.einsum("ijk,ijk->ij", d, d)


def kernel(x, y, beta: float) -> float:
    """exp(-beta |x - y|^2)."""
    if not beta > 0:
        raise DomainError(f"beta must be positive, got {beta!r}")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    y = np.atleast_1d(np.asarray(y, dtype=float))
    if x.shape != y.shape:
        raise DomainError(f"dimension mismatch: {x.shape} vs {y.shape}")
    d = x - y
    return float(np.exp(-beta * np.dot(d, d)))


def kernel_matrix(x, y, beta):
    return np.exp(-beta * _sq_distances(x, y))


def _condition_one_norm(A):
    # LAPACK one-norm estimate from an LU factorization
    anorm = np.linalg.norm(A, 1)
    lu, _, info = lapack.dgetrf(A)
    if info > 0:
        return 1.0 / np.finfo(float).tiny
    rcond, _ = lapack.dgecon(lu, anorm, norm="1")
    return 1.0 / max(rcond, np.finfo(float).tiny)


def build(centers, values, beta: float) -> tuple[Interpolant, SolveReport]:
    """Interpolate ``values`` at ``centers`` with the Gaussian of shape ``beta``.

    Solves with a Cholesky factorization; if that breaks down the system is
    solved in the least-squares sense via the SVD and the report says so.
    No regularization is ever added.
    """
    if not beta > 0:
        raise DomainError(f"beta must be positive, got {beta!r}")
    x = _as_points(centers)
    y = np.asarray(values, dtype=float).ravel()
    if x.shape[0] == 0:
        raise DomainError("at least one center is required")
    if y.shape[0] != x.shape[0]:
        raise DomainError(f"{x.shape[0]} centers but {y.shape[0]} values")
    if np.unique(x, axis=0).shape[0] != x.shape[0]:
        raise DomainError("centers must be pairwise distinct")

    A = kernel_matrix(x, x, beta)
    method = "cholesky"
    try:
        factor = linalg.cho_factor(A, lower=True, check_finite=False)
        c = linalg.cho_solve(factor, y, check_finite=False)
    except linalg.LinAlgError:
        logger.info("Cholesky failed for N=%d, beta=%g; using least squares", len(y), beta)
        method = "lstsq"
        c = linalg.lstsq(A, y, lapack_driver="gelsd")[0]

    residual = float(np.max(np.abs(A @ c - y)))
    report = SolveReport(
        condition_estimate=float(_condition_one_norm(A)),
        max_node_residual=residual,
        method=method,
    )
    return Interpolant(beta=float(beta), centers=x, coefficients=c), report


def evaluate(interp: Interpolant, x):
    """sum_j c_j exp(-beta |x - x_j|^2).

    A single point gives a float; an (m, n) array gives m values.
    """
    arr = np.asarray(x, dtype=float)
    single = arr.ndim == 0 or (arr.ndim == 1 and (interp.n > 1 or arr.shape[0] == 1))
    pts = _as_points(arr, interp.n)
    out = kernel_matrix(pts, interp.centers, interp.beta) @ interp.coefficients
    return float(out[0]) if single else out
