"""Simplex lattice nodes and the cube density check."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from gaussbeta.errors import DomainError

BARYCENTRIC_TOL = 1e-12


@dataclass(frozen=True)
class Simplex:
    vertices: np.ndarray

    def __post_init__(self):
        v = np.atleast_2d(np.asarray(self.vertices, dtype=float))
        if v.shape[0] == 1 and v.shape[1] > 1 and v.ndim == 2:
            # [a, b] for a segment
            v = v.T
        n = v.shape[1]
        if v.shape[0] != n + 1:
            raise DomainError(f"an {n}-simplex needs {n + 1} vertices, got {v.shape[0]}")
        edges = v[1:] - v[0]
        if np.linalg.matrix_rank(edges) < n:
            raise DomainError("simplex is degenerate (vertices are affinely dependent)")
        object.__setattr__(self, "vertices", v)

    @property
    def n(self) -> int:
        return self.vertices.shape[1]

    @property
    def diameter(self) -> float:
        v = self.vertices
        return float(max(np.linalg.norm(a - b) for a, b in itertools.combinations(v, 2)))

    @classmethod
    def standard(cls, n: int, scale: float = 1.0) -> Simplex:
        """The simplex with vertices 0, scale*e_1, ..., scale*e_n."""
        return cls(np.vstack([np.zeros(n), scale * np.eye(n)]))


@dataclass(frozen=True)
class NodeSet:
    degree: int
    barycentric: list
    cartesian: np.ndarray

    def __len__(self):
        return len(self.barycentric)


def compositions(total: int, parts: int):
    """Nonnegative integer tuples of length ``parts`` summing to ``total``, lexicographic."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def evenly_spaced_nodes(simplex: Simplex, degree: int) -> NodeSet:
    """Points with barycentric coordinates (k_1/l, ..., k_{n+1}/l), sum k_i = l."""
    if isinstance(degree, bool) or not isinstance(degree, int) or degree < 1:
        raise DomainError(f"degree must be a positive integer, got {degree!r}")
    bary = [tuple(Fraction(k, degree) for k in ks) for ks in compositions(degree, simplex.n + 1)]
    weights = np.array([[float(w) for w in b] for b in bary])
    return NodeSet(degree=degree, barycentric=bary, cartesian=weights @ simplex.vertices)


def barycentric_of(simplex: Simplex, x) -> np.ndarray:
    v = simplex.vertices
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if x.shape != (simplex.n,):
        raise DomainError(f"expected a point of dimension {simplex.n}")
    # rows: coordinates, then the partition-of-unity constraint
    M = np.vstack([v.T, np.ones(simplex.n + 1)])
    return np.linalg.solve(M, np.append(x, 1.0))


def contains(simplex: Simplex, x) -> bool:
    return bool(np.all(barycentric_of(simplex, x) >= -BARYCENTRIC_TOL))


def check_density(cube_corner, side: float, points, delta: float) -> bool:
    """True iff every cell of the ceil(side/delta)^n grid partition of the cube holds a point.

    Cells are closed, so a point on a shared face counts for both neighbours.
    The last cell along each axis is truncated at the cube boundary.
    """
    if not (side > 0 and delta > 0):
        raise DomainError("side and delta must be positive")
    corner = np.atleast_1d(np.asarray(cube_corner, dtype=float))
    n = corner.shape[0]
    pts = np.asarray(points, dtype=float).reshape(-1, n) if np.size(points) else np.empty((0, n))
    cells_per_axis = math.ceil(side / delta - 1e-12)
    # edges[k] .. edges[k+1] bounds cell k
    edges = np.minimum(np.arange(cells_per_axis + 1) * delta, side)
    rel = pts - corner
    inside = np.all((rel >= 0) & (rel <= side), axis=1)
    rel = rel[inside]
    covered = np.zeros((cells_per_axis,) * n, dtype=bool)
    if rel.shape[0] == 0:
        return False
    # a point may touch up to two cells per axis (closed cells)
    lo_idx = np.clip(np.searchsorted(edges, rel, side="left") - 1, 0, cells_per_axis - 1)
    hi_idx = np.clip(np.searchsorted(edges, rel, side="right") - 1, 0, cells_per_axis - 1)
    for lo, hi in zip(lo_idx, hi_idx):
        ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
        for cell in itertools.product(*ranges):
            covered[cell] = True
    return bool(covered.all())
