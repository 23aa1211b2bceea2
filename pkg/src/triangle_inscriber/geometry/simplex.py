"""Shapes of n-simplexes in R^n and their placement on the round sphere."""

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from triangle_inscriber.errors import DegenerateTriangleError, FlatTargetError

logger = logging.getLogger(__name__)

FLATNESS_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class SimplexShape:
    """Edge vectors w_1..w_n (rows of `vectors`) from vertex 0, jointly unit-norm."""

    vectors: np.ndarray

    @property
    def n(self) -> int:
        return int(self.vectors.shape[1])

    def distance(self, other: "SimplexShape") -> float:
        return float(np.linalg.norm(self.vectors - other.vectors))


def _as_vertices(vertices: ArrayLike) -> np.ndarray:
    z = np.asarray(vertices, dtype=float)
    if z.ndim != 2 or z.shape[0] != z.shape[1] + 1:
        raise ValueError(f"expected n+1 points of R^n, got array of shape {z.shape}")
    if z.shape[1] < 2:
        raise ValueError("dimension must be >= 2")
    return z


def simplex_shape(vertices: ArrayLike) -> SimplexShape:
    """Translation- and positive-scaling-invariant shape of n+1 points in R^n."""
    z = _as_vertices(vertices)
    w = z[1:] - z[0]
    norm = np.linalg.norm(w)
    if norm == 0.0:
        raise DegenerateTriangleError("all simplex vertices coincide")
    return SimplexShape(w / norm)


def flatness(s: SimplexShape) -> float:
    """det(w_1, ..., w_n); zero iff flat, its sign is the orientation side."""
    return float(np.linalg.det(s.vectors.T))


def sphere_oracle(target: ArrayLike) -> np.ndarray:
    """Place a non-flat simplex on the unit sphere S^{n-1} via its circumsphere.

    Returns the (n+1, n) array of unit vectors (z_i - O) / R.
    """
    z = _as_vertices(target)
    delta = flatness(simplex_shape(z))
    if abs(delta) <= FLATNESS_TOL:
        raise FlatTargetError(f"target simplex is flat (det={delta:.3g})")

    # |z_i - O|^2 = |z_0 - O|^2  <=>  2 (z_i - z_0) . O = |z_i|^2 - |z_0|^2
    a = 2.0 * (z[1:] - z[0])
    b = np.sum(z[1:] ** 2, axis=1) - np.sum(z[0] ** 2)
    try:
        center = np.linalg.solve(a, b)
    except np.linalg.LinAlgError as e:
        raise FlatTargetError(f"circumcenter system is singular: {e}") from e

    radius = float(np.linalg.norm(z[0] - center))
    logger.debug(f"circumsphere center={center}, radius={radius:.6g}")
    return (z - center) / radius
