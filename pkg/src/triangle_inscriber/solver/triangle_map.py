"""The configuration map: parameter triples on a curve -> shapes of inscribed triangles.

Also provides its analytic tangent map, the projected Jacobian into the shape sphere,
the critical-point test (tangents parallel or concurrent), and the flat limit of the map
at the blown-up diagonal.
"""

import logging
import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from triangle_inscriber.curves.base import Curve, torus_distance
from triangle_inscriber.errors import DiagonalError, NonC1CurveError, ToleranceError
from triangle_inscriber.geometry.shape_space import Shape

logger = logging.getLogger(__name__)

COINCIDENCE_TOL = 1e-14

Diagnostic = Literal["parallel", "concurrent", "regular"]


@dataclass(frozen=True)
class ParamTriple:
    """Curve parameters (t0, t1, t2), each read mod 1."""

    t0: float
    t1: float
    t2: float

    @classmethod
    def from_array(cls, a: Sequence[float]) -> "ParamTriple":
        return cls(float(a[0]), float(a[1]), float(a[2]))

    def as_array(self) -> np.ndarray:
        return np.array([self.t0, self.t1, self.t2])

    def normalized(self) -> "ParamTriple":
        return ParamTriple.from_array(np.mod(self.as_array(), 1.0))

    def permuted(self, perm: Sequence[int]) -> "ParamTriple":
        a = self.as_array()
        return ParamTriple.from_array(a[list(perm)])

    def min_pair_distance(self) -> float:
        a = self.as_array()
        return float(min(torus_distance(a[0], a[1]), torus_distance(a[0], a[2]), torus_distance(a[1], a[2])))

    def distance(self, other: "ParamTriple") -> float:
        """Max of the coordinate-wise torus distances."""
        return float(torus_distance(self.as_array(), other.as_array()).max())


@dataclass(frozen=True)
class BoundaryDatum:
    """Point (t, (u, v)) of the boundary torus, (u, v) on the circle of radius 1/2."""

    t: float
    u: float
    v: float

    def __post_init__(self):
        if abs(self.u ** 2 + self.v ** 2 - 0.25) > 1e-12:
            raise ValueError(f"(u, v) must lie on the radius-1/2 circle, got ({self.u}, {self.v})")

    @classmethod
    def from_angle(cls, t: float, alpha: float) -> "BoundaryDatum":
        return cls(t, 0.5 * math.cos(alpha), 0.5 * math.sin(alpha))


@dataclass(frozen=True)
class CriticalityReport:
    critical: bool
    diagnostic: Diagnostic
    sigma_min: float

    @property
    def agrees(self) -> bool:
        """Singular-value verdict and geometric diagnostic tell the same story."""
        return self.critical == (self.diagnostic != "regular")


def _edges(c: Curve, p: ParamTriple) -> tuple[np.ndarray, complex, complex]:
    z = c.point(p.as_array())
    w1, w2 = complex(z[1] - z[0]), complex(z[2] - z[0])
    if max(abs(w1), abs(w2)) <= COINCIDENCE_TOL:
        raise DiagonalError(f"c(t0)=c(t1)=c(t2) on '{c.name}' at {p}")
    return z, w1, w2


def shape_map(c: Curve, p: ParamTriple) -> Shape:
    """Shape of the triangle (c(t0), c(t1), c(t2))."""
    _, w1, w2 = _edges(c, p)
    return Shape.from_edges(w1, w2)


def tangent_map(c: Curve, p: ParamTriple, lam: Sequence[float]) -> tuple[complex, complex]:
    """Directional derivative of the edge pair along lam = (l0, l1, l2)."""
    v = c.velocity(p.as_array())
    l0, l1, l2 = (float(x) for x in lam)
    return (complex(l1 * v[1] - l0 * v[0]), complex(l2 * v[2] - l0 * v[0]))


def shape_jacobian(c: Curve, p: ParamTriple) -> tuple[np.ndarray, np.ndarray]:
    """Unit representative S (4,) and the 4x3 Jacobian of p -> S, tangent to S^3 at S."""
    _, w1, w2 = _edges(c, p)
    v = c.velocity(p.as_array())
    raw = np.array([w1.real, w1.imag, w2.real, w2.imag])
    norm = float(np.linalg.norm(raw))
    s = raw / norm

    j1 = np.zeros((4, 3))
    j1[:, 0] = [-v[0].real, -v[0].imag, -v[0].real, -v[0].imag]
    j1[:2, 1] = [v[1].real, v[1].imag]
    j1[2:, 2] = [v[2].real, v[2].imag]
    # the ray direction spans the kernel of the quotient to the sphere
    projector = np.eye(4) - np.outer(s, s)
    return s, projector @ j1 / norm


def _tangent_diagnostic(c: Curve, p: ParamTriple, tol: float) -> Diagnostic:
    z = c.point(p.as_array())
    v = c.velocity(p.as_array())
    speed = np.abs(v)
    if np.any(speed == 0.0):
        return "parallel"
    u = v / speed
    crosses = [abs((u[i].conjugate() * u[j]).imag) for i, j in ((0, 1), (0, 2), (1, 2))]
    if max(crosses) <= tol:
        return "parallel"

    # homogeneous line coordinates n.x = n.q, positions centred and scaled to unit size
    center = z.mean()
    scale = float(np.abs(z - center).max())
    q = (z - center) / scale
    normal = 1j * u
    lines = np.column_stack([normal.real, normal.imag, -(normal.real * q.real + normal.imag * q.imag)])
    lines /= np.linalg.norm(lines, axis=1, keepdims=True)
    if abs(np.linalg.det(lines)) <= tol:
        return "concurrent"
    return "regular"


def is_critical(c: Curve, p: ParamTriple, tol: float, diagnostic_tol: float = 1e-6) -> CriticalityReport:
    """Rank test on the projected Jacobian plus the parallel/concurrent tangent diagnostic."""
    if not tol > 0 or not diagnostic_tol > 0:
        raise ToleranceError(f"tolerances must be > 0, got tol={tol}, diagnostic_tol={diagnostic_tol}")
    _, jac = shape_jacobian(c, p)
    sigma_min = float(np.linalg.svd(jac, compute_uv=False)[-1])
    return CriticalityReport(
        critical=sigma_min <= tol,
        diagnostic=_tangent_diagnostic(c, p, diagnostic_tol),
        sigma_min=sigma_min,
    )


def boundary_shape(c: Curve, b: BoundaryDatum) -> Shape:
    """Flat limit shape (u c'(t), v c'(t)) of the map at the blown-up diagonal."""
    if not c.is_c1:
        raise NonC1CurveError(f"boundary limit needs a C1 curve, '{c.name}' is {c.smoothness.value}")
    v = c.velocity(b.t)
    return Shape.from_edges(b.u * v, b.v * v)
