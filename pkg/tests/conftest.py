"""Shared fixtures: curves, solver settings, seeded random triangles."""

import math

import numpy as np
import pytest

from triangle_inscriber.config import DegreeConfig, SolverConfig
from triangle_inscriber.curves import Curve, make_circle, make_ellipse, make_spline, make_star
from triangle_inscriber.geometry.shape_space import Triangle

# Best residual of the 120-degree leftward isosceles on the half-lemniscate, minimised over all
# six labelings from a 128^3 scan, is 0.0976. The floor keeps a factor 2 below that.
LEMNISCATE_OBTUSE_FLOOR = 0.05


class SegmentCurve(Curve):
    """The segment [-1, 1] traversed back and forth: the b -> 0 limit of ellipse(1, b)."""

    name = "segment"

    def _position(self, t):
        return np.cos(2 * math.pi * t) + 0j

    def _velocity(self, t):
        return -2 * math.pi * np.sin(2 * math.pi * t) + 0j


class FigureEight(Curve):
    """Self-crossing at the origin (t = 0 and t = 1/2)."""

    name = "figure-eight"

    def _position(self, t):
        theta = 2 * math.pi * t
        return np.sin(theta) + 0.5j * np.sin(2 * theta)

    def _velocity(self, t):
        theta = 2 * math.pi * t
        return 2 * math.pi * (np.cos(theta) + 1j * np.cos(2 * theta))


def min_angle_deg(t: Triangle) -> float:
    z = np.array(t.vertices)
    angles = []
    for k in range(3):
        a, b = z[(k + 1) % 3] - z[k], z[(k + 2) % 3] - z[k]
        angles.append(abs(np.angle(b / a, deg=True)))
    return min(angles)


def random_triangle(rng: np.random.Generator, min_angle: float = 10.0) -> Triangle:
    """Random non-flat triangle, rejecting slivers."""
    while True:
        xy = rng.normal(size=(3, 2))
        t = Triangle.from_pairs(xy)
        if min_angle_deg(t) >= min_angle:
            return t


def perturbed_circle_points(rng: np.random.Generator, n: int, amplitude: float = 0.08) -> np.ndarray:
    theta = 2 * math.pi * np.arange(n) / n
    r = 1.0 + amplitude * rng.uniform(-1, 1, size=n)
    return np.column_stack([r * np.cos(theta), r * np.sin(theta)])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def cfg():
    return SolverConfig()


@pytest.fixture
def degree_cfg():
    return DegreeConfig()


@pytest.fixture
def circle():
    return make_circle()


@pytest.fixture
def ellipse():
    return make_ellipse(2.0, 1.0)


@pytest.fixture
def star():
    return make_star(0.2, 5)


@pytest.fixture
def spline(rng):
    return make_spline(perturbed_circle_points(rng, 12), name="perturbed-circle")


@pytest.fixture
def c1_curves(circle, ellipse, star, spline):
    return [circle, ellipse, star, spline]
