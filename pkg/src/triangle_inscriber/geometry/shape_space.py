"""Triangle shape space: triangles modulo translation and positive homothety.

A triangle (z0, z1, z2) is reduced to its edge pair (z1 - z0, z2 - z0) in C^2 and
then to the unit representative of its positive ray, a point of S^3. The Hopf map
further quotients by rotations onto the Riemann sphere, where the flat, isosceles,
right and equilateral triangles lie on explicit circles and lines.
"""

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from triangle_inscriber.errors import DegenerateTriangleError, ToleranceError

# Below this modulus the second edge of a unit representative is treated as zero.
HOPF_INFINITY_THRESHOLD = 1e-14

EQUILATERAL_PLUS = cmath.exp(1j * math.pi / 3)
EQUILATERAL_MINUS = cmath.exp(-1j * math.pi / 3)


@dataclass(frozen=True)
class Triangle:
    """Ordered vertex triple in the plane, stored as complex numbers."""

    z0: complex
    z1: complex
    z2: complex

    def __post_init__(self):
        if self.z0 == self.z1 == self.z2:
            raise DegenerateTriangleError(f"all three vertices coincide at {self.z0}")

    @classmethod
    def from_pairs(cls, points: Sequence[Sequence[float]]) -> "Triangle":
        if len(points) != 3:
            raise ValueError(f"a triangle needs 3 vertices, got {len(points)}")
        z0, z1, z2 = (complex(float(x), float(y)) for x, y in points)
        return cls(z0, z1, z2)

    @property
    def vertices(self) -> tuple[complex, complex, complex]:
        return (self.z0, self.z1, self.z2)

    def as_pairs(self) -> list[list[float]]:
        return [[z.real, z.imag] for z in self.vertices]

    def permuted(self, perm: Sequence[int]) -> "Triangle":
        """Relabel vertices: vertex k of the result is vertex perm[k] of self."""
        v = self.vertices
        return Triangle(v[perm[0]], v[perm[1]], v[perm[2]])

    def rotated(self, theta: float) -> "Triangle":
        r = cmath.exp(1j * theta)
        return Triangle(r * self.z0, r * self.z1, r * self.z2)

    def transformed(self, scale: float, shift: complex) -> "Triangle":
        return Triangle(scale * self.z0 + shift, scale * self.z1 + shift, scale * self.z2 + shift)


@dataclass(frozen=True)
class Shape:
    """Unit representative (w1, w2) of a class in Tri = (C^2 - 0) / R_{>0}."""

    w1: complex
    w2: complex

    @classmethod
    def from_edges(cls, w1: complex, w2: complex) -> "Shape":
        """Normalise an edge pair by its positive norm."""
        norm = math.sqrt(abs(w1) ** 2 + abs(w2) ** 2)
        if norm == 0.0:
            raise DegenerateTriangleError("both edge vectors vanish")
        return cls(complex(w1) / norm, complex(w2) / norm)

    @classmethod
    def from_vector(cls, v: Sequence[float]) -> "Shape":
        """Inverse of as_vector; the input need not be normalised."""
        return cls.from_edges(complex(v[0], v[1]), complex(v[2], v[3]))

    def as_vector(self) -> np.ndarray:
        return np.array([self.w1.real, self.w1.imag, self.w2.real, self.w2.imag])

    @property
    def det(self) -> float:
        """Determinant of (w1, w2) read as two real column vectors."""
        return self.w1.real * self.w2.imag - self.w1.imag * self.w2.real


@dataclass(frozen=True)
class HopfCoord:
    """Point of the Riemann sphere; value None stands for infinity."""

    value: complex | None

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return "inf" if self.value is None else f"{self.value:.12g}"


class ShapeTag(str, Enum):
    FLAT = "flat"
    EQUILATERAL = "equilateral"
    RIGHT = "right"
    ISOSCELES = "isosceles"
    SCALENE = "scalene"


# Primary-tag precedence when loci intersect.
_PRECEDENCE = (ShapeTag.FLAT, ShapeTag.EQUILATERAL, ShapeTag.RIGHT, ShapeTag.ISOSCELES, ShapeTag.SCALENE)


@dataclass(frozen=True)
class ShapeClass:
    tags: frozenset[ShapeTag]
    orientation: int
    tol: float

    @property
    def tag(self) -> ShapeTag:
        """Primary tag: flat > equilateral > right > isosceles > scalene."""
        for tag in _PRECEDENCE:
            if tag in self.tags:
                return tag
        return ShapeTag.SCALENE

    def __contains__(self, tag: object) -> bool:
        return tag in self.tags

    def sorted_tags(self) -> list[str]:
        return [t.value for t in _PRECEDENCE if t in self.tags]


def shape_of(t: Triangle) -> Shape:
    """Translation- and positive-scaling-invariant shape of a triangle."""
    return Shape.from_edges(t.z1 - t.z0, t.z2 - t.z0)


def hopf(s: Shape) -> HopfCoord:
    """Hopf map (w1, w2) -> w1 / w2, infinity when w2 vanishes."""
    if abs(s.w2) <= HOPF_INFINITY_THRESHOLD:
        return HopfCoord(None)
    return HopfCoord(s.w1 / s.w2)


def orientation(s: Shape, tol: float = 1e-12) -> int:
    d = s.det
    if abs(d) <= tol:
        return 0
    return 1 if d > 0 else -1


def conjugate(s: Shape) -> Shape:
    """Mirror image through the real axis; lands on the other side of the flat torus."""
    return Shape(s.w1.conjugate(), s.w2.conjugate())


def classify(s: Shape, tol: float) -> ShapeClass:
    """Test the Hopf image of a shape against the flat / equilateral / isosceles / right loci."""
    if not tol > 0:
        raise ToleranceError(f"classification tolerance must be > 0, got {tol}")

    z = hopf(s).value
    tags: set[ShapeTag] = set()
    if z is None:
        # infinity lies on the real line and on every vertical line
        tags.update({ShapeTag.FLAT, ShapeTag.ISOSCELES, ShapeTag.RIGHT})
    else:
        # same quantity as orientation(), so flat and orientation 0 always coincide
        if abs(s.det) <= tol:
            tags.add(ShapeTag.FLAT)
        if abs(z - EQUILATERAL_PLUS) <= tol or abs(z - EQUILATERAL_MINUS) <= tol:
            tags.add(ShapeTag.EQUILATERAL)
        if abs(abs(z) - 1.0) <= tol or abs(abs(z - 1.0) - 1.0) <= tol or abs(z.real - 0.5) <= tol:
            tags.add(ShapeTag.ISOSCELES)
        if abs(abs(z - 0.5) - 0.5) <= tol or abs(z.real) <= tol or abs(z.real - 1.0) <= tol:
            tags.add(ShapeTag.RIGHT)
    if not tags:
        tags.add(ShapeTag.SCALENE)

    return ShapeClass(tags=frozenset(tags), orientation=orientation(s, tol), tol=tol)


def shape_distance(a: Shape, b: Shape) -> float:
    """Euclidean distance in R^4 between unit representatives."""
    return math.hypot(abs(a.w1 - b.w1), abs(a.w2 - b.w2))


def degenerate_value(t: Triangle) -> HopfCoord | None:
    """Hopf label of a triangle with two equal vertices: 1 (z1=z2), 0 (z0=z1), inf (z0=z2)."""
    if t.z1 == t.z2:
        return HopfCoord(1 + 0j)
    if t.z0 == t.z1:
        return HopfCoord(0j)
    if t.z0 == t.z2:
        return HopfCoord(None)
    return None
