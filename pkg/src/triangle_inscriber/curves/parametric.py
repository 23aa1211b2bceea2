"""Closed-form curves: circle, ellipse, star, half-lemniscate, and curve combinators."""

import math
from collections.abc import Callable

import numpy as np
from numpy.typing import ArrayLike

from triangle_inscriber.curves.base import Curve, Smoothness, require_embedded
from triangle_inscriber.errors import InvalidParameterError

TWO_PI = 2.0 * math.pi

CurveFamily = Callable[[float], Curve]


class Circle(Curve):
    name = "circle"

    def _position(self, t):
        return np.exp(1j * TWO_PI * t)

    def _velocity(self, t):
        return 1j * TWO_PI * np.exp(1j * TWO_PI * t)


class Ellipse(Curve):
    def __init__(self, a: float, b: float):
        self.a = a
        self.b = b
        self.name = f"ellipse:{a:g},{b:g}"

    def _position(self, t):
        theta = TWO_PI * t
        return self.a * np.cos(theta) + 1j * self.b * np.sin(theta)

    def _velocity(self, t):
        theta = TWO_PI * t
        return TWO_PI * (-self.a * np.sin(theta) + 1j * self.b * np.cos(theta))


class Star(Curve):
    """Polar curve r(theta) = 1 + eps cos(k theta)."""

    def __init__(self, eps: float, k: int):
        self.eps = eps
        self.k = k
        self.name = f"star:{eps:g},{k}"

    def _position(self, t):
        theta = TWO_PI * t
        r = 1.0 + self.eps * np.cos(self.k * theta)
        return r * np.exp(1j * theta)

    def _velocity(self, t):
        theta = TWO_PI * t
        r = 1.0 + self.eps * np.cos(self.k * theta)
        dr = -self.eps * self.k * np.sin(self.k * theta)
        return TWO_PI * (dr + 1j * r) * np.exp(1j * theta)


class HalfLemniscate(Curve):
    """The petal r(theta) = cos(2 theta), |theta| <= pi/4: closed, with a right-angle corner at 0."""

    name = "lemniscate"
    smoothness = Smoothness.NON_C1

    def _position(self, t):
        theta = -math.pi / 4 + t * (math.pi / 2)
        return np.cos(2 * theta) * np.exp(1j * theta)

    def _velocity(self, t):
        theta = -math.pi / 4 + t * (math.pi / 2)
        return (math.pi / 2) * (-2 * np.sin(2 * theta) + 1j * np.cos(2 * theta)) * np.exp(1j * theta)


class LinearImageCurve(Curve):
    """Image of a curve under an invertible real 2x2 matrix."""

    def __init__(self, base: Curve, matrix: ArrayLike, name: str | None = None):
        m = np.asarray(matrix, dtype=float)
        if m.shape != (2, 2) or abs(np.linalg.det(m)) == 0.0:
            raise InvalidParameterError(f"expected an invertible 2x2 matrix, got {m.tolist()}")
        self.base = base
        self.matrix = m
        self.smoothness = base.smoothness
        self.name = name or f"linear({base.name})"

    def _apply(self, z: np.ndarray) -> np.ndarray:
        m = self.matrix
        return (m[0, 0] * z.real + m[0, 1] * z.imag) + 1j * (m[1, 0] * z.real + m[1, 1] * z.imag)

    def _position(self, t):
        return self._apply(np.asarray(self.base.point(t)))

    def _velocity(self, t):
        return self._apply(np.asarray(self.base.velocity(t)))


class ReversedCurve(Curve):
    """Same image traversed backwards: t -> c(-t)."""

    def __init__(self, base: Curve):
        self.base = base
        self.smoothness = base.smoothness
        self.name = f"reversed({base.name})"

    def _position(self, t):
        return np.asarray(self.base.point(-t))

    def _velocity(self, t):
        return -np.asarray(self.base.velocity(-t))


class BlendedCurve(Curve):
    """Pointwise linear blend (1 - s) a + s b; need not be embedded."""

    def __init__(self, a: Curve, b: Curve, s: float):
        self.a = a
        self.b = b
        self.s = s
        self.smoothness = Smoothness.C1 if a.is_c1 and b.is_c1 else Smoothness.NON_C1
        self.name = f"blend({a.name},{b.name};{s:g})"

    def _position(self, t):
        return (1.0 - self.s) * np.asarray(self.a.point(t)) + self.s * np.asarray(self.b.point(t))

    def _velocity(self, t):
        return (1.0 - self.s) * np.asarray(self.a.velocity(t)) + self.s * np.asarray(self.b.velocity(t))


def linear_blend(a: Curve, b: Curve) -> CurveFamily:
    """Curve family s -> (1 - s) a + s b for s in [0, 1]."""

    def family(s: float) -> Curve:
        if s == 0.0:
            return a
        if s == 1.0:
            return b
        return BlendedCurve(a, b, s)

    return family


def make_circle() -> Curve:
    return Circle()


def make_ellipse(a: float, b: float) -> Curve:
    if not (a > 0 and b > 0):
        raise InvalidParameterError(f"ellipse semi-axes must be > 0, got a={a}, b={b}")
    return Ellipse(float(a), float(b))


def make_star(eps: float, k: int, n_samples: int = 256) -> Curve:
    if not abs(eps) < 1:
        raise InvalidParameterError(f"star amplitude must satisfy |eps| < 1, got {eps}")
    if int(k) != k or k < 2:
        raise InvalidParameterError(f"star lobe count must be an integer >= 2, got {k}")
    star = Star(float(eps), int(k))
    require_embedded(star, max(n_samples, 32 * int(k)))
    return star


def make_half_lemniscate() -> Curve:
    return HalfLemniscate()
