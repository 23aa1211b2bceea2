"""Base curve with shared logic: periodic evaluation and numerical embedding checks."""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import ArrayLike

from triangle_inscriber.errors import EmbeddingError, InvalidParameterError

logger = logging.getLogger(__name__)

# One-sided derivative offset used to detect corners.
_JUMP_STEP = 1e-7
# Relative derivative jump above which a curve is not numerically C1.
_JUMP_TOL = 1e-3


class Smoothness(str, Enum):
    C1 = "c1"
    NON_C1 = "non_c1"


class Curve(ABC):
    """Closed parametric plane curve with period 1; points are complex numbers.

    Subclasses implement `_position` and `_velocity` on parameters already reduced to [0, 1).
    """

    name: str = "curve"
    smoothness: Smoothness = Smoothness.C1

    @abstractmethod
    def _position(self, t: np.ndarray) -> np.ndarray:
        """c(t) for t in [0, 1), as a complex array."""

    @abstractmethod
    def _velocity(self, t: np.ndarray) -> np.ndarray:
        """c'(t) for t in [0, 1), as a complex array."""

    @property
    def is_c1(self) -> bool:
        return self.smoothness is Smoothness.C1

    def point(self, t: ArrayLike):
        """c(t), t taken mod 1. Scalars in, complex out; arrays in, complex arrays out."""
        u = np.mod(np.asarray(t, dtype=float), 1.0)
        z = np.asarray(self._position(u), dtype=complex)
        return complex(z) if z.ndim == 0 else z

    def velocity(self, t: ArrayLike):
        """c'(t) with respect to the period-1 parameter."""
        u = np.mod(np.asarray(t, dtype=float), 1.0)
        z = np.asarray(self._velocity(u), dtype=complex)
        return complex(z) if z.ndim == 0 else z

    def __repr__(self) -> str:
        return f"<{type(self).__name__}(name={self.name}, smoothness={self.smoothness.value})>"


@dataclass(frozen=True)
class CurveValidationReport:
    min_speed: float
    min_separation_ratio: float
    is_embedded_numerically: bool
    samples_used: int
    max_derivative_jump: float
    is_c1_numerically: bool


def torus_distance(a: ArrayLike, b: ArrayLike) -> np.ndarray:
    """Distance on R/Z."""
    d = np.abs(np.mod(np.asarray(a, dtype=float) - np.asarray(b, dtype=float), 1.0))
    return np.minimum(d, 1.0 - d)


def validate_curve(c: Curve, n_samples: int = 256) -> CurveValidationReport:
    """Check the injective-immersion hypotheses on a uniform parameter grid.

    The separation ratio of a sample pair is its chord minus the local sample spacing,
    divided by the torus distance of the parameters; it turns non-positive when two
    non-neighbouring samples come within one sampling step of each other.
    """
    if n_samples < 16:
        raise InvalidParameterError(f"n_samples must be >= 16, got {n_samples}")

    t = np.arange(n_samples) / n_samples
    z = c.point(t)
    speeds = np.abs(c.velocity(t))
    min_speed = float(speeds.min())

    step = np.abs(np.roll(z, -1) - z)
    spacing = np.maximum(step, np.roll(step, 1))
    chord = np.abs(z[:, None] - z[None, :])
    slack = 0.5 * (spacing[:, None] + spacing[None, :])
    dist = torus_distance(t[:, None], t[None, :])
    mask = dist >= 2.0 / n_samples - 1e-12
    ratio = (chord - slack)[mask] / dist[mask]
    min_ratio = float(ratio.min())

    left = c.velocity(t - _JUMP_STEP)
    right = c.velocity(t + _JUMP_STEP)
    scale = max(float(speeds.max()), np.finfo(float).tiny)
    max_jump = float(np.abs(left - right).max() / scale)

    report = CurveValidationReport(
        min_speed=min_speed,
        min_separation_ratio=min_ratio,
        is_embedded_numerically=min_speed > 0 and min_ratio > 0,
        samples_used=n_samples,
        max_derivative_jump=max_jump,
        is_c1_numerically=max_jump <= _JUMP_TOL,
    )
    logger.debug(
        f"[{c.name}] validation: min_speed={min_speed:.6g}, "
        f"min_separation_ratio={min_ratio:.6g}, derivative_jump={max_jump:.3g}"
    )
    return report


def require_embedded(c: Curve, n_samples: int = 256) -> CurveValidationReport:
    """Validate and raise EmbeddingError when the curve is rejected."""
    report = validate_curve(c, n_samples)
    if not report.is_embedded_numerically:
        raise EmbeddingError(
            f"curve '{c.name}' failed embedding validation "
            f"(min_speed={report.min_speed:.3g}, min_separation_ratio={report.min_separation_ratio:.3g})",
            report,
        )
    return report
