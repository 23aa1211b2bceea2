"""Periodic cubic spline curves through user-supplied points."""

import logging
from pathlib import Path
from typing import Sequence

import numpy as np
import pandas as pd
from scipy.interpolate import CubicSpline

from triangle_inscriber.curves.base import Curve, require_embedded
from triangle_inscriber.errors import InvalidParameterError, SpecParseError

logger = logging.getLogger(__name__)


class SplineCurve(Curve):
    """Periodic cubic interpolant on chord-length knots; C2, hence C1."""

    def __init__(self, points: np.ndarray, name: str = "spline"):
        closed = np.vstack([points, points[:1]])
        chords = np.linalg.norm(np.diff(closed, axis=0), axis=1)
        knots = np.concatenate([[0.0], np.cumsum(chords)]) / chords.sum()
        knots[-1] = 1.0
        self.points = points
        self.knots = knots
        self.name = name
        self._spline = CubicSpline(knots, closed, bc_type="periodic", axis=0)

    def _position(self, t):
        xy = self._spline(t)
        return xy[..., 0] + 1j * xy[..., 1]

    def _velocity(self, t):
        xy = self._spline(t, 1)
        return xy[..., 0] + 1j * xy[..., 1]


def make_spline(points: Sequence[Sequence[float]], name: str = "spline", n_samples: int = 512) -> Curve:
    """Fit a closed spline through the points (do not repeat the first point)."""
    p = np.asarray(points, dtype=float)
    if p.ndim != 2 or p.shape[1] != 2:
        raise InvalidParameterError(f"expected a list of (x, y) pairs, got array of shape {p.shape}")
    if len(p) < 4:
        raise InvalidParameterError(f"a spline needs at least 4 points, got {len(p)}")
    gaps = np.linalg.norm(p[:, None, :] - p[None, :, :], axis=2)
    np.fill_diagonal(gaps, np.inf)
    if gaps.min() == 0.0:
        raise InvalidParameterError("spline points must be pairwise distinct")

    curve = SplineCurve(p, name=name)
    require_embedded(curve, max(n_samples, 16 * len(p)))
    logger.debug(f"Fitted {name} through {len(p)} points")
    return curve


def read_point_file(path: str | Path) -> np.ndarray:
    """Read one 'x y' pair per line; '#' starts a comment."""
    try:
        df = pd.read_csv(path, sep=r"\s+", comment="#", header=None, index_col=False, dtype=float)
    except (ValueError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise SpecParseError(f"cannot read point file: {e}", str(path), 0) from e
    if df.shape[1] != 2:
        raise SpecParseError(f"every line needs exactly two coordinates, found {df.shape[1]} columns", str(path), 0)
    df = df.dropna(how="all")
    if df.isna().any().any():
        raise SpecParseError("every line needs exactly two coordinates", str(path), 0)
    return df.to_numpy()
