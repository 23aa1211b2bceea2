"""Closed parametric curves and their numerical validation."""

from triangle_inscriber.curves.base import (
    Curve,
    CurveValidationReport,
    Smoothness,
    require_embedded,
    torus_distance,
    validate_curve,
)
from triangle_inscriber.curves.parametric import (
    CurveFamily,
    LinearImageCurve,
    ReversedCurve,
    linear_blend,
    make_circle,
    make_ellipse,
    make_half_lemniscate,
    make_star,
)
from triangle_inscriber.curves.spline import make_spline, read_point_file

__all__ = [
    "Curve",
    "CurveFamily",
    "CurveValidationReport",
    "LinearImageCurve",
    "ReversedCurve",
    "Smoothness",
    "linear_blend",
    "make_circle",
    "make_ellipse",
    "make_half_lemniscate",
    "make_spline",
    "make_star",
    "read_point_file",
    "require_embedded",
    "torus_distance",
    "validate_curve",
]
