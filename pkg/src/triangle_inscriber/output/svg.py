"""Plain SVG 1.1 figures: the curve, inscribed triangles and an inset of the target."""

from pathlib import Path
from typing import Sequence

import numpy as np

from triangle_inscriber.curves.base import Curve
from triangle_inscriber.geometry.shape_space import Shape, Triangle
from triangle_inscriber.solver.search import Solution

_HEADER = (
    '<?xml version="1.0" encoding="UTF-8"?>\n'
    '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="{vb}">\n'
)
_COLORS = ("#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2")


def _fmt(x: float) -> str:
    return f"{x:.6f}".rstrip("0").rstrip(".")


def _points(z: np.ndarray) -> str:
    return " ".join(f"{_fmt(p.real)},{_fmt(p.imag)}" for p in z)


def render_svg(
    curve: Curve,
    solutions: Sequence[Solution],
    target: Shape | None = None,
    samples: int = 512,
    size: int = 600,
) -> str:
    """One <path> for the curve, one <polygon> per solution, target as a closed <polyline>."""
    z = curve.point(np.arange(samples) / samples)
    lo = complex(z.real.min(), z.imag.min())
    hi = complex(z.real.max(), z.imag.max())
    span = max(hi.real - lo.real, hi.imag - lo.imag, 1e-12)
    pad = 0.08 * span
    width = span + 2 * pad
    stroke = _fmt(span / 250)

    # y axis points down in SVG: mirror the plane into the viewBox
    vb = f"{_fmt(lo.real - pad)} {_fmt(-hi.imag - pad)} {_fmt(width)} {_fmt(width)}"
    out = [_HEADER.format(w=size, h=size, vb=vb)]
    out.append('<g transform="scale(1,-1)">\n')

    d = "M " + " L ".join(f"{_fmt(p.real)},{_fmt(p.imag)}" for p in z) + " Z"
    out.append(f'<path d="{d}" fill="none" stroke="#1f77b4" stroke-width="{stroke}"/>\n')

    for k, sol in enumerate(solutions):
        color = _COLORS[k % len(_COLORS)]
        out.append(
            f'<polygon points="{_points(np.array(sol.vertices))}" fill="{color}" fill-opacity="0.15" '
            f'stroke="{color}" stroke-width="{stroke}"/>\n'
        )

    if target is not None:
        # inset in the top-left corner, scaled to a fifth of the figure
        tri = Triangle(0j, target.w1, target.w2)
        centroid = sum(tri.vertices) / 3
        scale = 0.2 * span / max(max(abs(v - centroid) for v in tri.vertices), 1e-12)
        corner = complex(lo.real + 0.12 * span, hi.imag - 0.12 * span)
        placed = tri.transformed(scale, corner - scale * centroid)
        inset = np.array([*placed.vertices, placed.z0])
        out.append(f'<polyline points="{_points(inset)}" fill="none" stroke="#444444" stroke-width="{stroke}"/>\n')

    out.append("</g>\n</svg>\n")
    return "".join(out)


def write_svg(path: str | Path, content: str) -> None:
    Path(path).write_text(content, encoding="utf-8")
