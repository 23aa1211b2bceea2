"""Obtuse isosceles targets on the cornered half-lemniscate versus the circle."""

import cmath
import logging
import math
from dataclasses import replace
from typing import Sequence

import pandas as pd

from triangle_inscriber.config import SolverConfig
from triangle_inscriber.curves.parametric import make_circle, make_half_lemniscate
from triangle_inscriber.geometry.shape_space import Triangle, shape_of
from triangle_inscriber.solver.search import solve, solve_labelings

logger = logging.getLogger(__name__)

DEFAULT_APEX_ANGLES = tuple(range(95, 176, 10))


def leftward_isosceles(apex_deg: float) -> Triangle:
    """Isosceles triangle C, A, B with apex C at the origin, vertical base to the right."""
    if not 0 < apex_deg < 180:
        raise ValueError(f"apex angle must lie in (0, 180) degrees, got {apex_deg}")
    alpha = math.radians(apex_deg)
    return Triangle(0j, 1 + 0j, cmath.exp(-1j * alpha)).rotated(alpha / 2)


def counterexample_sweep(
    angles: Sequence[float] = DEFAULT_APEX_ANGLES,
    grid_n: int = 96,
    cfg: SolverConfig | None = None,
) -> pd.DataFrame:
    """Best residual of each apex angle over all labelings on the lemniscate, and on the circle.

    The half-lemniscate is not C1, so nothing guarantees a solution there.
    """
    cfg = replace(cfg or SolverConfig(), grid_n=grid_n)
    lemniscate = make_half_lemniscate()
    circle = make_circle()

    rows = []
    for apex in angles:
        target = leftward_isosceles(apex)
        reports = solve_labelings(lemniscate, target, cfg)
        best_perm, best = min(reports, key=lambda pr: (pr[1].best_residual, pr[0]))
        found = sum(len(r.solutions) for _, r in reports)

        on_circle = solve(circle, shape_of(target), cfg)
        circle_residual = on_circle.solutions[0].residual if on_circle.found else math.inf
        rows.append(
            {
                "apex_deg": float(apex),
                "obtuse": apex > 90,
                "lemniscate_min_residual": best.best_residual,
                "lemniscate_min_scan_residual": min(r.min_scan_residual for _, r in reports),
                "lemniscate_solutions": found,
                "best_labeling": "".join(str(i) for i in best_perm),
                "circle_residual": circle_residual,
                "circle_solutions": len(on_circle.solutions),
            }
        )
        logger.info(
            f"apex {apex:g} deg: lemniscate residual {best.best_residual:.4g} "
            f"(labeling {best_perm}), circle residual {circle_residual:.3g}"
        )

    return pd.DataFrame(rows)
