"""Predictor-corrector tracking of an inscribed triangle along a curve family."""

import logging
import math

import numpy as np

from triangle_inscriber.config import SolverConfig
from triangle_inscriber.curves.base import Curve
from triangle_inscriber.curves.parametric import CurveFamily
from triangle_inscriber.errors import ContinuationError, DiagonalError
from triangle_inscriber.geometry.shape_space import Shape
from triangle_inscriber.solver.search import Solution, make_solution, refine
from triangle_inscriber.solver.triangle_map import ParamTriple, shape_jacobian

logger = logging.getLogger(__name__)


def _sigma_min(c: Curve, p: ParamTriple) -> float:
    try:
        _, jac = shape_jacobian(c, p)
    except DiagonalError:
        return 0.0
    return float(np.linalg.svd(jac, compute_uv=False)[-1])


def continue_solution(
    family: CurveFamily,
    start: Solution,
    target: Shape,
    steps: int,
    cfg: SolverConfig,
) -> Solution:
    """Track `start` (a solution on family(0)) to family(1).

    Secant predictor, Gauss-Newton corrector. A failed correction halves the s-step;
    after cfg.max_halvings halvings the path is abandoned. Raises ContinuationError with
    diagnostic "critical" when the Jacobian lost its conditioning, "divergence" otherwise.
    """
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    cfg.validate()

    sigma0 = _sigma_min(family(0.0), start.p)
    if sigma0 <= cfg.critical_tol:
        raise ContinuationError("start solution is critical", 0.0, "critical")

    s, p = 0.0, start.p
    prev: tuple[float, ParamTriple] | None = None
    ds = 1.0 / steps
    halvings = 0
    total_iters = 0

    while s < 1.0:
        s_next = min(1.0, s + ds)
        curve = family(s_next)
        if prev is None:
            guess = p
        else:
            s_prev, p_prev = prev
            slope = (p.as_array() - p_prev.as_array()) / (s - s_prev)
            guess = ParamTriple.from_array(p.as_array() + slope * (s_next - s))

        result = refine(curve, target, guess, cfg)
        if result.residual <= cfg.residual_accept:
            ratio = _sigma_min(curve, result.p) / sigma0
            if ratio <= cfg.stall_ratio:
                logger.warning(f"continuation reached a near-critical triple at s={s_next:.6g}")
                raise ContinuationError("tracked solution became critical", s_next, "critical")
            prev = (s, p)
            # keep the unwrapped parameters so the secant predictor stays continuous
            s, p = s_next, ParamTriple.from_array(p.as_array() + _wrap(result.p.as_array() - p.as_array()))
            total_iters += result.iterations
            continue

        halvings += 1
        logger.debug(f"corrector failed at s={s_next:.6g} (residual {result.residual:.3g}), halving step")
        if halvings > cfg.max_halvings:
            ratio = _sigma_min(family(s), p) / sigma0
            diagnostic = "critical" if ratio <= math.sqrt(cfg.stall_ratio) else "divergence"
            logger.warning(f"continuation failed at s={s_next:.6g} ({diagnostic})")
            raise ContinuationError("corrector did not converge", s_next, diagnostic)
        ds *= 0.5

    end = family(1.0)
    solution = make_solution(end, target, p.normalized(), total_iters, cfg)
    logger.info(f"tracked solution to s=1 on '{end.name}' (residual {solution.residual:.3g})")
    return solution


def _wrap(d: np.ndarray) -> np.ndarray:
    """Representative of d mod 1 in [-1/2, 1/2)."""
    return np.mod(d + 0.5, 1.0) - 0.5
