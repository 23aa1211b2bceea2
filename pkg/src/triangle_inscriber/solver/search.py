"""Inscribe a target shape on a curve: circle oracle, lattice scan and Gauss-Newton refinement."""

import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from triangle_inscriber.config import SolverConfig
from triangle_inscriber.curves.base import Curve, require_embedded, torus_distance
from triangle_inscriber.errors import DiagonalError, FlatTargetError
from triangle_inscriber.geometry.shape_space import Shape, Triangle, orientation, shape_distance, shape_of
from triangle_inscriber.solver.triangle_map import (
    COINCIDENCE_TOL,
    ParamTriple,
    is_critical,
    shape_jacobian,
    shape_map,
)

logger = logging.getLogger(__name__)

Status = Literal["found", "not_found", "degenerate_target"]

FLAT_TARGET_TOL = 1e-12

_ARMIJO_C1 = 1e-4
_MIN_STEP = 1e-10
_POLISH_STEPS = 3
_STALL_RATE = 1e-6

# Scan neighbourhood: the 26 lattice neighbours of a point.
_NEIGHBOURS = [off for off in itertools.product((-1, 0, 1), repeat=3) if off != (0, 0, 0)]


@dataclass(frozen=True)
class Solution:
    p: ParamTriple
    residual: float
    vertices: tuple[complex, complex, complex]
    regular: bool
    newton_iters: int


@dataclass
class SolveReport:
    target: Shape
    curve_name: str
    solutions: list[Solution]
    scan_minima_examined: int
    status: Status
    grid_n: int
    best_residual: float = math.inf
    min_scan_residual: float = math.inf

    @property
    def found(self) -> bool:
        return self.status == "found"


@dataclass
class RefineResult:
    p: ParamTriple
    residual: float
    iterations: int
    history: list[float] = field(default_factory=list)


def circle_oracle(target: Triangle) -> ParamTriple:
    """The unique parameter triple on the unit circle inscribing the target.

    Places the target's circumcircle onto the unit circle and reads off the vertex angles.
    """
    s = shape_of(target)
    if abs(s.det) <= FLAT_TARGET_TOL:
        raise FlatTargetError(f"target {target.as_pairs()} is flat")

    # circumcenter of (0, w1, w2) on the normalised representative
    b, c = s.w1, s.w2
    d = 2.0 * (b.real * c.imag - b.imag * c.real)
    bb, cc = abs(b) ** 2, abs(c) ** 2
    center = complex((c.imag * bb - b.imag * cc) / d, (b.real * cc - c.real * bb) / d)
    radius = abs(center)

    angles = [np.angle((z - center) / radius) for z in (0j, b, c)]
    return ParamTriple.from_array(np.mod(np.array(angles) / (2 * math.pi), 1.0))


def scan_residuals(c: Curve, target: Shape, grid_n: int, diag_exclusion: float) -> np.ndarray:
    """Shape distance to the target on the grid_n^3 lattice; inf near the diagonal.

    Evaluated slab by slab along t0.
    """
    t = np.arange(grid_n) / grid_n
    z = c.point(t)
    admissible_pair = torus_distance(t[:, None], t[None, :]) > diag_exclusion
    tw1, tw2 = target.w1, target.w2

    residuals = np.full((grid_n, grid_n, grid_n), np.inf)
    for i in range(grid_n):
        w1 = (z - z[i])[:, None]
        w2 = (z - z[i])[None, :]
        norm = np.sqrt(np.abs(w1) ** 2 + np.abs(w2) ** 2)
        ok = admissible_pair & admissible_pair[i][:, None] & admissible_pair[i][None, :] & (norm > COINCIDENCE_TOL)
        with np.errstate(divide="ignore", invalid="ignore"):
            r2 = np.abs(w1 / norm - tw1) ** 2 + np.abs(w2 / norm - tw2) ** 2
        residuals[i] = np.where(ok, np.sqrt(r2), np.inf)
    return residuals


def scan_minima(residuals: np.ndarray, limit: int) -> list[tuple[float, ParamTriple]]:
    """Lattice points not larger than any of their 26 periodic neighbours, best first."""
    n = residuals.shape[0]
    is_min = np.isfinite(residuals)
    for off in _NEIGHBOURS:
        is_min &= residuals <= np.roll(residuals, off, axis=(0, 1, 2))
    idx = np.argwhere(is_min)
    if len(idx) == 0:
        return []
    values = residuals[is_min]
    order = np.lexsort((idx[:, 2], idx[:, 1], idx[:, 0], values))[:limit]
    return [(float(values[k]), ParamTriple.from_array(idx[k] / n)) for k in order]


def _objective(c: Curve, target_vec: np.ndarray, x: np.ndarray) -> float:
    try:
        r = shape_map(c, ParamTriple.from_array(x)).as_vector() - target_vec
    except DiagonalError:
        return math.inf
    return float(r @ r)


def refine(c: Curve, target: Shape, p0: ParamTriple, cfg: SolverConfig) -> RefineResult:
    """Damped Gauss-Newton on the squared chordal shape distance.

    Stops at newton_tol (after at most a few polishing steps), on stagnation, or when the
    Armijo backtracking cannot find a decrease.
    """
    target_vec = target.as_vector()
    x = p0.as_array()
    history: list[float] = []
    iterations = 0
    polish_left: int | None = None

    while iterations < cfg.newton_max_iter:
        try:
            s, jac = shape_jacobian(c, ParamTriple.from_array(x))
        except DiagonalError:
            break
        r = s - target_vec
        f = float(r @ r)
        history.append(math.sqrt(f))
        if f <= cfg.newton_tol and polish_left is None:
            polish_left = _POLISH_STEPS
        if polish_left is not None:
            if polish_left == 0:
                break
            polish_left -= 1

        delta = np.linalg.lstsq(jac, -r, rcond=None)[0]
        if not np.all(np.isfinite(delta)) or np.linalg.norm(delta) <= 1e-16:
            break
        slope = float(2.0 * (jac.T @ r) @ delta)

        alpha = 1.0
        f_new = math.inf
        while alpha >= _MIN_STEP:
            f_new = _objective(c, target_vec, x + alpha * delta)
            if f_new <= f + _ARMIJO_C1 * alpha * slope:
                break
            alpha *= 0.5
        if alpha < _MIN_STEP or f_new >= f:
            break

        x = x + alpha * delta
        iterations += 1
        if polish_left is not None and f_new > 0.5 * f:
            history.append(math.sqrt(f_new))
            break
        if polish_left is None and f - f_new <= _STALL_RATE * f:
            history.append(math.sqrt(f_new))
            break
    else:
        history.append(math.sqrt(_objective(c, target_vec, x)))

    p = ParamTriple.from_array(x).normalized()
    try:
        residual = shape_distance(shape_map(c, p), target)
    except DiagonalError:
        residual = math.inf
    return RefineResult(p=p, residual=residual, iterations=iterations, history=history)


def make_solution(c: Curve, target: Shape, p: ParamTriple, iterations: int, cfg: SolverConfig) -> Solution:
    z = c.point(p.as_array())
    return Solution(
        p=p,
        residual=shape_distance(shape_map(c, p), target),
        vertices=(complex(z[0]), complex(z[1]), complex(z[2])),
        regular=not is_critical(c, p, cfg.critical_tol).critical,
        newton_iters=iterations,
    )


def solve(c: Curve, target: Shape, cfg: SolverConfig, check_curve: bool = True) -> SolveReport:
    """Find all parameter triples whose inscribed triangle has the target shape."""
    cfg.validate()
    if check_curve:
        require_embedded(c, cfg.validate_samples)

    residuals = scan_residuals(c, target, cfg.grid_n, cfg.diag_exclusion)
    finite = residuals[np.isfinite(residuals)]
    min_scan = float(finite.min()) if finite.size else math.inf
    candidates = scan_minima(residuals, cfg.max_candidates)
    logger.debug(f"[{c.name}] scan {cfg.grid_n}^3: {len(candidates)} minima, best={min_scan:.3g}")

    refined: list[RefineResult] = [refine(c, target, p0, cfg) for _, p0 in candidates]
    refined.sort(key=lambda r: (r.residual, r.p.t0, r.p.t1, r.p.t2))
    best = refined[0].residual if refined else math.inf

    kept: list[RefineResult] = []
    for res in refined:
        if res.residual > cfg.residual_accept:
            break
        # refinement may slide into the excluded band around the diagonal (flat targets)
        if res.p.min_pair_distance() <= cfg.diag_exclusion:
            continue
        if all(res.p.distance(k.p) > cfg.dedup_tol for k in kept):
            kept.append(res)
    solutions = [make_solution(c, target, r.p, r.iterations, cfg) for r in kept]

    if solutions:
        status: Status = "found"
    elif orientation(target, FLAT_TARGET_TOL) == 0:
        status = "degenerate_target"
    else:
        status = "not_found"

    logger.info(
        f"[{c.name}] {status}: {len(solutions)} solution(s) from {len(candidates)} scan minima "
        f"(best residual {best:.3g})"
    )
    return SolveReport(
        target=target,
        curve_name=c.name,
        solutions=solutions,
        scan_minima_examined=len(candidates),
        status=status,
        grid_n=cfg.grid_n,
        best_residual=best,
        min_scan_residual=min_scan,
    )


def solve_labelings(
    c: Curve, triangle: Triangle, cfg: SolverConfig
) -> list[tuple[tuple[int, int, int], SolveReport]]:
    """Solve for every vertex ordering of the triangle; the curve is validated once."""
    cfg.validate()
    require_embedded(c, cfg.validate_samples)
    results = []
    for perm in itertools.permutations(range(3)):
        report = solve(c, shape_of(triangle.permuted(perm)), cfg, check_curve=False)
        results.append((perm, report))
    return results
