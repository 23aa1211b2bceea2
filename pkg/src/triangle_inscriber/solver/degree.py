"""Local degree mod 2 by preimage counting, and the bidegree over both orientation sides."""

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import null_space

from triangle_inscriber.config import DegreeConfig, SolverConfig
from triangle_inscriber.curves.base import Curve, require_embedded
from triangle_inscriber.errors import FlatTargetError, NonC1CurveError, RegularityError
from triangle_inscriber.geometry.shape_space import Shape, Triangle, orientation, shape_of
from triangle_inscriber.solver.search import solve

logger = logging.getLogger(__name__)

# Equilateral probes: hopf e^{+i pi/3} is the orientation -1 side, e^{-i pi/3} the +1 side.
PROBE_MINUS = shape_of(Triangle(0j, 1 + 0j, complex(0.5, -np.sqrt(3) / 2)))
PROBE_PLUS = shape_of(Triangle(0j, 1 + 0j, complex(0.5, np.sqrt(3) / 2)))


@dataclass(frozen=True)
class LocalDegree:
    degree: int
    count: int
    probe: Shape
    all_regular: bool
    retries: int


@dataclass
class BidegreeReport:
    d_minus: int
    d_plus: int
    probes: tuple[Shape, Shape]
    preimage_counts: tuple[int, int]
    all_regular: bool
    grid_n: int
    retries: tuple[int, int] = field(default=(0, 0))

    @property
    def value(self) -> tuple[int, int]:
        return (self.d_minus, self.d_plus)


def perturb_probe(probe: Shape, step: float, k: int) -> Shape:
    """Move the probe by `step` along the k-th of the 6 signed tangent directions at it."""
    s = probe.as_vector()
    basis = null_space(s[None, :])
    direction = basis[:, k % 3] * (1.0 if (k // 3) % 2 == 0 else -1.0)
    moved = Shape.from_vector(s + step * direction)
    if orientation(moved) != orientation(probe):
        raise FlatTargetError(f"perturbation step {step} crossed the flat locus")
    return moved


def local_degree(c: Curve, probe: Shape, cfg: SolverConfig, degree_cfg: DegreeConfig | None = None) -> LocalDegree:
    """Count accepted preimages of `probe`; the degree is the count mod 2.

    A probe counts as a regular value when every preimage is non-critical and, with
    check_stability on, a perturbed probe has a count of the same parity. Otherwise the
    probe is perturbed and the count retried.
    """
    degree_cfg = degree_cfg or DegreeConfig()
    if orientation(probe) == 0:
        raise FlatTargetError("local degree needs a non-flat probe")
    require_embedded(c, cfg.validate_samples)

    current = probe
    for attempt in range(degree_cfg.max_retries + 1):
        report = solve(c, current, cfg, check_curve=False)
        count = len(report.solutions)
        all_regular = all(sol.regular for sol in report.solutions)
        stable = True
        if all_regular and degree_cfg.check_stability:
            nearby = perturb_probe(current, degree_cfg.perturbation, attempt)
            nearby_count = len(solve(c, nearby, cfg, check_curve=False).solutions)
            stable = nearby_count % 2 == count % 2
        if all_regular and stable:
            return LocalDegree(degree=count % 2, count=count, probe=current, all_regular=True, retries=attempt)

        logger.warning(
            f"[{c.name}] probe not a regular value (count={count}, regular={all_regular}, "
            f"stable={stable}); retry {attempt + 1}/{degree_cfg.max_retries}"
        )
        current = perturb_probe(probe, degree_cfg.perturbation, attempt)

    logger.error(f"[{c.name}] no regular probe found after {degree_cfg.max_retries} retries")
    raise RegularityError(f"preimages on '{c.name}' stayed critical or unstable after {degree_cfg.max_retries} retries")


def bidegree(
    c: Curve,
    cfg: SolverConfig,
    degree_cfg: DegreeConfig | None = None,
    probes: tuple[Shape, Shape] = (PROBE_MINUS, PROBE_PLUS),
) -> BidegreeReport:
    """Local degrees at one probe on each side of the flat locus, minus side first."""
    if not c.is_c1:
        raise NonC1CurveError(f"bidegree needs a C1 curve, '{c.name}' is {c.smoothness.value}")
    minus, plus = probes
    if orientation(minus) != -1 or orientation(plus) != 1:
        raise ValueError("probes must have orientation -1 and +1, in that order")

    lo = local_degree(c, minus, cfg, degree_cfg)
    hi = local_degree(c, plus, cfg, degree_cfg)
    logger.info(f"[{c.name}] bidegree ({lo.degree}, {hi.degree}) from counts ({lo.count}, {hi.count})")
    return BidegreeReport(
        d_minus=lo.degree,
        d_plus=hi.degree,
        probes=(lo.probe, hi.probe),
        preimage_counts=(lo.count, hi.count),
        all_regular=lo.all_regular and hi.all_regular,
        grid_n=cfg.grid_n,
        retries=(lo.retries, hi.retries),
    )
