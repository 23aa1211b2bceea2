"""Local degree and bidegree by preimage counting."""

import numpy as np
import pytest

from tests.conftest import perturbed_circle_points, random_triangle
from triangle_inscriber.curves import linear_blend, make_ellipse, make_half_lemniscate, make_spline, make_star, require_embedded
from triangle_inscriber.errors import FlatTargetError, NonC1CurveError
from triangle_inscriber.geometry.shape_space import (
    EQUILATERAL_MINUS,
    EQUILATERAL_PLUS,
    Triangle,
    conjugate,
    hopf,
    orientation,
    shape_distance,
    shape_of,
)
from triangle_inscriber.solver.degree import PROBE_MINUS, PROBE_PLUS, bidegree, local_degree, perturb_probe
from triangle_inscriber.solver.search import solve


def test_default_probes():
    assert orientation(PROBE_MINUS) == -1
    assert orientation(PROBE_PLUS) == 1
    assert abs(hopf(PROBE_MINUS).value - EQUILATERAL_PLUS) < 1e-12
    assert abs(hopf(PROBE_PLUS).value - EQUILATERAL_MINUS) < 1e-12


def test_perturb_probe_stays_on_side(rng):
    probe = shape_of(random_triangle(rng))
    for k in range(6):
        moved = perturb_probe(probe, 1e-4, k)
        assert orientation(moved) == orientation(probe)
        assert shape_distance(moved, probe) == pytest.approx(1e-4, rel=1e-3)


def test_local_degree_on_circle(circle, cfg, degree_cfg, rng):
    probe = shape_of(random_triangle(rng))
    result = local_degree(circle, probe, cfg, degree_cfg)
    assert result.count == 1
    assert result.degree == 1
    assert result.all_regular


def test_conjugate_of_found_triangle(circle, cfg, degree_cfg, rng):
    target = shape_of(random_triangle(rng))
    sol = solve(circle, target, cfg).solutions[0]
    mirrored = conjugate(shape_of(Triangle(*sol.vertices)))
    assert orientation(mirrored) == -orientation(target)
    assert local_degree(circle, mirrored, cfg, degree_cfg).count == 1


def test_local_degree_rejects_flat_probe(circle, cfg):
    with pytest.raises(FlatTargetError):
        local_degree(circle, shape_of(Triangle(0j, 1 + 0j, 2 + 0j)), cfg)


def test_bidegree_circle(circle, cfg, degree_cfg):
    report = bidegree(circle, cfg, degree_cfg)
    assert report.value == (1, 1)
    assert report.preimage_counts == (1, 1)
    assert report.all_regular
    assert report.grid_n == cfg.grid_n
    assert orientation(report.probes[0]) == -1
    assert orientation(report.probes[1]) == 1


def test_bidegree_ellipse(cfg, degree_cfg):
    report = bidegree(make_ellipse(1.5, 1.0), cfg, degree_cfg)
    assert report.value == (1, 1)
    assert report.d_minus == report.preimage_counts[0] % 2


def test_bidegree_needs_c1(cfg):
    with pytest.raises(NonC1CurveError):
        bidegree(make_half_lemniscate(), cfg)


def test_bidegree_probe_sides_checked(circle, cfg):
    with pytest.raises(ValueError):
        bidegree(circle, cfg, probes=(PROBE_PLUS, PROBE_MINUS))


@pytest.mark.slow
def test_parity_stable_on_circle(circle, cfg, degree_cfg, rng):
    plus = minus = 0
    while plus < 20 or minus < 20:
        probe = shape_of(random_triangle(rng))
        if orientation(probe) == 1:
            if plus == 20:
                continue
            plus += 1
        else:
            if minus == 20:
                continue
            minus += 1
        assert local_degree(circle, probe, cfg, degree_cfg).degree == 1


@pytest.mark.slow
def test_bidegree_acceptance_curves(circle, cfg, degree_cfg, rng):
    curves = [
        circle,
        make_ellipse(2.0, 1.0),
        make_ellipse(1.5, 1.0),
        make_star(0.2, 5),
        make_spline(perturbed_circle_points(rng, 12), name="perturbed-circle"),
    ]
    for c in curves:
        assert bidegree(c, cfg, degree_cfg).value == (1, 1), c.name


@pytest.mark.slow
def test_bidegree_constant_along_blend(circle, cfg, degree_cfg):
    family = linear_blend(circle, make_ellipse(1.2, 1.0))
    for s in np.linspace(0, 1, 5):
        c = family(float(s))
        require_embedded(c, cfg.validate_samples)
        assert bidegree(c, cfg, degree_cfg).value == (1, 1)
