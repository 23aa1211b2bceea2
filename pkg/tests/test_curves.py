"""Curve constructors, evaluation and numerical validation."""

import math

import numpy as np
import pytest

from tests.conftest import FigureEight, perturbed_circle_points
from triangle_inscriber.curves import (
    LinearImageCurve,
    ReversedCurve,
    Smoothness,
    linear_blend,
    make_circle,
    make_ellipse,
    make_half_lemniscate,
    make_spline,
    make_star,
    read_point_file,
    require_embedded,
    torus_distance,
    validate_curve,
)
from triangle_inscriber.errors import EmbeddingError, InvalidParameterError, SpecParseError

TWO_PI = 2 * math.pi


def test_circle_evaluation(circle):
    assert circle.point(0.0) == pytest.approx(1 + 0j)
    assert circle.velocity(0.0) == pytest.approx(TWO_PI * 1j)
    assert circle.point(1.25) == pytest.approx(1j)
    z = circle.point(np.array([0.0, 0.5]))
    np.testing.assert_allclose(z, [1, -1], atol=1e-15)


def test_half_lemniscate_shape():
    c = make_half_lemniscate()
    assert c.smoothness is Smoothness.NON_C1
    assert c.point(0.5) == pytest.approx(1 + 0j)
    assert abs(c.point(0.0)) < 1e-15
    assert abs(c.point(1 - 1e-12)) < 1e-9
    # one-sided tangents at the corner lie on the lines at -pi/4 and +pi/4
    right = c.velocity(1e-9)
    left = c.velocity(1 - 1e-9)
    assert np.angle(right) == pytest.approx(-math.pi / 4, abs=1e-6)
    assert abs((left / right).real) < 1e-6


def test_circle_validation(circle):
    report = validate_curve(circle, 256)
    assert report.min_speed == pytest.approx(TWO_PI, abs=1e-9)
    assert report.is_embedded_numerically
    assert report.is_c1_numerically
    assert report.samples_used == 256


def test_ellipse_validation(ellipse):
    report = validate_curve(ellipse, 256)
    assert report.min_speed == pytest.approx(TWO_PI, abs=1e-6)
    assert report.is_embedded_numerically


def test_lemniscate_embedded_but_cornered():
    report = validate_curve(make_half_lemniscate(), 256)
    assert report.is_embedded_numerically
    assert not report.is_c1_numerically
    assert report.max_derivative_jump == pytest.approx(math.sqrt(2), rel=1e-3)


def test_self_crossing_rejected():
    report = validate_curve(FigureEight(), 256)
    assert not report.is_embedded_numerically
    with pytest.raises(EmbeddingError) as exc:
        require_embedded(FigureEight())
    assert exc.value.report.min_separation_ratio <= 0


def test_validate_needs_samples(circle):
    with pytest.raises(InvalidParameterError):
        validate_curve(circle, 8)


@pytest.mark.parametrize(
    "factory",
    [
        lambda: make_ellipse(0, 1),
        lambda: make_ellipse(1, -2),
        lambda: make_star(1.0, 5),
        lambda: make_star(0.2, 1),
        lambda: make_star(0.2, 2.5),
    ],
)
def test_constructor_domains(factory):
    with pytest.raises(InvalidParameterError):
        factory()


def test_star_names_and_validation(star):
    assert star.name == "star:0.2,5"
    assert validate_curve(star).is_embedded_numerically


@pytest.mark.parametrize(
    "factory, lo, hi",
    [
        (make_circle, 0.0, 1.0),
        (lambda: make_ellipse(2.0, 1.0), 0.0, 1.0),
        (lambda: make_star(0.2, 5), 0.0, 1.0),
        (lambda: make_spline(perturbed_circle_points(np.random.default_rng(7), 12)), 0.0, 1.0),
        # away from the corner at t = 0
        (make_half_lemniscate, 0.001, 0.999),
    ],
    ids=["circle", "ellipse", "star", "spline", "lemniscate"],
)
def test_velocity_matches_finite_differences(factory, lo, hi):
    c = factory()
    t = np.linspace(lo, hi, 1024, endpoint=False)
    h = 1e-6
    fd = (c.point(t + h) - c.point(t - h)) / (2 * h)
    v = c.velocity(t)
    assert np.max(np.abs(fd - v) / np.abs(v)) < 1e-5


def test_spline_reproduces_circle():
    theta = TWO_PI * np.arange(32) / 32
    spline = make_spline(np.column_stack([np.cos(theta), np.sin(theta)]))
    t = np.linspace(0, 1, 400, endpoint=False)
    assert np.abs(spline.point(t) - np.exp(1j * TWO_PI * t)).max() < 1e-3


def test_spline_is_periodic_c1(rng):
    spline = make_spline(perturbed_circle_points(rng, 12))
    assert spline.point(0.0) == pytest.approx(spline.point(1.0 - 1e-12), abs=1e-9)
    assert spline.velocity(1e-9) == pytest.approx(spline.velocity(1 - 1e-9), rel=1e-5)
    assert validate_curve(spline).is_c1_numerically


def test_spline_input_checks():
    with pytest.raises(InvalidParameterError):
        make_spline([[0, 0], [1, 0], [0, 1]])
    with pytest.raises(InvalidParameterError):
        make_spline([[0, 0], [1, 0], [1, 1], [1, 0]])
    with pytest.raises(EmbeddingError):
        make_spline([[1, 1], [-1, -1], [-1, 1], [1, -1]])


def test_read_point_file(tmp_path):
    path = tmp_path / "square.txt"
    path.write_text("# corners\n1 0\n0 1\n\n-1 0\n0 -1\n")
    np.testing.assert_allclose(read_point_file(path), [[1, 0], [0, 1], [-1, 0], [0, -1]])


@pytest.mark.parametrize("content", ["1 0\n0 x\n", "1 0\n2\n", "1 0 9\n0 1 9\n-1 0 9\n0 -1 9\n", "1 0\n0 1 9\n", ""])
def test_read_point_file_errors(tmp_path, content):
    path = tmp_path / "bad.txt"
    path.write_text(content)
    with pytest.raises(SpecParseError):
        read_point_file(path)


def test_linear_image_of_circle_is_ellipse(circle, ellipse):
    image = LinearImageCurve(circle, [[2, 0], [0, 1]])
    t = np.linspace(0, 1, 64, endpoint=False)
    np.testing.assert_allclose(image.point(t), ellipse.point(t), atol=1e-14)
    np.testing.assert_allclose(image.velocity(t), ellipse.velocity(t), atol=1e-13)
    with pytest.raises(InvalidParameterError):
        LinearImageCurve(circle, [[1, 0], [0, 0]])


def test_reversed_curve(circle):
    rev = ReversedCurve(circle)
    assert rev.point(0.25) == pytest.approx(-1j)
    assert rev.velocity(0.25) == pytest.approx(-circle.velocity(-0.25))


def test_linear_blend_endpoints(circle, ellipse):
    family = linear_blend(circle, ellipse)
    assert family(0.0) is circle
    assert family(1.0) is ellipse
    mid = family(0.5)
    assert mid.point(0.0) == pytest.approx(1.5 + 0j)
    assert mid.is_c1
    assert not linear_blend(circle, make_half_lemniscate())(0.5).is_c1


def test_torus_distance():
    assert torus_distance(0.1, 0.9) == pytest.approx(0.2)
    assert torus_distance(0.25, 0.25) == 0.0
    assert torus_distance(-0.4, 0.4) == pytest.approx(0.2)
