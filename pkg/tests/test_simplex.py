"""n-simplex shapes, flatness and the circumsphere oracle."""

import math

import numpy as np
import pytest

from triangle_inscriber.errors import DegenerateTriangleError, FlatTargetError
from triangle_inscriber.geometry.shape_space import Triangle, shape_of
from triangle_inscriber.geometry.simplex import flatness, simplex_shape, sphere_oracle
from triangle_inscriber.solver.search import circle_oracle

STANDARD_3 = np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]], dtype=float)
REGULAR_TETRA = np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], dtype=float)


def random_tetrahedron(rng):
    while True:
        z = rng.normal(size=(4, 3))
        if abs(flatness(simplex_shape(z))) > 1e-3:
            return z


def test_standard_simplex():
    s = simplex_shape(STANDARD_3)
    np.testing.assert_allclose(s.vectors, np.eye(3) / math.sqrt(3), atol=1e-15)
    assert s.n == 3
    assert flatness(s) == pytest.approx(3 ** -1.5, abs=1e-14)


def test_invariance():
    moved = 2.5 * STANDARD_3 + np.array([1.0, -2.0, 0.5])
    assert simplex_shape(moved).distance(simplex_shape(STANDARD_3)) < 1e-12


def test_two_dimensional_case_matches_shape_of():
    pts = np.array([[0.0, 0.0], [2.0, 0.5], [0.3, 1.7]])
    s = simplex_shape(pts)
    t = shape_of(Triangle.from_pairs(pts))
    np.testing.assert_allclose(s.vectors.ravel(), t.as_vector(), atol=1e-15)
    assert flatness(s) == pytest.approx(t.det, abs=1e-15)


def test_flatness_repeated_vertex_and_swap(rng):
    z = random_tetrahedron(rng)
    z[2] = z[1]
    assert flatness(simplex_shape(z)) == pytest.approx(0.0, abs=1e-15)

    z = random_tetrahedron(rng)
    swapped = z[[0, 2, 1, 3]]
    assert np.sign(flatness(simplex_shape(swapped))) == -np.sign(flatness(simplex_shape(z)))


def test_flatness_sign_stable_under_small_perturbation(rng):
    for _ in range(50):
        z = random_tetrahedron(rng)
        sign = np.sign(flatness(simplex_shape(z)))
        nudged = z + 1e-6 * rng.normal(size=z.shape)
        assert np.sign(flatness(simplex_shape(nudged))) == sign


def test_degenerate_and_bad_input():
    with pytest.raises(DegenerateTriangleError):
        simplex_shape(np.ones((4, 3)))
    with pytest.raises(ValueError):
        simplex_shape(np.zeros((3, 3)))


def test_regular_tetrahedron_oracle():
    out = sphere_oracle(REGULAR_TETRA)
    np.testing.assert_allclose(out, REGULAR_TETRA / math.sqrt(3), atol=1e-12)


def test_random_tetrahedra_oracle(rng):
    for _ in range(50):
        z = random_tetrahedron(rng)
        out = sphere_oracle(z)
        np.testing.assert_allclose(np.linalg.norm(out, axis=1), 1.0, atol=1e-10)
        assert simplex_shape(out).distance(simplex_shape(z)) < 1e-10
        # placing an already placed simplex changes nothing
        np.testing.assert_allclose(sphere_oracle(out), out, atol=1e-10)


def test_flat_target_rejected():
    flat = np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]], dtype=float)
    with pytest.raises(FlatTargetError):
        sphere_oracle(flat)


def test_planar_oracle_agrees_with_circle_oracle():
    pts = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    out = sphere_oracle(pts)
    t = np.mod(np.arctan2(out[:, 1], out[:, 0]) / (2 * math.pi), 1.0)
    p = circle_oracle(Triangle.from_pairs(pts))
    np.testing.assert_allclose(t, p.as_array(), atol=1e-12)
