import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from curvkit.errors import DegeneratePair, DegenerateTriangle, ModelMismatch, OutOfDisc, OutOfHemisphere
from curvkit.linalg import numeric_rank
from curvkit.models import (
    GeodesicRay,
    Geometry,
    Triangle,
    chart_point,
    chart_sin_distance,
    chart_sinh_distance,
    collinear_check,
    distance,
    geodesic_point,
    geodesic_span,
    sine_rule_residual,
    triangle_angles,
    validate_point,
)
from curvkit.sampling import random_point, sample_triangle
from curvkit.sweep import substream

from .conftest import hyperboloid_at, sphere_at

E, S, H = Geometry.EUCLIDEAN, Geometry.SPHERICAL, Geometry.HYPERBOLIC
mpmath.mp.dps = 40


def test_distance_examples():
    assert distance(E, chart_point([0]), chart_point([3])) == 3
    assert distance(S, [0, 0, 1], [math.sin(1), 0, math.cos(1)]) == pytest.approx(1, abs=1e-15)
    assert distance(H, [0, 0, 1], [math.sinh(1), 0, math.cosh(1)]) == pytest.approx(1, abs=1e-15)


def test_distance_rejects_points_off_model():
    with pytest.raises(ModelMismatch):
        distance(S, [0, 0, 2], [0, 0, 1])
    with pytest.raises(ModelMismatch):
        distance(H, [0, 0, 1], [1, 0, 1])
    with pytest.raises(OutOfHemisphere):
        distance(S, [0, 0, 1], [1, 0, 0])
    with pytest.raises(ModelMismatch):
        distance(S, [0, 0, 1], [0, 0, 0, 1])


def _mp_distance(geometry, p, q):
    """Textbook arccos/arccosh formulas evaluated at 40 digits."""
    p = [mpmath.mpf(float(x)) for x in p]
    q = [mpmath.mpf(float(x)) for x in q]
    if geometry is E:
        return mpmath.sqrt(sum((a - b) ** 2 for a, b in zip(p, q)))
    if geometry is S:
        c = sum(a * b for a, b in zip(p, q)) / mpmath.sqrt(sum(a * a for a in p) * sum(b * b for b in q))
        return mpmath.acos(c)
    m = sum(a * b for a, b in zip(p[:-1], q[:-1])) - p[-1] * q[-1]
    norm = mpmath.sqrt((p[-1] ** 2 - sum(a * a for a in p[:-1])) * (q[-1] ** 2 - sum(b * b for b in q[:-1])))
    return mpmath.acosh(-m / norm)


@pytest.mark.parametrize("geometry", list(Geometry))
def test_distance_against_high_precision_oracle(geometry):
    for i in range(200):
        rng = substream(7, i)
        p = random_point(geometry, 3, rng, 1.4)
        q = random_point(geometry, 3, rng, 1.4)
        expected = float(_mp_distance(geometry, p, q))
        assert distance(geometry, p, q) == pytest.approx(expected, rel=1e-12, abs=1e-15)


@pytest.mark.parametrize("geometry", list(Geometry))
def test_metric_axioms_on_random_triples(geometry):
    radius = 1.5 if geometry is S else 3.0
    for i in range(10_000):
        rng = substream(11, i)
        p, q, r = (random_point(geometry, 2, rng, radius) for _ in range(3))
        dpq, dqp = distance(geometry, p, q), distance(geometry, q, p)
        assert abs(dpq - dqp) <= 1e-12 * (1 + dpq)
        assert distance(geometry, p, p) <= 1e-12
        assert dpq <= distance(geometry, p, r) + distance(geometry, r, q) + 1e-12


def test_chart_sin_distance_examples():
    assert chart_sin_distance([0, 1], [1, 1]) == pytest.approx(math.sqrt(2) / 2, abs=1e-15)
    assert chart_sin_distance([0.3, 1], [0.3, 1]) == 0
    assert chart_sin_distance([1, 1, 1], [1, -1, 1]) == pytest.approx(math.sqrt(8) / 3, abs=1e-15)
    # the naive |u - v| / (|u| |v|) differs off the unit-distance line
    assert 2 / 3 != pytest.approx(chart_sin_distance([1, 1, 1], [1, -1, 1]), abs=1e-3)


def test_chart_sinh_distance_examples():
    assert chart_sinh_distance([0, 0, 1], [0.5, 0, 1]) == pytest.approx(0.5 / math.sqrt(0.75), abs=1e-15)
    assert chart_sinh_distance([0.2, 0.1, 1], [0.2, 0.1, 1]) == 0
    assert chart_sinh_distance([0, 0, 1], [0.8, 0, 1]) == pytest.approx(0.8 / 0.6, abs=1e-15)
    assert chart_sinh_distance([0, 1], [0.8, 1]) == pytest.approx(math.sinh(math.atanh(0.8)), rel=1e-14)
    with pytest.raises(OutOfDisc):
        chart_sinh_distance([0, 0, 1], [1.0, 0, 1])


def test_chart_distance_scale_factor_cancels():
    """sin d = h |u - v| / (|u| |v|) with h the origin-to-line distance; h drops out of the cross ratio."""
    u, v = np.array([1.0, 1, 1]), np.array([1.0, -1, 1])
    h = math.sqrt(2)  # distance from the origin to the line x = 1, z = 1
    naive = np.linalg.norm(u - v) / (np.linalg.norm(u) * np.linalg.norm(v))
    assert chart_sin_distance(u, v) == pytest.approx(h * naive, rel=1e-15)


@given(
    st.lists(st.floats(-3, 3), min_size=2, max_size=2),
    st.lists(st.floats(-3, 3), min_size=2, max_size=2),
)
def test_chart_sin_distance_matches_sine_of_lift_distance(a, b):
    u, v = chart_point(a), chart_point(b)
    pu, pv = u / np.linalg.norm(u), v / np.linalg.norm(v)
    expected = float(mpmath.sin(_mp_distance(S, pu, pv)))
    assert chart_sin_distance(u, v) == pytest.approx(expected, rel=1e-12, abs=1e-15)


def test_geodesic_span_examples():
    plane = geodesic_span(S, [0, 0, 1], [math.sin(1), 0, math.cos(1)])
    assert plane.contains([1, 0, 0]) and plane.contains([0, 0, 1]) and not plane.contains([0, 1, 0])
    plane = geodesic_span(E, chart_point([0]), chart_point([3]))
    assert plane.contains([0, 1]) and plane.contains([1, 0])
    with pytest.raises(DegeneratePair):
        geodesic_span(H, [0, 0, 1], [0, 0, 1])


def test_collinear_check_examples():
    assert collinear_check(E, [chart_point([t, 0]) for t in (0, 1, 2, 4)])
    assert not collinear_check(S, [[0, 0, 1], sphere_at(1), sphere_at(1, axis=1)])
    assert collinear_check(H, [hyperboloid_at(0.3), hyperboloid_at(2, axis=1)])


def test_geodesic_point_examples():
    ray = GeodesicRay(S, [0, 0, 1], [1, 0, 0])
    np.testing.assert_allclose(geodesic_point(ray, math.pi / 4), [math.sqrt(2) / 2, 0, math.sqrt(2) / 2], atol=1e-15)
    ray = GeodesicRay(H, [0, 0, 1], [1, 0, 0])
    np.testing.assert_allclose(geodesic_point(ray, 1.0), [math.sinh(1), 0, math.cosh(1)], atol=1e-15)
    np.testing.assert_array_equal(geodesic_point(ray, 0.0), ray.base)
    with pytest.raises(OutOfHemisphere):
        geodesic_point(GeodesicRay(S, [0, 0, 1], [1, 0, 0]), 2.0)


def test_geodesic_ray_validation():
    with pytest.raises(ValueError):
        GeodesicRay(S, [0, 0, 1], [0, 0, 1])  # not tangent
    with pytest.raises(ValueError):
        GeodesicRay(H, [0, 0, 1], [2, 0, 0])  # not unit


@pytest.mark.parametrize("geometry", list(Geometry))
def test_geodesic_point_reaches_target(geometry):
    for i in range(500):
        rng = substream(3, i)
        p = random_point(geometry, 3, rng, 1.2)
        q = random_point(geometry, 3, rng, 1.2)
        if distance(geometry, p, q) < 1e-6:
            continue
        ray = GeodesicRay.toward(geometry, p, q)
        x = geodesic_point(ray, distance(geometry, p, q))
        assert np.linalg.norm(x - q) <= 1e-10
        validate_point(geometry, x, tol=1e-10)


def test_triangle_angles_euclidean_right_isoceles():
    t = Triangle(E, chart_point([0, 0]), chart_point([1, 0]), chart_point([0, 1]))
    np.testing.assert_allclose(triangle_angles(t), [math.pi / 2, math.pi / 4, math.pi / 4], atol=1e-15)


def test_triangle_angles_spherical_octant():
    r = math.sqrt(2) / 2
    t = Triangle(S, [0, 0, 1], [r, 0, r], [0, r, r])
    assert triangle_angles(t)[0] == pytest.approx(math.pi / 2, abs=1e-15)
    assert sine_rule_residual(t) <= 1e-12


def test_triangle_angles_hyperbolic_equilateral():
    # equilateral triangle of side 1 inscribed around the apex: cosh 1 = 1 + 1.5 sinh^2 R
    R = math.asinh(math.sqrt((math.cosh(1) - 1) / 1.5))
    verts = []
    for k in range(3):
        a = 2 * math.pi * k / 3
        verts.append(np.array([math.sinh(R) * math.cos(a), math.sinh(R) * math.sin(a), math.cosh(R)]))
    t = Triangle(H, *verts)
    np.testing.assert_allclose(t.sides(), [1, 1, 1], atol=1e-14)
    c = mpmath.cosh(1)
    oracle = float(mpmath.acos(c * (c - 1) / mpmath.sinh(1) ** 2))
    assert oracle == pytest.approx(0.9188, abs=5e-5)
    np.testing.assert_allclose(triangle_angles(t), [oracle] * 3, atol=1e-13)


def _cosine_rule_angle(geometry, a, b, c):
    """Angle opposite side a from the law of cosines, at 40 digits."""
    a, b, c = (mpmath.mpf(x) for x in (a, b, c))
    if geometry is E:
        return mpmath.acos((b * b + c * c - a * a) / (2 * b * c))
    if geometry is S:
        return mpmath.acos((mpmath.cos(a) - mpmath.cos(b) * mpmath.cos(c)) / (mpmath.sin(b) * mpmath.sin(c)))
    return mpmath.acos((mpmath.cosh(b) * mpmath.cosh(c) - mpmath.cosh(a)) / (mpmath.sinh(b) * mpmath.sinh(c)))


@pytest.mark.parametrize("geometry", list(Geometry))
def test_triangle_angles_match_law_of_cosines(geometry):
    for i in range(200):
        t = sample_triangle(geometry, 2, substream(5, i))
        a, b, c = t.sides()
        A, B, C = triangle_angles(t)
        assert A == pytest.approx(float(_cosine_rule_angle(geometry, a, b, c)), abs=1e-10)
        assert B == pytest.approx(float(_cosine_rule_angle(geometry, b, c, a)), abs=1e-10)
        assert C == pytest.approx(float(_cosine_rule_angle(geometry, c, a, b)), abs=1e-10)
        if geometry is E:
            assert A + B + C == pytest.approx(math.pi, abs=1e-10)


@pytest.mark.parametrize("geometry", list(Geometry))
def test_sine_rule_on_random_triangles(geometry):
    for i in range(300):
        t = sample_triangle(geometry, 3, substream(13, i))
        assert all(0.1 <= s <= 1.5 for s in t.sides())
        assert sine_rule_residual(t) <= 1e-9


def test_degenerate_triangle_rejected():
    with pytest.raises(DegenerateTriangle):
        Triangle(E, chart_point([0, 0]), chart_point([1, 0]), chart_point([2, 0]))
    with pytest.raises(DegenerateTriangle):
        Triangle(S, [0, 0, 1], sphere_at(0.3), sphere_at(0.9))


def test_model_invariant_of_sampled_points():
    for g in Geometry:
        for i in range(200):
            p = random_point(g, 4, substream(1, i), 1.5)
            assert numeric_rank([p]) == 1
            validate_point(g, p, tol=1e-10)
