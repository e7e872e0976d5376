"""Random configurations for the verification sweeps.

Every sampler takes a ``numpy.random.Generator`` and draws from it only, so a
fixed generator state gives a fixed configuration. Rejection loops keep
drawing from the same generator.
"""

from __future__ import annotations

import math

import numpy as np

from .cross_ratio import CollinearQuadruple
from .errors import GeometryError
from .hilbert import BallSpec
from .linalg import Form, TwoPlane, dot
from .models import (
    GeodesicRay,
    Geometry,
    Triangle,
    distance,
    geodesic_point,
    model_distance,
    reference_point,
)

# colatitude bound keeping spherical samples away from the equator
SPHERE_COLAT_MAX = math.pi / 2 - 0.05
MIN_GAP = 1e-3
MAX_TRIES = 10_000


def random_direction(n: int, rng: np.random.Generator) -> np.ndarray:
    """Unit tangent at the reference point, i.e. (e, 0) with |e| = 1."""
    while True:
        e = rng.standard_normal(n)
        norm = np.linalg.norm(e)
        if norm > 1e-6:
            return np.append(e / norm, 0.0)


def point_at(geometry: Geometry, direction: np.ndarray, r: float) -> np.ndarray:
    """Point at distance r from the reference point along ``direction``."""
    e = direction[:-1]
    if geometry is Geometry.SPHERICAL:
        return np.append(math.sin(r) * e, math.cos(r))
    if geometry is Geometry.HYPERBOLIC:
        return np.append(math.sinh(r) * e, math.cosh(r))
    return np.append(r * e, 1.0)


def random_point(geometry: Geometry, n: int, rng: np.random.Generator, max_radius: float) -> np.ndarray:
    return point_at(geometry, random_direction(n, rng), max_radius * rng.uniform())


def random_tangent(geometry: Geometry, p: np.ndarray, rng: np.random.Generator, against=()) -> np.ndarray:
    """Unit tangent at p, orthogonal (in the model's form) to ``against``."""
    form = geometry.form
    while True:
        g = rng.standard_normal(p.size)
        if geometry is Geometry.EUCLIDEAN:
            g[-1] = 0.0
        elif geometry is Geometry.SPHERICAL:
            g = g - float(p @ g) * p
        else:
            g = g + dot(Form.MINKOWSKI, p, g) * p
        for t in against:
            g = g - dot(form, g, t) * t
        norm2 = dot(form, g, g)
        if norm2 > 1e-8:
            return g / math.sqrt(norm2)


def distinct_params(rng, lo, hi, k=4, gap=MIN_GAP):
    for _ in range(MAX_TRIES):
        s = np.sort(rng.uniform(lo, hi, size=k))
        if np.all(np.diff(s) >= gap):
            return s
    raise RuntimeError("could not draw well separated parameters")


def _sphere_window(base: np.ndarray, d: np.ndarray) -> tuple[float, float] | None:
    """Parameter interval on the great circle keeping colatitude <= SPHERE_COLAT_MAX."""
    m = math.cos(SPHERE_COLAT_MAX)
    amp = math.hypot(base[-1], d[-1])
    if amp <= m * (1 + 1e-9):
        return None
    phase = math.atan2(d[-1], base[-1])
    half = math.acos(m / amp)
    return phase - half, phase + half


def sample_quadruple(geometry: Geometry, n: int, rng: np.random.Generator) -> CollinearQuadruple:
    """Random ordered quadruple on a random geodesic.

    Four arclength parameters are drawn, sorted, checked for gaps of at least
    1e-3 and then assigned to A1..A4 in a random order.
    """
    for _ in range(MAX_TRIES):
        if geometry is Geometry.EUCLIDEAN:
            base = random_point(geometry, n, rng, 2.0)
            lo, hi = -3.0, 3.0
        elif geometry is Geometry.HYPERBOLIC:
            base = random_point(geometry, n, rng, 1.5)
            lo, hi = -1.5, 1.5
        else:
            base = random_point(geometry, n, rng, SPHERE_COLAT_MAX)
        d = random_tangent(geometry, base, rng)
        if geometry is Geometry.SPHERICAL:
            window = _sphere_window(base, d)
            if window is None or window[1] - window[0] < 0.05:
                continue
            lo, hi = window
        s = distinct_params(rng, lo, hi)
        s = s[rng.permutation(4)]
        ray = GeodesicRay(geometry, base, d)
        try:
            return CollinearQuadruple(geometry, tuple(geodesic_point(ray, t) for t in s))
        except GeometryError:
            continue
    raise RuntimeError("quadruple sampler exhausted its retries")


def sample_pair(geometry: Geometry, n: int, rng: np.random.Generator):
    """Two distinct points: spherical within the colatitude bound, hyperbolic within radius 3."""
    radius = {
        Geometry.EUCLIDEAN: 3.0,
        Geometry.SPHERICAL: SPHERE_COLAT_MAX,
        Geometry.HYPERBOLIC: 3.0,
    }[geometry]
    while True:
        p = random_point(geometry, n, rng, radius)
        q = random_point(geometry, n, rng, radius)
        if distance(geometry, p, q) >= MIN_GAP:
            return p, q


def sample_triangle(
    geometry: Geometry, n: int, rng: np.random.Generator, side_range=(0.1, 1.5)
) -> Triangle:
    """Random nondegenerate triangle with all sides in ``side_range``."""
    if n < 2:
        raise ValueError("triangles need n >= 2")
    lo, hi = side_range
    for _ in range(MAX_TRIES):
        A = random_point(geometry, n, rng, 0.05 if geometry is Geometry.SPHERICAL else 1.0)
        t1 = random_tangent(geometry, A, rng)
        t2 = random_tangent(geometry, A, rng, against=(t1,))
        alpha = rng.uniform(0.15, math.pi - 0.15)
        b, c = rng.uniform(lo, hi, size=2)
        try:
            B = geodesic_point(GeodesicRay(geometry, A, t1), c)
            C = geodesic_point(GeodesicRay(geometry, A, math.cos(alpha) * t1 + math.sin(alpha) * t2), b)
            tri = Triangle(geometry, A, B, C)
        except GeometryError:
            continue
        if lo <= tri.sides()[0] <= hi:
            return tri
    raise RuntimeError("triangle sampler exhausted its retries")


def sample_ball_point(ball: BallSpec, n: int, rng: np.random.Generator, fraction: float = 0.95) -> np.ndarray:
    return random_point(ball.geometry, n, rng, fraction * ball.radius)


def _within_bounds(geometry: Geometry, p: np.ndarray) -> bool:
    n = p.size - 1
    r = distance(geometry, reference_point(n), p)
    if geometry is Geometry.SPHERICAL:
        return r <= SPHERE_COLAT_MAX
    return r <= (20.0 if geometry is Geometry.EUCLIDEAN else 4.0)


def sample_pencil(geometry: Geometry, n: int, rng: np.random.Generator):
    """Apex, source quadruple and target geodesic in one 3-dimensional subspace.

    Returns ``(apex, source, target, image)`` where ``image`` is the transferred
    quadruple; configurations whose transferred points
    would leave the model (or lie far out, where conditioning degrades) are
    redrawn.
    """
    from .projective import pencil_transfer

    if n < 2:
        raise ValueError("pencil configurations need n >= 2")
    spread = {Geometry.EUCLIDEAN: 1.0, Geometry.SPHERICAL: 0.3, Geometry.HYPERBOLIC: 0.5}[geometry]
    reach = {Geometry.EUCLIDEAN: 2.0, Geometry.SPHERICAL: 0.5, Geometry.HYPERBOLIC: 1.0}[geometry]
    for _ in range(MAX_TRIES):
        apex = random_point(geometry, n, rng, spread)
        t1 = random_tangent(geometry, apex, rng)
        t2 = random_tangent(geometry, apex, rng, against=(t1,))
        theta = rng.uniform(0.0, 2 * math.pi, size=2)
        r = rng.uniform(0.2, 2 * reach if geometry is not Geometry.SPHERICAL else 0.6, size=2)
        try:
            p0, p1 = (
                geodesic_point(GeodesicRay(geometry, apex, math.cos(a) * t1 + math.sin(a) * t2), ri)
                for ri, a in zip(r, theta)
            )
            ray = GeodesicRay.toward(geometry, p0, p1)
            s = distinct_params(rng, -reach, reach, gap=0.05)
            source_pts = [geodesic_point(ray, t) for t in s]
            # the target crosses the two outermost rays of the pencil, hence all four
            f = rng.uniform(0.25, 1.6, size=2)
            q0, q1 = (
                geodesic_point(GeodesicRay.toward(geometry, apex, x), fi * model_distance(geometry, apex, x))
                for fi, x in zip(f, (source_pts[0], source_pts[-1]))
            )
            order = rng.permutation(4)
            source = CollinearQuadruple(geometry, tuple(source_pts[k] for k in order))
            target = TwoPlane(q0, q1)
            image = pencil_transfer(geometry, apex, source, target)
        except (GeometryError, ValueError):
            continue
        if not all(_within_bounds(geometry, p) for p in (*source.points, *image.points)):
            continue
        if min(model_distance(geometry, p, q) for i, p in enumerate(image.points) for q in image.points[i + 1:]) < 1e-2:
            continue
        return apex, source, target, image
    raise RuntimeError("pencil sampler exhausted its retries")
