"""Hilbert metrics on geodesic balls centred at (0, ..., 0, 1) and the maps
that identify those balls with hyperbolic space.

A geodesic ball of radius rho projects to the Euclidean chart ball of radius
rho, tan(rho) or tanh(rho); boundary hits are found there as roots of a
quadratic and lifted back, and all distances are then measured in the model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CoincidentPoints, PointOutsideBall, RadiusOutOfRange
from .models import Geometry, model_distance, reference_point, validate_point
from .projective import from_chart, to_chart

INTERIOR_MARGIN = 1e-9


def _center_distance(geometry: Geometry, p: np.ndarray) -> float:
    """Distance from the reference point (0,...,0,1) to a valid model point."""
    r = math.sqrt(float(p[:-1] @ p[:-1]))
    if geometry is Geometry.SPHERICAL:
        return math.atan2(r, float(p[-1]))
    if geometry is Geometry.HYPERBOLIC:
        return math.asinh(r)
    return r


@dataclass(frozen=True)
class BallSpec:
    geometry: Geometry
    radius: float

    def __post_init__(self):
        r = float(self.radius)
        if not math.isfinite(r) or r <= 0.0:
            raise RadiusOutOfRange(f"radius must be positive, got {r}")
        if self.geometry is Geometry.SPHERICAL and r >= math.pi / 2:
            raise RadiusOutOfRange("spherical balls need radius < pi/2")
        object.__setattr__(self, "radius", r)

    @property
    def chart_radius(self) -> float:
        """Radius of the image ball in the Euclidean chart."""
        if self.geometry is Geometry.SPHERICAL:
            return math.tan(self.radius)
        if self.geometry is Geometry.HYPERBOLIC:
            return math.tanh(self.radius)
        return self.radius

    def center(self, n: int) -> np.ndarray:
        return reference_point(n)

    def check_inside(self, p) -> np.ndarray:
        p = validate_point(self.geometry, p)
        if _center_distance(self.geometry, p) > self.radius - INTERIOR_MARGIN:
            raise PointOutsideBall(f"point is not strictly inside the ball of radius {self.radius}")
        return p


@dataclass(frozen=True, eq=False)
class BoundaryHit:
    point: np.ndarray
    ray_parameter: float


def _chord_exit(x: np.ndarray, d: np.ndarray, R: float) -> float:
    """Positive t with |x + t d| = R, for |x| < R."""
    a = float(d @ d)
    b = float(x @ d)
    c = float(x @ x) - R * R
    disc = math.sqrt(b * b - a * c)
    # pick the cancellation-free quadratic formula branch
    if b >= 0.0:
        return -c / (b + disc)
    return (disc - b) / a


def _chart_hit(ball: BallSpec, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Exit of the chart ray from u through v (space parts), lifted to the model."""
    t = _chord_exit(u, v - u, ball.chart_radius)
    hit = np.append(u + t * (v - u), 1.0)
    g = ball.geometry
    if g is Geometry.EUCLIDEAN:
        return hit
    if g is Geometry.SPHERICAL:
        return hit / math.sqrt(float(hit @ hit))
    # the boundary chart radius tanh(rho) < 1, so the lift is always defined
    return hit / math.sqrt(1.0 - float(hit[:-1] @ hit[:-1]))


def _boundary_hit(ball: BallSpec, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    g = ball.geometry
    return _chart_hit(ball, to_chart(g, x)[:-1], to_chart(g, y)[:-1])


def boundary_hit(ball: BallSpec, x, y) -> BoundaryHit:
    """Where the geodesic ray from x through y leaves the ball."""
    x = ball.check_inside(x)
    y = ball.check_inside(y)
    if model_distance(ball.geometry, x, y) < INTERIOR_MARGIN:
        raise CoincidentPoints("x and y must be distinct")
    b = _boundary_hit(ball, x, y)
    return BoundaryHit(b, model_distance(ball.geometry, x, b))


def hilbert_distance(ball: BallSpec, x, y) -> float:
    x = ball.check_inside(x)
    y = ball.check_inside(y)
    if np.array_equal(x, y):
        return 0.0
    g = ball.geometry
    L = g.length_fn()
    u, v = x[:-1] / x[-1], y[:-1] / y[-1]
    bxy = _chart_hit(ball, u, v)
    byx = _chart_hit(ball, v, u)
    logs = [
        math.log(L(model_distance(g, x, bxy))),
        -math.log(L(model_distance(g, y, bxy))),
        math.log(L(model_distance(g, y, byx))),
        -math.log(L(model_distance(g, x, byx))),
    ]
    return max(math.fsum(logs), 0.0)


def bk_isometry(ball: BallSpec, x) -> np.ndarray:
    """Map a point of the ball to the hyperboloid.

    Project to the chart, rescale the chart ball onto the unit disc and lift.
    Under this map the Hilbert distance is twice the hyperbolic distance of the
    images. Euclidean balls are accepted too (the classical Klein model).
    """
    x = ball.check_inside(x)
    u = to_chart(ball.geometry, x).copy()
    u[:-1] /= ball.chart_radius
    return from_chart(Geometry.HYPERBOLIC, u)
