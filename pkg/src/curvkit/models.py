"""The three model spaces and their metric geometry.

Points of every geometry live in R^{n+1}:

* Euclidean: chart points ``(x_1, ..., x_n, 1)`` on the hyperplane x_{n+1} = 1
  (build them with :func:`chart_point`);
* Spherical: unit vectors with x_{n+1} > 0 (the open upper hemisphere);
* Hyperbolic: the upper sheet of <x, x>_M = -1.

The reference point (0, ..., 0, 1) belongs to all three.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegeneratePair,
    DegenerateTriangle,
    DimensionMismatch,
    ModelMismatch,
    OutOfDisc,
    OutOfHemisphere,
)
from .linalg import RANK_TOL, Form, TwoPlane, as_vector, dot, gram2, numeric_rank

MODEL_TOL = 1e-10


class Geometry(enum.Enum):
    EUCLIDEAN = "euclidean"
    SPHERICAL = "spherical"
    HYPERBOLIC = "hyperbolic"

    @property
    def form(self) -> Form:
        return Form.MINKOWSKI if self is Geometry.HYPERBOLIC else Form.EUCLIDEAN

    def length_fn(self):
        """x, sin x or sinh x: the function of distance entering cross ratios."""
        return {
            Geometry.EUCLIDEAN: lambda d: d,
            Geometry.SPHERICAL: math.sin,
            Geometry.HYPERBOLIC: math.sinh,
        }[self]


def chart_point(coords) -> np.ndarray:
    """Embed x in R^n as (x, 1) in R^{n+1}."""
    x = as_vector(coords)
    return np.append(x, 1.0)


def reference_point(n: int) -> np.ndarray:
    e = np.zeros(n + 1)
    e[-1] = 1.0
    return e


def validate_point(geometry: Geometry, p, tol: float = MODEL_TOL) -> np.ndarray:
    p = as_vector(p)
    if p.size < 2:
        raise DimensionMismatch("model points need at least 2 ambient coordinates")
    if geometry is Geometry.EUCLIDEAN:
        if abs(p[-1] - 1.0) > 1e-12:
            raise ModelMismatch(f"chart point must have last coordinate 1, got {p[-1]!r}")
    elif geometry is Geometry.SPHERICAL:
        if abs(float(p @ p) - 1.0) > tol:
            raise ModelMismatch("spherical point is not a unit vector")
        if p[-1] <= 0.0:
            raise OutOfHemisphere("point is not in the open upper hemisphere")
    else:
        sq = float(p @ p)
        t = float(p[-1])
        if abs(sq - 2.0 * t * t + 1.0) > tol * max(1.0, sq) or t <= 0.0:
            raise ModelMismatch("point is not on the upper sheet of the hyperboloid")
    return p


def distance(geometry: Geometry, p, q) -> float:
    """Geodesic distance in the given model.

    Uses angle/half-chord forms that stay accurate for nearby points:
    atan2(|p^q|, p.q) on the sphere and 2 asinh(|p-q|_M / 2) on the hyperboloid.
    Both agree with arccos(p.q) and arccosh(-<p,q>_M) respectively.
    """
    p = validate_point(geometry, p)
    q = validate_point(geometry, q)
    if p.shape != q.shape:
        raise ModelMismatch("points come from models of different dimension")
    return model_distance(geometry, p, q)


def model_distance(geometry: Geometry, p: np.ndarray, q: np.ndarray) -> float:
    """:func:`distance` for points already known to be valid."""
    w = q - p
    if geometry is Geometry.EUCLIDEAN:
        return math.sqrt(float(w @ w))
    if geometry is Geometry.SPHERICAL:
        s = math.sqrt(max(gram2(Form.EUCLIDEAN, p, w), 0.0))
        return math.atan2(s, float(p @ q))
    chord2 = max(dot(Form.MINKOWSKI, w, w), 0.0)
    return 2.0 * math.asinh(math.sqrt(chord2) / 2.0)


def chart_sin_distance(u, v) -> float:
    """sin of the spherical distance between the radial lifts of chart points."""
    u = validate_point(Geometry.EUCLIDEAN, u)
    v = validate_point(Geometry.EUCLIDEAN, v)
    # gram2 is invariant under v -> v - u; the shifted form avoids cancellation
    g = max(gram2(Form.EUCLIDEAN, u, v - u), 0.0)
    return math.sqrt(g) / (float(np.linalg.norm(u)) * float(np.linalg.norm(v)))


def chart_sinh_distance(u, v) -> float:
    """sinh of the hyperbolic distance between the hyperboloid lifts of chart points."""
    u = validate_point(Geometry.EUCLIDEAN, u)
    v = validate_point(Geometry.EUCLIDEAN, v)
    for x in (u, v):
        if np.linalg.norm(x[:-1]) >= 1.0 - 1e-12:
            raise OutOfDisc("chart point is not inside the open unit disc")
    g = max(-gram2(Form.MINKOWSKI, u, v - u), 0.0)
    uu = dot(Form.MINKOWSKI, u, u)
    vv = dot(Form.MINKOWSKI, v, v)
    return math.sqrt(g) / math.sqrt(uu * vv)


def geodesic_span(geometry: Geometry, p, q) -> TwoPlane:
    p = validate_point(geometry, p)
    q = validate_point(geometry, q)
    if numeric_rank([p, q]) < 2:
        raise DegeneratePair("points do not determine a unique geodesic")
    return TwoPlane(p, q)


def collinear_check(geometry: Geometry, points, tol: float = RANK_TOL) -> bool:
    pts = [validate_point(geometry, p) for p in points]
    return numeric_rank(pts, tol) <= 2


def _tangent_toward(geometry: Geometry, p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Unnormalized tangent at p pointing along the geodesic to q."""
    w = q - p
    if geometry is Geometry.EUCLIDEAN:
        return w
    if geometry is Geometry.SPHERICAL:
        return w - float(p @ w) * p
    return w + dot(Form.MINKOWSKI, p, w) * p


@dataclass(frozen=True, eq=False)
class GeodesicRay:
    """Unit-speed geodesic ``s -> point`` starting at ``base``."""

    geometry: Geometry
    base: np.ndarray
    direction: np.ndarray

    def __post_init__(self):
        base = validate_point(self.geometry, self.base)
        d = as_vector(self.direction)
        if d.shape != base.shape:
            raise DimensionMismatch("direction and base differ in length")
        form = self.geometry.form
        scale = max(1.0, float(base @ base))
        if self.geometry is Geometry.EUCLIDEAN:
            tangential = abs(d[-1])
        else:
            tangential = abs(dot(form, base, d))
        if tangential > MODEL_TOL * scale:
            raise ValueError("direction is not tangent at the base point")
        if abs(dot(form, d, d) - 1.0) > MODEL_TOL * scale:
            raise ValueError("direction is not a unit vector")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "direction", d)

    @classmethod
    def toward(cls, geometry: Geometry, p, q) -> "GeodesicRay":
        """The ray from p through q."""
        p = validate_point(geometry, p)
        q = validate_point(geometry, q)
        t = _tangent_toward(geometry, p, q)
        norm2 = dot(geometry.form, t, t)
        if norm2 <= 0.0:
            raise DegeneratePair("p and q coincide")
        return cls(geometry, p, t / math.sqrt(norm2))


def geodesic_point(ray: GeodesicRay, s: float) -> np.ndarray:
    b, d = ray.base, ray.direction
    if ray.geometry is Geometry.EUCLIDEAN:
        return b + s * d
    if ray.geometry is Geometry.SPHERICAL:
        p = math.cos(s) * b + math.sin(s) * d
        if p[-1] <= 0.0:
            raise OutOfHemisphere(f"geodesic point at s={s} leaves the upper hemisphere")
        return p
    return math.cosh(s) * b + math.sinh(s) * d


@dataclass(frozen=True, eq=False)
class Triangle:
    geometry: Geometry
    A: np.ndarray
    B: np.ndarray
    C: np.ndarray

    def __post_init__(self):
        pts = [validate_point(self.geometry, x) for x in (self.A, self.B, self.C)]
        if len({x.shape for x in pts}) != 1:
            raise DimensionMismatch("triangle vertices differ in dimension")
        if pts[0].size < 3:
            raise DegenerateTriangle("triangles need n >= 2")
        if numeric_rank(pts) < 3:
            raise DegenerateTriangle("vertices lie on one geodesic")
        for name, x in zip("ABC", pts):
            object.__setattr__(self, name, x)

    @property
    def vertices(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.A, self.B, self.C

    def sides(self) -> tuple[float, float, float]:
        """Side lengths (a, b, c) opposite to the vertices A, B, C."""
        g = self.geometry
        return (
            distance(g, self.B, self.C),
            distance(g, self.C, self.A),
            distance(g, self.A, self.B),
        )


def _angle_between(form: Form, t1: np.ndarray, t2: np.ndarray) -> float:
    # tangent spaces are positive definite for every model, so gram2 >= 0
    s = math.sqrt(max(gram2(form, t1, t2), 0.0))
    return math.atan2(s, dot(form, t1, t2))


def triangle_angles(t: Triangle) -> tuple[float, float, float]:
    """Interior angles at A, B and C, measured between geodesic tangents."""
    g = t.geometry
    angles = []
    for p, q, r in ((t.A, t.B, t.C), (t.B, t.C, t.A), (t.C, t.A, t.B)):
        t1 = _tangent_toward(g, p, q)
        t2 = _tangent_toward(g, p, r)
        angles.append(_angle_between(g.form, t1, t2))
    return tuple(angles)


def sine_rule_ratios(t: Triangle) -> tuple[float, float, float]:
    L = t.geometry.length_fn()
    return tuple(L(side) / math.sin(angle) for side, angle in zip(t.sides(), triangle_angles(t)))


def sine_rule_residual(t: Triangle) -> float:
    r = sine_rule_ratios(t)
    return max(abs(r[0] - r[1]), abs(r[1] - r[2]), abs(r[0] - r[2]))
