"""Central projections from the origin onto the chart {x_{n+1} = 1}, their
inverse lifts, pencil transfers and a sampled perspectivity checker."""

from __future__ import annotations

import enum
import math

import numpy as np

from .cross_ratio import CollinearQuadruple, bracket
from .errors import (
    ApexOnLine,
    EquatorPoint,
    GeometryError,
    IdenticalPlanes,
    NoIntersection,
    NonCoplanarConfiguration,
    OutOfDisc,
)
from .linalg import Form, TwoPlane, as_vector, dot, numeric_rank, plane_intersect_in_3space
from .models import Geometry, geodesic_span, validate_point
from .report import FailureRecord, SampleRow, SweepReport
from .sweep import relative_residual, run_samples, substream

EQUATOR_TOL = 1e-12
DISC_MARGIN = 1e-12


class ProjectionKind(enum.Enum):
    SPHERE_TO_CHART = "sphere"
    HYPERBOLOID_TO_CHART = "hyperboloid"

    @property
    def geometry(self) -> Geometry:
        if self is ProjectionKind.SPHERE_TO_CHART:
            return Geometry.SPHERICAL
        return Geometry.HYPERBOLIC

    @classmethod
    def for_geometry(cls, geometry: Geometry) -> "ProjectionKind":
        if geometry is Geometry.SPHERICAL:
            return cls.SPHERE_TO_CHART
        if geometry is Geometry.HYPERBOLIC:
            return cls.HYPERBOLOID_TO_CHART
        raise ValueError("the Euclidean chart has no central projection")


def project(kind: ProjectionKind, p) -> np.ndarray:
    """Send a model point to the chart along its ray through the origin."""
    p = as_vector(p)
    if kind is ProjectionKind.SPHERE_TO_CHART and abs(p[-1]) < EQUATOR_TOL:
        raise EquatorPoint("points on the equator project to infinity")
    p = validate_point(kind.geometry, p)
    u = p / p[-1]
    u[-1] = 1.0
    return u


def lift(kind: ProjectionKind, u) -> np.ndarray:
    u = validate_point(Geometry.EUCLIDEAN, u)
    if kind is ProjectionKind.SPHERE_TO_CHART:
        return u / np.linalg.norm(u)
    if np.linalg.norm(u[:-1]) >= 1.0 - DISC_MARGIN:
        raise OutOfDisc("chart point is not inside the open unit disc")
    return u / math.sqrt(-dot(Form.MINKOWSKI, u, u))


def to_chart(geometry: Geometry, p) -> np.ndarray:
    """Projection for curved models, identity for chart points."""
    if geometry is Geometry.EUCLIDEAN:
        return validate_point(geometry, p)
    return project(ProjectionKind.for_geometry(geometry), p)


def from_chart(geometry: Geometry, u) -> np.ndarray:
    if geometry is Geometry.EUCLIDEAN:
        return validate_point(geometry, u)
    return lift(ProjectionKind.for_geometry(geometry), u)


def direction_to_point(geometry: Geometry, w: np.ndarray) -> np.ndarray:
    """The model point on the line R*w, or NoIntersection if there is none."""
    w = np.asarray(w, dtype=float)
    scale = float(np.linalg.norm(w))
    if w[-1] < 0.0:
        w = -w
    if geometry is Geometry.EUCLIDEAN:
        if w[-1] <= EQUATOR_TOL * scale:
            raise NoIntersection("lines are parallel in the chart")
        u = w / w[-1]
        u[-1] = 1.0
        return u
    if geometry is Geometry.SPHERICAL:
        if w[-1] <= EQUATOR_TOL * scale:
            raise NoIntersection("intersection lies on the equator")
        return w / scale
    q = dot(Form.MINKOWSKI, w, w)
    if q >= -EQUATOR_TOL * scale**2:
        raise NoIntersection("geodesics do not meet in hyperbolic space")
    return w / math.sqrt(-q)


def pencil_transfer(
    geometry: Geometry, apex, source: CollinearQuadruple, target: TwoPlane
) -> CollinearQuadruple:
    """Slide a quadruple along the pencil of geodesics through ``apex`` onto ``target``.

    Output order follows the source order.
    """
    if source.geometry is not geometry:
        raise ValueError("source quadruple belongs to another geometry")
    apex = validate_point(geometry, apex)
    pts = list(source.points)
    if numeric_rank([apex, *pts]) <= 2:
        raise ApexOnLine("apex lies on the source geodesic")
    if numeric_rank([apex, *pts, target.u, target.v]) > 3:
        raise NonCoplanarConfiguration("apex, source and target span more than a 3-space")
    if target.contains(apex):
        raise NoIntersection("target geodesic passes through the apex")
    images = []
    for p in pts:
        try:
            w = plane_intersect_in_3space(geodesic_span(geometry, apex, p), target)
        except IdenticalPlanes as exc:
            raise NoIntersection(str(exc)) from exc
        images.append(direction_to_point(geometry, w))
    return CollinearQuadruple(geometry, tuple(images))


def perspectivity_check(
    fn,
    sampler,
    count: int,
    tol: float,
    *,
    target_geometry: Geometry,
    seed: int = 0,
    name: str = "perspectivity",
    workers: int | None = None,
) -> SweepReport:
    """Sample collinear quadruples and test that ``fn`` keeps them collinear
    with an unchanged cross ratio.

    ``sampler(rng)`` returns a :class:`CollinearQuadruple`; ``fn`` maps one
    point of its geometry to a point of ``target_geometry``.
    """

    def one(i):
        quad = sampler(substream(seed, 0, i))
        gname = quad.geometry.value
        expected = bracket(quad.geometry, *quad.points)
        inputs = [p.tolist() for p in quad.points]
        try:
            images = [validate_point(target_geometry, fn(p)) for p in quad.points]
            actual = bracket(target_geometry, *images)
        except (GeometryError, ZeroDivisionError) as exc:
            fail = FailureRecord(i, gname, inputs, expected, None, math.inf, type(exc).__name__)
            return SampleRow(gname, i, math.inf, False), fail, quad.n
        res = relative_residual(actual, expected)
        collinear = numeric_rank(images) <= 2
        ok = collinear and res <= tol
        fail = None
        if not ok:
            reason = "cross ratio changed" if collinear else "images not collinear"
            fail = FailureRecord(i, gname, inputs, expected, actual, res, reason)
        return SampleRow(gname, i, res, ok), fail, quad.n

    results = run_samples(one, count, workers)
    rows = [r for r, _, _ in results]
    fails = [f for _, f, _ in results if f is not None]
    geoms = sorted({r.geometry for r in rows}) or [target_geometry.value]
    n = results[0][2] if results else 0
    return SweepReport.from_rows(name, n, seed, tol, geoms, rows, fails)
