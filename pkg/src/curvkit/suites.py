"""Seeded verification suites, one per claim.

Each suite draws every sample from its own substream ``(seed, geometry, index)``
and reports a residual per sample; see :data:`SUITES` for the catalogue.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cross_ratio import CollinearQuadruple, bracket, cross_ratio
from .errors import GeometryError
from .hilbert import BallSpec, bk_isometry, hilbert_distance
from .linalg import numeric_rank
from .models import (
    GeodesicRay,
    Geometry,
    chart_sin_distance,
    chart_sinh_distance,
    distance,
    geodesic_point,
    sine_rule_residual,
    validate_point,
)
from .projective import ProjectionKind, lift, project
from .report import FailureRecord, SampleRow, SweepReport
from .sampling import (
    distinct_params,
    random_point,
    random_tangent,
    sample_ball_point,
    sample_pair,
    sample_pencil,
    sample_quadruple,
    sample_triangle,
)
from .sweep import relative_residual, run_samples, substream

E, S, H = Geometry.EUCLIDEAN, Geometry.SPHERICAL, Geometry.HYPERBOLIC

HILBERT_RADII = {
    S: (math.pi / 6, math.pi / 3),
    H: (0.3, 1.2),
    E: (0.5, 2.0),
}
HOMOTHETY_FACTORS = (0.5, 3.0, 10.0)
DEGENERATE_SCALES = (1e-2, 1e-3)
DEGENERATE_RATIO_RANGE = (50.0, 200.0)


@dataclass
class SuiteConfig:
    suite: str
    geometries: tuple[Geometry, ...] = ()
    n: int = 2
    samples: int | None = None
    seed: int = 0
    tol: float | None = None
    fmt: str = "json"

    def __post_init__(self):
        if self.suite not in SUITES:
            raise KeyError(f"unknown suite {self.suite!r}")
        entry = SUITES[self.suite]
        if not self.geometries:
            self.geometries = entry.geometries
        self.geometries = tuple(self.geometries)
        if self.samples is None:
            self.samples = entry.samples
        if self.tol is None:
            self.tol = entry.tol
        if self.samples < 1:
            raise ValueError("sample count must be >= 1")
        if not self.tol > 0:
            raise ValueError("tolerance must be > 0")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.fmt not in ("json", "csv"):
            raise ValueError(f"unknown format {self.fmt!r}")


@dataclass
class Outcome:
    """Result of one sample."""

    residual: float
    ok: bool
    inputs: list = field(default_factory=list)
    expected: float | None = None
    actual: float | None = None
    reason: str = ""


def _pts(points) -> list:
    return [np.asarray(p).tolist() for p in points]


def _projection_outcome(geometry, quad: CollinearQuadruple, tol, projection) -> Outcome:
    kind = ProjectionKind.for_geometry(geometry)
    expected = cross_ratio(quad)
    images = [validate_point(E, projection(kind, p)) for p in quad.points]
    actual = bracket(E, *images)
    res = relative_residual(actual, expected)
    collinear = numeric_rank(images) <= 2
    reason = "" if collinear else "chart images not collinear"
    return Outcome(res, collinear and res <= tol, _pts(quad.points), expected, actual, reason)


def theorem_sample(cfg, geometry, rng, projection=project) -> Outcome:
    quad = sample_quadruple(geometry, cfg.n, rng)
    return _projection_outcome(geometry, quad, cfg.tol, projection)


def distance_identity_sample(cfg, geometry, rng) -> Outcome:
    p, q = sample_pair(geometry, cfg.n, rng)
    kind = ProjectionKind.for_geometry(geometry)
    u, v = project(kind, p), project(kind, q)
    d = distance(geometry, lift(kind, u), lift(kind, v))
    if geometry is S:
        expected, actual = math.sin(d), chart_sin_distance(u, v)
    else:
        expected, actual = math.sinh(d), chart_sinh_distance(u, v)
    res = abs(actual - expected) / expected
    return Outcome(res, res <= cfg.tol, _pts((u, v)), expected, actual)


def pencil_sample(cfg, geometry, rng) -> Outcome:
    apex, source, target, image = sample_pencil(geometry, max(cfg.n, 2), rng)
    expected, actual = cross_ratio(source), cross_ratio(image)
    res = relative_residual(actual, expected)
    inputs = _pts((apex, *source.points, target.u, target.v))
    return Outcome(res, res <= cfg.tol, inputs, expected, actual)


def sine_rule_sample(cfg, geometry, rng) -> Outcome:
    tri = sample_triangle(geometry, max(cfg.n, 2), rng)
    res = sine_rule_residual(tri)
    return Outcome(res, res <= cfg.tol, _pts(tri.vertices), 0.0, res)


def _radius_for(geometry, rng):
    radii = HILBERT_RADII[geometry]
    return radii[int(rng.integers(len(radii)))]


def hilbert_isometry_sample(cfg, geometry, rng) -> Outcome:
    ball = BallSpec(geometry, _radius_for(geometry, rng))
    x = sample_ball_point(ball, cfg.n, rng)
    y = sample_ball_point(ball, cfg.n, rng)
    kind = ProjectionKind.for_geometry(geometry)
    flat = BallSpec(E, ball.chart_radius)
    expected = hilbert_distance(flat, project(kind, x), project(kind, y))
    actual = hilbert_distance(ball, x, y)
    res = relative_residual(actual, expected)
    return Outcome(res, res <= cfg.tol, _pts((x, y)) + [[ball.radius]], expected, actual)


def homothety_sample(cfg, geometry, rng) -> Outcome:
    rho = rng.uniform(0.2, 5.0)
    ball = BallSpec(E, rho)
    x = sample_ball_point(ball, cfg.n, rng)
    y = sample_ball_point(ball, cfg.n, rng)
    expected = hilbert_distance(ball, x, y)
    worst, actual = 0.0, expected
    for lam in HOMOTHETY_FACTORS:
        sx, sy = x.copy(), y.copy()
        sx[:-1] *= lam
        sy[:-1] *= lam
        h = hilbert_distance(BallSpec(E, lam * rho), sx, sy)
        r = relative_residual(h, expected)
        if r >= worst:
            worst, actual = r, h
    return Outcome(worst, worst <= cfg.tol, _pts((x, y)) + [[rho]], expected, actual)


def bk_factor_sample(cfg, geometry, rng) -> Outcome:
    ball = BallSpec(geometry, _radius_for(geometry, rng))
    x = sample_ball_point(ball, cfg.n, rng)
    y = sample_ball_point(ball, cfg.n, rng)
    expected = 2.0 * distance(H, bk_isometry(ball, x), bk_isometry(ball, y))
    actual = hilbert_distance(ball, x, y)
    res = relative_residual(actual, expected)
    return Outcome(res, res <= cfg.tol, _pts((x, y)) + [[ball.radius]], expected, actual)


def _param_cross_ratio(t) -> float:
    d = lambda i, j: abs(t[i] - t[j])  # noqa: E731
    return d(1, 3) / d(2, 3) * d(2, 0) / d(1, 0)


def degenerate_limit_sample(cfg, geometry, rng) -> Outcome:
    """Shrink a quadruple by two scales; the gap to the flat value must fall off like r^2."""
    base = random_point(geometry, cfg.n, rng, 0.5 if geometry is S else 1.0)
    ray = GeodesicRay(geometry, base, random_tangent(geometry, base, rng))
    t = distinct_params(rng, -1.0, 1.0, gap=0.2)[rng.permutation(4)]
    flat = _param_cross_ratio(t)
    gaps = []
    for r in DEGENERATE_SCALES:
        quad = CollinearQuadruple(geometry, tuple(geodesic_point(ray, r * ti) for ti in t))
        gaps.append(abs(cross_ratio(quad) - flat))
    ratio = gaps[0] / gaps[1] if gaps[1] > 0 else math.inf
    lo, hi = DEGENERATE_RATIO_RANGE
    expected = DEGENERATE_SCALES[0] ** 2 / DEGENERATE_SCALES[1] ** 2
    res = abs(ratio / expected - 1.0)
    return Outcome(res, lo <= ratio <= hi, [list(map(float, t)), base.tolist()], expected, ratio)


@dataclass(frozen=True)
class SuiteSpec:
    sample: object
    geometries: tuple
    samples: int
    tol: float
    description: str


SUITES: dict[str, SuiteSpec] = {
    "theorem1": SuiteSpec(theorem_sample, (S,), 10_000, 1e-9, "spherical cross ratio = chart cross ratio"),
    "theorem2": SuiteSpec(theorem_sample, (H,), 10_000, 1e-9, "hyperbolic cross ratio = chart cross ratio"),
    "distance-identities": SuiteSpec(
        distance_identity_sample, (S, H), 10_000, 1e-12, "chart sin/sinh formulas = sin/sinh of model distance"
    ),
    "pencil-invariance": SuiteSpec(pencil_sample, (E, S, H), 1_000, 1e-9, "pencil transfers keep cross ratios"),
    "sine-rule": SuiteSpec(sine_rule_sample, (E, S, H), 1_000, 1e-9, "L(side)/sin(angle) is constant"),
    "hilbert-isometry-s": SuiteSpec(
        hilbert_isometry_sample, (S,), 10_000, 1e-9, "spherical Hilbert metric = chart Hilbert metric"
    ),
    "hilbert-isometry-h": SuiteSpec(
        hilbert_isometry_sample, (H,), 10_000, 1e-9, "hyperbolic Hilbert metric = chart Hilbert metric"
    ),
    "homothety": SuiteSpec(homothety_sample, (E,), 1_000, 1e-12, "Euclidean Hilbert metric is scale invariant"),
    "bk-factor2": SuiteSpec(bk_factor_sample, (S, H), 10_000, 1e-9, "Hilbert metric = 2 x hyperbolic distance"),
    "degenerate-limit": SuiteSpec(
        degenerate_limit_sample, (S, H), 1_000, 1.0, "curved cross ratios approach the flat one at rate r^2"
    ),
}

_GEOMETRY_KEYS = {E: 0, S: 1, H: 2}


def run_suite(cfg: SuiteConfig, *, projection=None, workers: int | None = None) -> SweepReport:
    """Run a suite and aggregate its report.

    ``projection`` replaces the chart projection in theorem1/theorem2 (a hook
    for sensitivity checks); other suites ignore it.
    """
    entry = SUITES[cfg.suite]
    sample = entry.sample
    if projection is not None and sample is theorem_sample:
        sample = lambda c, g, rng: theorem_sample(c, g, rng, projection)  # noqa: E731

    rows, fails = [], []
    for geometry in cfg.geometries:
        gkey = _GEOMETRY_KEYS[geometry]

        def one(i, geometry=geometry, gkey=gkey):
            rng = substream(cfg.seed, gkey, i)
            try:
                out = sample(cfg, geometry, rng)
            except GeometryError as exc:
                out = Outcome(math.inf, False, reason=f"{type(exc).__name__}: {exc}")
            return out

        outcomes = run_samples(one, cfg.samples, workers)
        for i, out in enumerate(outcomes):
            ok, res = bool(out.ok), float(out.residual)
            rows.append(SampleRow(geometry.value, i, res, ok))
            if not ok:
                expected = None if out.expected is None else float(out.expected)
                actual = None if out.actual is None else float(out.actual)
                fails.append(FailureRecord(i, geometry.value, out.inputs, expected, actual, res, out.reason))
    names = [g.value for g in cfg.geometries]
    return SweepReport.from_rows(cfg.suite, cfg.n, cfg.seed, cfg.tol, names, rows, fails)

