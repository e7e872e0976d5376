"""Cross ratios of ordered collinear quadruples in the three geometries.

For an ordered quadruple (A1, A2, A3, A4) on one geodesic the value returned is

    [A2, A3, A4, A1] = L(A2A4) / L(A3A4) * L(A3A1) / L(A2A1)

with L the identity (Euclidean), sin (spherical) or sinh (hyperbolic) and
A_iA_j the unsigned geodesic distance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotCollinear, NotDistinct
from .linalg import RANK_TOL, numeric_rank
from .models import Geometry, model_distance, validate_point

DISTINCT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class CollinearQuadruple:
    """Four ordered, pairwise distinct points on one geodesic.

    Validation happens on construction; spherical points must lie in the open
    upper hemisphere.
    """

    geometry: Geometry
    points: tuple

    def __post_init__(self):
        if len(self.points) != 4:
            raise ValueError(f"a quadruple needs 4 points, got {len(self.points)}")
        pts = tuple(validate_point(self.geometry, p) for p in self.points)
        if len({p.shape for p in pts}) != 1:
            raise DimensionMismatch("quadruple points differ in dimension")
        for p, q in itertools.combinations(pts, 2):
            if model_distance(self.geometry, p, q) < DISTINCT_TOL:
                raise NotDistinct("quadruple points are not pairwise distinct")
        if numeric_rank(pts, RANK_TOL) > 2:
            raise NotCollinear("quadruple points do not lie on one geodesic")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return self.points[0].size - 1

    def __iter__(self):
        return iter(self.points)

    def as_array(self) -> np.ndarray:
        return np.vstack(self.points)


def bracket(geometry: Geometry, a1, a2, a3, a4) -> float:
    """The cross-ratio formula evaluated without any validation."""
    L = geometry.length_fn()
    d = lambda p, q: L(model_distance(geometry, np.asarray(p, float), np.asarray(q, float)))  # noqa: E731
    return (d(a2, a4) / d(a3, a4)) * (d(a3, a1) / d(a2, a1))


def cross_ratio(q: CollinearQuadruple) -> float:
    return bracket(q.geometry, *q.points)
