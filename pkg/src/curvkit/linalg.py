"""Bilinear forms on R^{n+1}, Gram determinants, numerical rank and 2-plane meets.

Vectors are 1-D numpy float arrays of length n+1. The Minkowski form has
signature (n, 1) with the minus sign on the *last* coordinate:

    <u, v>_M = u_1 v_1 + ... + u_n v_n - u_{n+1} v_{n+1}
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, IdenticalPlanes, NoCommon3Space

RANK_TOL = 1e-9


class Form(enum.Enum):
    EUCLIDEAN = "euclidean"
    MINKOWSKI = "minkowski"


def as_vector(x) -> np.ndarray:
    v = np.asarray(x, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise DimensionMismatch(f"expected a nonempty 1-D vector, got shape {v.shape}")
    # inf/nan anywhere makes the sum non-finite
    if not math.isfinite(float(np.add.reduce(v))):
        raise ValueError("vector has non-finite entries")
    return v


def _check_pair(u, v):
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape or u.ndim != 1:
        raise DimensionMismatch(f"shapes {u.shape} and {v.shape} do not match")
    return u, v


def dot(form: Form, u, v) -> float:
    u, v = _check_pair(u, v)
    s = float(u @ v)
    if form is Form.MINKOWSKI:
        s -= 2.0 * float(u[-1]) * float(v[-1])
    return s


def gram2(form: Form, u, v) -> float:
    """<u,u><v,v> - <u,v>^2 for the given form.

    Evaluated through the Binet-Cauchy expansion over 2x2 minors
    ``w_ij = u_i v_j - u_j v_i``, weighted by the metric signs, which is the
    same polynomial but vanishes exactly for ``u == v`` and is nonnegative by
    construction in the Euclidean case.
    """
    u, v = _check_pair(u, v)
    i, j, weights = _minor_layout(u.size, form)
    minors = u[i] * v[j] - u[j] * v[i]
    return float(weights @ (minors * minors))


@functools.lru_cache(maxsize=None)
def _minor_layout(size: int, form: Form):
    i, j = np.triu_indices(size, k=1)
    weights = np.ones(i.size)
    if form is Form.MINKOWSKI:
        # minors involving the last (time) coordinate carry a minus sign
        weights[j == size - 1] = -1.0
    return i, j, weights


def numeric_rank(vectors, tol: float = RANK_TOL) -> int:
    """Number of singular values above ``tol`` times the largest one."""
    if len(vectors) == 0:
        return 0
    m = np.vstack([np.asarray(v, dtype=float) for v in vectors])
    s = np.linalg.svd(m, compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))


@dataclass(frozen=True, eq=False)
class TwoPlane:
    """A 2-dimensional linear subspace given by two spanning vectors."""

    u: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        u, v = _check_pair(self.u, self.v)
        if numeric_rank([u, v]) != 2:
            raise ValueError("basis vectors of a TwoPlane must be linearly independent")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @property
    def basis(self) -> tuple[np.ndarray, np.ndarray]:
        return self.u, self.v

    def contains(self, x, tol: float = RANK_TOL) -> bool:
        return numeric_rank([self.u, self.v, x], tol) <= 2

    def same_as(self, other: "TwoPlane", tol: float = RANK_TOL) -> bool:
        return numeric_rank([self.u, self.v, other.u, other.v], tol) == 2


def _canonical_sign(w: np.ndarray) -> np.ndarray:
    if w[-1] < 0.0:
        return -w
    if w[-1] == 0.0:
        nz = np.flatnonzero(w)
        if nz.size and w[nz[0]] < 0.0:
            return -w
    return w


def plane_intersect_in_3space(p1: TwoPlane, p2: TwoPlane, tol: float = RANK_TOL) -> np.ndarray:
    """Unit direction of the line ``p1 ∩ p2``.

    The sign is fixed so that the last coordinate is nonnegative (ties broken by
    making the first nonzero coordinate positive).
    """
    _check_pair(p1.u, p2.u)
    # orthonormal bases keep the null-space problem well scaled
    q1 = np.linalg.qr(np.column_stack(p1.basis))[0]
    q2 = np.linalg.qr(np.column_stack(p2.basis))[0]
    m = np.column_stack([q1, -q2])
    _, s, vt = np.linalg.svd(m)
    rank = int(np.count_nonzero(s > tol * s[0]))
    if rank <= 2:
        raise IdenticalPlanes("the two planes coincide")
    if rank == 4:
        raise NoCommon3Space("the two planes do not lie in a common 3-space")
    coef = vt[-1]
    w = q1 @ coef[:2]
    w = w / np.linalg.norm(w)
    return _canonical_sign(w)
