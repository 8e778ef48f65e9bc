"""Two-dimensional model spaces of curvature -1, 0, +1.

The sphere and the hyperbolic plane are handled in their standard embeddings
(unit sphere in R^3, upper hyperboloid sheet in Minkowski R^3), the flat case
directly in R^2.  Geodesics, parallel transport and the rotation operator J
are all closed form, so long flows stay on-manifold up to a cheap
re-projection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

KAPPAS = (-1, 0, 1)

#: inputs violating tangency/quadric constraints by more than this are rejected
CONSTRAINT_TOL = 1e-8


class GeometryError(ValueError):
    """Invalid or incompatible geometric inputs."""


class DegeneratePointError(GeometryError):
    """An immersion loses rank at the requested parameter value."""


def euclid_form(a, b) -> float:
    return float(np.dot(a, b))


def lorentz_form(a, b) -> float:
    """Minkowski pairing -a1*b1 + a2*b2 + a3*b3 on raw triples."""
    return float(-a[0] * b[0] + a[1] * b[1] + a[2] * b[2])


def form(kappa: int, a, b) -> float:
    """Ambient bilinear form of the embedding space for curvature ``kappa``."""
    if kappa == -1:
        return lorentz_form(a, b)
    return euclid_form(a, b)


def lorentz_cross(a, b) -> np.ndarray:
    """Lorentzian cross product of raw triples.

    Returns (a3*b2 - a2*b3, a3*b1 - a1*b3, a1*b2 - a2*b1).
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return np.array(
        [
            a[2] * b[1] - a[1] * b[2],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ]
    )


def _quadric_value(kappa: int, coords: np.ndarray) -> float:
    # positive on the relevant sheet for kappa = -1
    if kappa == 1:
        return float(np.dot(coords, coords))
    return float(coords[0] ** 2 - coords[1] ** 2 - coords[2] ** 2)


@dataclass(frozen=True)
class ModelPoint:
    """Point of the curvature-``kappa`` model space in embedding coordinates."""

    kappa: int
    coords: np.ndarray

    def __post_init__(self):
        if self.kappa not in KAPPAS:
            raise GeometryError(f"kappa must be in {KAPPAS}, got {self.kappa}")
        coords = np.asarray(self.coords, dtype=float)
        object.__setattr__(self, "coords", coords)
        dim = 2 if self.kappa == 0 else 3
        if coords.shape != (dim,):
            raise GeometryError(
                f"kappa={self.kappa} point needs {dim} coordinates, got shape {coords.shape}"
            )
        if self.kappa == 0:
            return
        q = _quadric_value(self.kappa, coords)
        if abs(q - 1.0) > CONSTRAINT_TOL:
            raise GeometryError(
                f"coordinates violate the kappa={self.kappa} quadric: q={q!r}"
            )
        if self.kappa == -1 and coords[0] <= 0:
            raise GeometryError("hyperboloid points must have positive first coordinate")


@dataclass(frozen=True)
class ModelVector:
    """Tangent vector at a :class:`ModelPoint`.

    Construction enforces tangency: violations above ``CONSTRAINT_TOL`` are
    rejected, smaller ones are projected away.
    """

    base: ModelPoint
    coords: np.ndarray

    def __post_init__(self):
        coords = np.asarray(self.coords, dtype=float)
        if coords.shape != self.base.coords.shape:
            raise GeometryError("vector and base point dimensions differ")
        kappa = self.base.kappa
        if kappa != 0:
            t = form(kappa, self.base.coords, coords)
            scale = max(1.0, float(np.max(np.abs(coords)))) * max(
                1.0, float(np.max(np.abs(self.base.coords)))
            )
            if abs(t) > CONSTRAINT_TOL * scale:
                raise GeometryError(
                    f"vector is not tangent at its base point (defect {t!r})"
                )
            # defects at roundoff level are left alone so that negation,
            # scaling and addition of tangent vectors stay bitwise exact
            if abs(t) > 64.0 * np.finfo(float).eps * scale:
                # <p, p> = kappa on the quadric, so 1/<p,p> = kappa
                coords = coords - kappa * t * self.base.coords
        object.__setattr__(self, "coords", coords)

    @property
    def kappa(self) -> int:
        return self.base.kappa

    def __add__(self, other: "ModelVector") -> "ModelVector":
        _require_same_base(self, other)
        return ModelVector(self.base, self.coords + other.coords)

    def __sub__(self, other: "ModelVector") -> "ModelVector":
        _require_same_base(self, other)
        return ModelVector(self.base, self.coords - other.coords)

    def __neg__(self) -> "ModelVector":
        return ModelVector(self.base, -self.coords)

    def scale(self, a: float) -> "ModelVector":
        return ModelVector(self.base, a * self.coords)

    def norm(self) -> float:
        return math.sqrt(max(metric(self, self), 0.0))


def _same_base(u: ModelVector, v: ModelVector) -> bool:
    if u.base is v.base:
        return True
    if u.base.kappa != v.base.kappa:
        return False
    return bool(np.max(np.abs(u.base.coords - v.base.coords)) <= 1e-9)


def _require_same_base(u: ModelVector, v: ModelVector) -> None:
    if not _same_base(u, v):
        raise GeometryError("vectors live at different base points")


def metric(u: ModelVector, v: ModelVector) -> float:
    """Riemannian inner product of two tangent vectors at a shared point.

    Euclidean for curvature 0 and 1, the Minkowski pairing for curvature -1
    (positive definite on tangent vectors of the hyperboloid).
    """
    _require_same_base(u, v)
    return form(u.kappa, u.coords, v.coords)


def zero_vector(p: ModelPoint) -> ModelVector:
    return ModelVector(p, np.zeros_like(p.coords))


def tangent_project(p: ModelPoint, coords) -> np.ndarray:
    """Orthogonal projection of raw coordinates onto the tangent space at p."""
    coords = np.asarray(coords, dtype=float)
    if p.kappa == 0:
        return coords
    t = form(p.kappa, p.coords, coords)
    return coords - p.kappa * t * p.coords


def complex_structure(v: ModelVector) -> ModelVector:
    """Quarter-turn rotation J of a tangent vector.

    Flat case: J(x1, x2) = (-x2, x1).  Sphere: p x v.  Hyperbolic plane:
    the Lorentzian cross product of p and v.  J is an isometry with J^2 = -Id.
    """
    p = v.base
    if v.kappa == 0:
        return ModelVector(p, np.array([-v.coords[1], v.coords[0]]))
    if v.kappa == 1:
        return ModelVector(p, np.cross(p.coords, v.coords))
    return ModelVector(p, lorentz_cross(p.coords, v.coords))


def _renormalized(kappa: int, coords: np.ndarray) -> np.ndarray:
    if kappa == 0:
        return coords
    return coords / math.sqrt(_quadric_value(kappa, coords))


def exp_map(p: ModelPoint, v: ModelVector, l: float) -> ModelPoint:
    """Point at arc parameter ``l`` along the geodesic from p with velocity v.

    The velocity may have any norm, including zero (which returns p).  The
    result is re-projected onto the quadric to suppress drift in long flows.
    """
    _require_vector_at(p, v)
    if p.kappa == 0:
        return ModelPoint(0, p.coords + l * v.coords)
    m = v.norm()
    if m == 0.0:
        return p
    t = l * m
    if p.kappa == 1:
        coords = math.cos(t) * p.coords + (math.sin(t) / m) * v.coords
    else:
        coords = math.cosh(t) * p.coords + (math.sinh(t) / m) * v.coords
    return ModelPoint(p.kappa, _renormalized(p.kappa, coords))


def geodesic_velocity(p: ModelPoint, v: ModelVector, l: float) -> ModelVector:
    """Velocity of the geodesic at parameter ``l``; same norm as v for all l."""
    _require_vector_at(p, v)
    q = exp_map(p, v, l)
    if p.kappa == 0:
        return ModelVector(q, v.coords.copy())
    m = v.norm()
    if m == 0.0:
        return zero_vector(q)
    t = l * m
    if p.kappa == 1:
        coords = -m * math.sin(t) * p.coords + math.cos(t) * v.coords
    else:
        coords = m * math.sinh(t) * p.coords + math.cosh(t) * v.coords
    return ModelVector(q, coords)


def parallel_transport(p: ModelPoint, v: ModelVector, l: float, w: ModelVector) -> ModelVector:
    """Transport ``w`` from p along the geodesic with initial velocity v.

    Closed form: the component along the geodesic direction rides with the
    velocity, the orthogonal component is constant in embedding coordinates.
    """
    _require_vector_at(p, v)
    _require_vector_at(p, w)
    q = exp_map(p, v, l)
    if p.kappa == 0:
        return ModelVector(q, w.coords.copy())
    m = v.norm()
    if m == 0.0:
        return ModelVector(q, w.coords.copy())
    u = v.coords / m
    a = form(p.kappa, w.coords, u)
    perp = w.coords - a * u
    t = l * m
    if p.kappa == 1:
        along = -math.sin(t) * p.coords + math.cos(t) * u
    else:
        along = math.sinh(t) * p.coords + math.cosh(t) * u
    return ModelVector(q, a * along + perp)


def _require_vector_at(p: ModelPoint, v: ModelVector) -> None:
    if v.base is p:
        return
    if v.kappa != p.kappa or bool(np.max(np.abs(v.base.coords - p.coords)) > 1e-9):
        raise GeometryError("vector is not based at the given point")


def tangent_frame(p: ModelPoint) -> tuple[ModelVector, ModelVector]:
    """Orthonormal tangent frame (a, Ja) at p.

    Any such frame differs from any other by a rotation, so constructions
    that only depend on the frame's orientation class are frame-independent.
    """
    if p.kappa == 0:
        return (
            ModelVector(p, np.array([1.0, 0.0])),
            ModelVector(p, np.array([0.0, 1.0])),
        )
    best = None
    best_norm = -1.0
    for axis in np.eye(3):
        cand = tangent_project(p, axis)
        n = form(p.kappa, cand, cand)
        if n > best_norm:
            best_norm = n
            best = cand
    a = ModelVector(p, best / math.sqrt(best_norm))
    return a, complex_structure(a)


def random_point(kappa: int, rng: np.random.Generator) -> ModelPoint:
    """Random model point; plumbing for seeded verification sweeps."""
    if kappa == 0:
        return ModelPoint(0, rng.normal(size=2))
    if kappa == 1:
        x = rng.normal(size=3)
        return ModelPoint(1, x / np.linalg.norm(x))
    y = rng.normal(size=2)
    return ModelPoint(-1, np.array([math.sqrt(1.0 + y @ y), y[0], y[1]]))


def random_tangent(p: ModelPoint, rng: np.random.Generator, scale: float = 1.0) -> ModelVector:
    dim = 2 if p.kappa == 0 else 3
    return ModelVector(p, tangent_project(p, scale * rng.normal(size=dim)))
