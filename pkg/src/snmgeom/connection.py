"""The canonical semi-symmetric non-metric connection on Euclidean 3-space.

For a unit constant field ``C`` the connection is
``nabla_X Y = nabla0_X Y + <C, Y> X``.  On constant vector fields the
Levi-Civita part vanishes, which is all the ambient computations need.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from numpy.typing import ArrayLike

from .errors import DegenerateError, GeometryError
from .geom_core import (
    DEGENERACY_TOL,
    ClassicalCurvatures,
    ParametricPatch,
    classical_curvatures,
    dot,
    fundamental_forms,
    jet2,
    norm,
)

__all__ = [
    "CanonicalConnection",
    "PlaneSection",
    "CurvatureReport",
    "ambient_sectional_curvature",
    "ambient_curvature_batch",
    "scalar_curvature",
    "covariant_derivative",
    "torsion",
    "nonmetricity",
    "surface_sectional_curvature",
    "sectional_curvature",
]

_UNIT_TOL = 1e-9


@dataclass(frozen=True)
class CanonicalConnection:
    """Connection determined by the unit constant vector ``C``."""

    C: np.ndarray

    def __post_init__(self):
        C = np.asarray(self.C, dtype=float).reshape(3)
        if abs(float(norm(C)) - 1.0) > _UNIT_TOL:
            raise GeometryError(f"C must be a unit vector, |C| = {float(norm(C))!r}")
        object.__setattr__(self, "C", C)

    @classmethod
    def from_vector(cls, v: ArrayLike) -> "CanonicalConnection":
        """Normalize ``v`` and build the connection; a zero vector is rejected."""
        v = np.asarray(v, dtype=float).reshape(3)
        n = float(norm(v))
        if not n > 0 or not np.isfinite(n):
            raise GeometryError("C must be a nonzero finite vector")
        return cls(v / n)


@dataclass(frozen=True)
class PlaneSection:
    """A 2-plane spanned by ``u`` and ``v`` (any basis, batched over leading axes)."""

    u: np.ndarray
    v: np.ndarray

    def gram_det(self) -> np.ndarray:
        return dot(self.u, self.u) * dot(self.v, self.v) - dot(self.u, self.v) ** 2

    def is_orthonormal(self, tol: float = 1e-12) -> bool:
        return bool(np.all(np.abs(dot(self.u, self.u) - 1) <= tol)
                    and np.all(np.abs(dot(self.v, self.v) - 1) <= tol)
                    and np.all(np.abs(dot(self.u, self.v)) <= tol))


@dataclass(frozen=True)
class CurvatureReport:
    K_tilde: np.ndarray
    G: np.ndarray
    H: np.ndarray
    C_dot_N: np.ndarray
    K: np.ndarray


def ambient_sectional_curvature(plane: PlaneSection, conn: CanonicalConnection,
                                *, strict: bool = True) -> np.ndarray:
    """Sectional curvature of a plane of R^3 for the connection.

    For an orthonormal basis this is ``(<u,C>^2 + <v,C>^2) / 2``.  A general
    basis is handled by dividing the symmetrized curvature by twice the Gram
    determinant, which makes the value basis independent.
    """
    return ambient_curvature_batch(plane.u, plane.v, conn.C, strict=strict)


def ambient_curvature_batch(u: ArrayLike, v: ArrayLike, C: ArrayLike, *,
                            strict: bool = True) -> np.ndarray:
    """:func:`ambient_sectional_curvature` with ``C`` broadcast like ``u`` and ``v``.

    ``C`` is assumed to be unit length; use this for sweeps over many fields.
    """
    u = np.asarray(u, float)
    v = np.asarray(v, float)
    uc = dot(u, C)
    vc = dot(v, C)
    uu, vv, uv = dot(u, u), dot(v, v), dot(u, v)
    gram = uu * vv - uv ** 2
    bad = ~(gram >= DEGENERACY_TOL * np.maximum(uu * vv, 1e-300))
    if strict and np.any(bad):
        raise DegenerateError("plane basis is degenerate")
    # <R(u,v)v,u> + <R(v,u)u,v> for constant fields
    num = vc ** 2 * uu + uc ** 2 * vv - 2 * uc * vc * uv
    with np.errstate(invalid="ignore", divide="ignore"):
        # the exact value lies in [0, 1/2]; clip rounding excursions (NaN passes through)
        return np.clip(num / (2 * gram), 0.0, 0.5)


def scalar_curvature(frame: Sequence[ArrayLike], conn: CanonicalConnection,
                     tol: float = 1e-10) -> float:
    """Sum of the three coordinate-plane curvatures of an orthonormal frame."""
    e = np.asarray(frame, dtype=float)
    if e.shape != (3, 3):
        raise GeometryError("frame must consist of three vectors in R^3")
    if np.max(np.abs(e @ e.T - np.eye(3))) > tol:
        raise DegenerateError("frame is not orthonormal")
    return float(sum(ambient_sectional_curvature(PlaneSection(e[i], e[j]), conn)
                     for i, j in ((0, 1), (0, 2), (1, 2))))


def covariant_derivative(X: ArrayLike, Y: ArrayLike, conn: CanonicalConnection) -> np.ndarray:
    """``nabla_X Y`` for constant vector fields ``X, Y``."""
    X = np.asarray(X, float)
    return dot(conn.C, Y)[..., None] * X


def torsion(X: ArrayLike, Y: ArrayLike, conn: CanonicalConnection) -> np.ndarray:
    """``T(X, Y) = <C, Y> X - <C, X> Y``."""
    X = np.asarray(X, float)
    Y = np.asarray(Y, float)
    return dot(conn.C, Y)[..., None] * X - dot(conn.C, X)[..., None] * Y


def nonmetricity(X: ArrayLike, Y: ArrayLike, Z: ArrayLike,
                 conn: CanonicalConnection) -> np.ndarray:
    """``(nabla_X g)(Y, Z)`` for constant fields (the ``X<Y,Z>`` term is zero)."""
    return (-dot(covariant_derivative(X, Y, conn), Z)
            - dot(Y, covariant_derivative(X, Z, conn)))


def surface_sectional_curvature(curv: ClassicalCurvatures, tangent_plane: PlaneSection,
                                conn: CanonicalConnection, *,
                                strict: bool = True) -> CurvatureReport:
    """Sectional curvature of a surface: ``K = K_tilde + G - <C, N> H``."""
    K_tilde = ambient_sectional_curvature(tangent_plane, conn, strict=strict)
    c_dot_n = dot(curv.N, conn.C)
    K = K_tilde + curv.G - c_dot_n * curv.H
    return CurvatureReport(K_tilde=K_tilde, G=curv.G, H=curv.H, C_dot_N=c_dot_n, K=K)


def sectional_curvature(patch: ParametricPatch, s: ArrayLike, t: ArrayLike,
                        conn: CanonicalConnection, *, method: str = "auto",
                        step: Optional[float] = None, strict: bool = True) -> CurvatureReport:
    """Jet, fundamental forms, classical curvatures and ``K`` in one call."""
    jet = jet2(patch, s, t, step, method=method, strict=strict)
    forms = fundamental_forms(jet, strict=strict)
    curv = classical_curvatures(forms, strict=strict)
    return surface_sectional_curvature(curv, PlaneSection(jet.psi_s, jet.psi_t), conn,
                                       strict=strict)
