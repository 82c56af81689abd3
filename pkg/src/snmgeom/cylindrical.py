"""Cylindrical surfaces ``psi(s, t) = gamma(s) + t w``.

The generating curve lives in the plane through the origin orthogonal to the
ruling ``w``.  A :class:`ProfileCurve` ``(x(s), z(s))`` is embedded as
``x e_x + z e_z`` with ``e_z = e_x x w``; with this choice the curve normal
``n = gamma' x w`` satisfies ``det(gamma', w, n) = 1`` and ``gamma'' = kappa n``
with the planar curvature ``kappa = x' z'' - z' x''``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike
from scipy.integrate import quad

from .connection import CanonicalConnection
from .errors import DomainError, GeometryError
from .geom_core import ParametricPatch, SurfaceJet2, cross, dot, norm
from .profiles import ProfileCurve, ProfileJet

__all__ = [
    "CylinderSpec",
    "cylinder_K",
    "generating_curve_domain",
    "solve_generating_curve",
    "closed_form_curve_K_half",
    "closed_form_curve_K_minus_half",
    "grim_reaper_profile",
    "QUAD_EPSABS",
]

QUAD_EPSABS = 1e-10


def _unit(v, what):
    v = np.asarray(v, dtype=float).reshape(3)
    if abs(float(norm(v)) - 1.0) > 1e-12:
        raise GeometryError(f"{what} must be a unit vector")
    return v


@dataclass(frozen=True)
class CylinderSpec:
    """Ruling ``w``, generating curve and the in-plane axis ``e_x`` (unit, orthogonal to ``w``)."""

    profile: ProfileCurve
    w: np.ndarray = field(default_factory=lambda: np.array([0.0, 1.0, 0.0]))
    e_x: np.ndarray = field(default_factory=lambda: np.array([1.0, 0.0, 0.0]))

    def __post_init__(self):
        w = _unit(self.w, "ruling w")
        e_x = _unit(self.e_x, "e_x")
        if abs(float(dot(w, e_x))) > 1e-12:
            raise GeometryError("e_x must be orthogonal to the ruling")
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "e_x", e_x)

    @property
    def e_z(self) -> np.ndarray:
        return cross(self.e_x, self.w)

    def curve(self, s: ArrayLike) -> tuple[ProfileJet, np.ndarray, np.ndarray, np.ndarray]:
        """Planar jet plus ``gamma'``, ``gamma''`` and the normal ``n`` in R^3."""
        j = self.profile.jet(s)
        ex, ez = self.e_x, self.e_z
        d1 = j.dx[..., None] * ex + j.dz[..., None] * ez
        d2 = j.ddx[..., None] * ex + j.ddz[..., None] * ez
        n = cross(d1, self.w)
        return j, d1, d2, n

    def patch(self, t_range: tuple[float, float] = (-1.0, 1.0)) -> ParametricPatch:
        ex, ez, w = self.e_x, self.e_z, self.w
        profile = self.profile

        def func(s, t):
            x, z = profile(s)
            return x[..., None] * ex + z[..., None] * ez + np.asarray(t, float)[..., None] * w

        def derivatives(s, t):
            s, t = np.broadcast_arrays(s, t)
            j = profile.jet(s)
            zero = np.zeros(s.shape + (3,))
            return SurfaceJet2(
                psi=j.x[..., None] * ex + j.z[..., None] * ez + t[..., None] * w,
                psi_s=j.dx[..., None] * ex + j.dz[..., None] * ez,
                psi_t=zero + w,
                psi_ss=j.ddx[..., None] * ex + j.ddz[..., None] * ez,
                psi_st=zero,
                psi_tt=zero,
            )

        return ParametricPatch(func, profile.domain, t_range, derivatives,
                               name=f"cylinder[{profile.name}]")


def cylinder_K(spec: CylinderSpec, conn: CanonicalConnection, s: ArrayLike) -> np.ndarray:
    """Closed form ``K = (<w,C>^2 + <gamma',C>^2 - kappa <n,C>) / 2`` (independent of t)."""
    j, d1, _, n = spec.curve(s)
    C = conn.C
    return 0.5 * (dot(spec.w, C) ** 2 + dot(d1, C) ** 2 - j.kappa * dot(n, C))


# -- constant-K generating curves for rulings orthogonal to C = e_z ---------------


def generating_curve_domain(K: float) -> tuple[float, float]:
    """Closed parameter interval on which ``1 - z'(s)^2 >= 0``.

    Endpoints with ``x' = 0`` (vertical tangent) belong to the closure only;
    the cylinder degenerates there for downstream formulas using ``x''``.
    """
    K = float(K)
    if K == 0.0:
        return (1.0, np.inf)
    if K < 0:
        om = np.sqrt(-2 * K)
        half = np.arctan(1.0 / om) / om
        return (-half, half)
    if K <= 0.5:
        return (-np.inf, np.inf)
    om = np.sqrt(2 * K)
    half = np.arctanh(1.0 / om) / om
    return (-half, half)


def _z_jet(K: float):
    """Closed-form ``z, z', z''`` solving ``z'' = z'^2 - 2K``."""
    if K > 0:
        om = np.sqrt(2 * K)

        def zj(s):
            y = om * s
            ay = np.abs(y)
            logcosh = ay + np.log1p(np.exp(-2 * ay)) - np.log(2.0)
            th = np.tanh(y)
            return -logcosh, -om * th, -om * om * (1 - th * th)
    elif K == 0:
        def zj(s):
            return -np.log(s), -1.0 / s, 1.0 / s ** 2
    else:
        om = np.sqrt(-2 * K)

        def zj(s):
            y = om * s
            tn = np.tan(y)
            return -np.log(np.cos(y)), om * tn, om * om * (1 + tn * tn)
    return zj


def solve_generating_curve(K: float, epsabs: float = QUAD_EPSABS) -> ProfileCurve:
    """Generating curve of the cylinder with constant ``K`` (rulings orthogonal to C).

    ``z`` is closed form; ``x(s) = int_{s0}^s sqrt(1 - z'(u)^2) du`` is evaluated by
    adaptive quadrature with ``x(s0) = 0`` at ``s0 = 0`` (``s0 = 1`` when ``K = 0``).
    """
    K = float(K)
    zj = _z_jet(K)
    lo, hi = generating_curve_domain(K)
    anchor = 1.0 if K == 0.0 else 0.0

    def xprime(u):
        zp = zj(np.asarray(u, float))[1]
        return np.sqrt(np.maximum(0.0, 1.0 - zp * zp))

    def x_of(s):
        s = np.asarray(s, float)
        # surface grids repeat s along t; integrate each distinct value once
        uniq, inverse = np.unique(s, return_inverse=True)
        vals = np.array([0.0 if si == anchor else
                         quad(xprime, anchor, si, epsabs=epsabs, epsrel=1e-13, limit=200)[0]
                         for si in uniq])
        return vals[inverse].reshape(s.shape)

    def jet_fn(s):
        s = np.asarray(s, float)
        z, zp, zpp = zj(s)
        xp = np.sqrt(np.maximum(0.0, 1.0 - zp * zp))
        with np.errstate(divide="ignore", invalid="ignore"):
            xpp = -zp * zpp / xp
        return ProfileJet(x=x_of(s), z=z, dx=xp, dz=zp, ddx=xpp, ddz=zpp)

    return ProfileCurve(jet_fn, (lo, hi), f"generating_curve[K={K!r}]")


def closed_form_curve_K_half(s: ArrayLike) -> tuple[np.ndarray, np.ndarray]:
    """Grim reaper ``(atan(sinh s), -log cosh s)``; defined for all real ``s``."""
    s = np.asarray(s, float)
    a = np.abs(s)
    return np.arctan(np.sinh(s)), -(a + np.log1p(np.exp(-2 * a)) - np.log(2.0))


def closed_form_curve_K_minus_half(s: ArrayLike) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form antiderivative for ``K = -1/2`` on the band ``|s| <= pi/4``.

    ``x = sqrt2 asin(sqrt2 sin s) - acot(sqrt(cot^2 s - 1))``.  This satisfies
    ``x'^2 + z'^2 = 1`` only for ``s > 0``; on ``s < 0`` its derivative is
    ``(2 cos^2 s + 1) / (cos s sqrt(cos 2s))`` instead.  Use
    :func:`solve_generating_curve` for the whole band.
    """
    s = np.asarray(s, float)
    if np.any(np.abs(s) > np.pi / 4 + 1e-15):
        raise DomainError("K=-1/2 closed form requires |s| <= pi/4")
    with np.errstate(divide="ignore"):
        cot2 = 1.0 / np.tan(s) ** 2
    arg = np.sqrt(np.maximum(cot2 - 1.0, 0.0))
    with np.errstate(divide="ignore"):
        acot = np.arctan(1.0 / arg)
    x = np.sqrt(2.0) * np.arcsin(np.clip(np.sqrt(2.0) * np.sin(s), -1.0, 1.0)) - acot
    return x, -np.log(np.cos(s))


def grim_reaper_profile(domain: tuple[float, float] = (-np.inf, np.inf)) -> ProfileCurve:
    """Grim reaper with analytic derivatives (the ``K = 1/2`` generating curve)."""

    def jet_fn(s):
        x, z = closed_form_curve_K_half(s)
        sech = 1.0 / np.cosh(s)
        th = np.tanh(s)
        return ProfileJet(x=x, z=z, dx=sech, dz=-th, ddx=-sech * th, ddz=-sech ** 2)

    return ProfileCurve(jet_fn, domain, "grim_reaper")
