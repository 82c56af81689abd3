"""Rotational surfaces about the z-axis.

The profile ``(x(s), z(s))`` is an arc-length curve in the xz-plane and the
surface is ``psi(s, t) = (x cos t, x sin t, z)``.  With the global normal
convention ``N = (-z' cos t, -z' sin t, x')`` and

    G = z' kappa / x,        H = (z' + x kappa) / (2 x).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike
from scipy.integrate import solve_ivp

from .connection import CanonicalConnection
from .errors import DomainError, GeometryError
from .geom_core import ParametricPatch, SurfaceJet2
from .profiles import ProfileCurve, ProfileJet, line_profile
from .trig import FourierCoefficients, equispaced_angles, fit_trig_polynomial

__all__ = [
    "AXIS_TOL",
    "RotationalSurface",
    "rotational_classical",
    "rotational_K_general",
    "FourierComparison",
    "analytic_fourier_coefficients",
    "fourier_coefficients",
    "rotational_K_axis_aligned",
    "ConicalScan",
    "conical_scan",
    "circle_residual_samples",
    "circle_residual",
    "ShootResult",
    "shoot_curvature",
    "profile_ode_shoot",
]

#: closed forms carry a 1/x factor; points closer than this to the axis are refused
AXIS_TOL = 1e-6


@dataclass(frozen=True)
class RotationalSurface:
    profile: ProfileCurve

    def patch(self, t_range: tuple[float, float] = (0.0, 2 * np.pi)) -> ParametricPatch:
        profile = self.profile

        def func(s, t):
            x, z = profile(s)
            s, t = np.broadcast_arrays(np.asarray(s, float), np.asarray(t, float))
            x, z = np.broadcast_to(x, s.shape), np.broadcast_to(z, s.shape)
            return np.stack([x * np.cos(t), x * np.sin(t), z], axis=-1)

        def derivatives(s, t):
            s, t = np.broadcast_arrays(np.asarray(s, float), np.asarray(t, float))
            j = profile.jet(s)
            c, sn = np.cos(t), np.sin(t)
            zero = np.zeros(s.shape)
            return SurfaceJet2(
                psi=np.stack([j.x * c, j.x * sn, j.z + zero], axis=-1),
                psi_s=np.stack([j.dx * c, j.dx * sn, j.dz + zero], axis=-1),
                psi_t=np.stack([-j.x * sn, j.x * c, zero], axis=-1),
                psi_ss=np.stack([j.ddx * c, j.ddx * sn, j.ddz + zero], axis=-1),
                psi_st=np.stack([-j.dx * sn, j.dx * c, zero], axis=-1),
                psi_tt=np.stack([-j.x * c, -j.x * sn, zero], axis=-1),
            )

        return ParametricPatch(func, profile.domain, t_range, derivatives,
                               name=f"rotational[{profile.name}]")

    def jet_off_axis(self, s: ArrayLike) -> ProfileJet:
        j = self.profile.jet(s)
        if np.any(~(j.x >= AXIS_TOL)):
            raise DomainError("profile point on (or too close to) the rotation axis")
        return j


def rotational_classical(j: ProfileJet) -> tuple[np.ndarray, np.ndarray]:
    """``(G, H)`` of the rotational surface from the profile jet."""
    k = j.kappa
    return j.dz * k / j.x, (j.dz + j.x * k) / (2 * j.x)


def rotational_K_general(surface: RotationalSurface, conn: CanonicalConnection,
                         s: ArrayLike, t: ArrayLike) -> np.ndarray:
    """Sectional curvature for an arbitrary unit ``C = (a, b, c)``; depends on ``t``."""
    s, t = np.broadcast_arrays(np.asarray(s, float), np.asarray(t, float))
    j = surface.jet_off_axis(s)
    a, b, c = conn.C
    ct, st = np.cos(t), np.sin(t)
    G, H = rotational_classical(j)
    K_tilde = 0.5 * ((b * ct - a * st) ** 2 + (j.dx * (a * ct + b * st) + c * j.dz) ** 2)
    c_dot_n = c * j.dx - j.dz * (a * ct + b * st)
    return K_tilde + G - c_dot_n * H


@dataclass(frozen=True)
class FourierComparison:
    analytic: FourierCoefficients
    fitted: FourierCoefficients

    @property
    def mismatch(self) -> float:
        return self.analytic.max_abs_diff(self.fitted)


def analytic_fourier_coefficients(j: ProfileJet, conn: CanonicalConnection,
                                  K_const: float = 0.0) -> FourierCoefficients:
    """Coefficients of ``K(s, t) - K_const`` in ``t`` (degree two) at one profile point."""
    a, b, c = conn.C
    G, H = rotational_classical(j)
    xp, zp = float(j.dx), float(j.dz)
    G, H = float(G), float(H)
    A0 = (0.25 * (a * a + b * b + 2 * c * c) * zp ** 2 + 0.5 * (a * a + b * b) * xp ** 2
          - c * H * xp - K_const + G)
    A1 = a * zp * (H + c * xp)
    B1 = b * zp * (H + c * xp)
    A2 = (b * b - a * a) * zp ** 2 / 4
    B2 = -0.5 * a * b * zp ** 2
    return FourierCoefficients(np.array([A0, A1, A2]), np.array([0.0, B1, B2]))


def fourier_coefficients(surface: RotationalSurface, conn: CanonicalConnection, s: float,
                         K_const: float = 0.0, n_samples: int = 64,
                         order: int = 3) -> FourierComparison:
    """Closed-form coefficients next to a least-squares fit of sampled ``K(s, .) - K_const``."""
    if n_samples < 16:
        raise ValueError("need at least 16 samples in t")
    j = surface.jet_off_axis(np.asarray(float(s)))
    t = equispaced_angles(n_samples)
    values = rotational_K_general(surface, conn, np.full_like(t, float(s)), t) - K_const
    return FourierComparison(analytic_fourier_coefficients(j, conn, K_const),
                             fit_trig_polynomial(t, values, order))


def rotational_K_axis_aligned(surface: RotationalSurface | ProfileCurve, s: ArrayLike,
                              c_sign: int = 1) -> np.ndarray:
    """``K`` for ``C = (0, 0, c_sign)``, independent of ``t``.

    For ``c_sign = +1``: ``K = ((2z' - x x') kappa + z'(x z' - x')) / (2x)``.
    """
    if c_sign not in (1, -1):
        raise ValueError("c_sign must be +1 or -1")
    if isinstance(surface, ProfileCurve):
        surface = RotationalSurface(surface)
    j = surface.jet_off_axis(s)
    x, xp, zp, k = j.x, j.dx, j.dz, j.kappa
    return ((2 * zp - c_sign * x * xp) * k + zp * (x * zp - c_sign * xp)) / (2 * x)


# -- conical and circular profiles --------------------------------------------------


@dataclass(frozen=True)
class ConicalScan:
    theta: float
    c1: float
    c2: float
    s: np.ndarray
    K: np.ndarray
    constant: bool
    value: Optional[float]
    variation: float
    # the two polynomial coefficients in s that must vanish for constant K
    slope_coefficient: float
    offset_coefficient: float


def conical_scan(theta: float, c1: float, c2: float = 0.0,
                 s_range: tuple[float, float] = (0.0, 2.0), n: int = 101,
                 constant_tol: float = 1e-9) -> ConicalScan:
    """Sample ``K`` along the line ``(c1, c2) + (cos theta, sin theta) s`` and classify it."""
    s = np.linspace(s_range[0], s_range[1], n)
    x_ends = c1 + np.cos(theta) * np.array(s_range, float)
    if np.any(x_ends < AXIS_TOL):
        raise DomainError("line reaches the rotation axis inside the sample range")
    K = rotational_K_axis_aligned(line_profile(c1, c2, theta), s)
    variation = float(np.max(K) - np.min(K))
    constant = variation <= constant_tol
    kbar = float(np.mean(K))
    sn, cs = np.sin(theta), np.cos(theta)
    return ConicalScan(theta=float(theta), c1=float(c1), c2=float(c2), s=s, K=K,
                       constant=constant, value=kbar if constant else None,
                       variation=variation,
                       slope_coefficient=float((2 * kbar - sn * sn) * cs),
                       offset_coefficient=float((2 * kbar - sn * sn) * c1 + sn * cs))


def circle_residual_samples(r: float, c1: float, K: float, theta: ArrayLike) -> np.ndarray:
    """``2x`` times ``(K - K_profile)`` along the circle ``x = c1 + r cos(theta)``."""
    theta = np.asarray(theta, float)
    x = c1 + r * np.cos(theta)
    c, sn = np.cos(theta), np.sin(theta)
    return 2 * K * x - (2 * c + x * sn) / r - c * (x * c + sn)


def circle_residual(r: float, c1: float, K: float, n_samples: int = 64) -> FourierCoefficients:
    """Degree-three Fourier fit of the circle residual over one period in ``s / r``."""
    if r <= 0:
        raise DomainError("radius must be positive")
    if c1 - r < AXIS_TOL:
        raise DomainError("circle touches or crosses the rotation axis")
    theta = equispaced_angles(n_samples)
    return fit_trig_polynomial(theta, circle_residual_samples(r, c1, K, theta), 3)


# -- shooting for constant K ----------------------------------------------------------


def shoot_curvature(K: float, x: ArrayLike, phi: ArrayLike) -> np.ndarray:
    """Profile curvature forced by constant ``K`` at ``(x, tangent angle phi)``."""
    sn, cs = np.sin(phi), np.cos(phi)
    return (2 * K * x - sn * (x * sn - cs)) / (2 * sn - x * cs)


@dataclass(frozen=True)
class ShootResult:
    profile: ProfileCurve
    stop: str          # "s_max", "axis" or "singular"
    s_end: float


def profile_ode_shoot(K: float, x0: float, z0: float, phi0: float, s_max: float,
                      singular_tol: float = 1e-6, rtol: float = 1e-10,
                      atol: float = 1e-12) -> ShootResult:
    """Integrate ``x' = cos phi, z' = sin phi, phi' = kappa`` for constant ``K``.

    Stops at ``s_max``, when ``x`` reaches the axis, or when ``|2z' - x x'|``
    falls below ``singular_tol``; the last two are reported, not raised.
    """
    if x0 < AXIS_TOL:
        raise DomainError("start point must lie off the rotation axis")
    if abs(2 * np.sin(phi0) - x0 * np.cos(phi0)) <= singular_tol:
        raise GeometryError("initial point lies on the singular set 2z' - x x' = 0")

    def rhs(_s, y):
        x, _z, phi = y
        return [np.cos(phi), np.sin(phi), shoot_curvature(K, x, phi)]

    def hit_axis(_s, y):
        return y[0] - AXIS_TOL
    hit_axis.terminal = True
    hit_axis.direction = -1

    def hit_singular(_s, y):
        return abs(2 * np.sin(y[2]) - y[0] * np.cos(y[2])) - singular_tol
    hit_singular.terminal = True
    hit_singular.direction = -1

    sol = solve_ivp(rhs, (0.0, float(s_max)), [x0, z0, phi0], method="DOP853",
                    rtol=rtol, atol=atol, dense_output=True,
                    events=[hit_axis, hit_singular])
    if sol.status == -1:
        raise GeometryError(f"integration failed: {sol.message}")
    stop = "s_max"
    if sol.status == 1:
        stop = "axis" if len(sol.t_events[0]) else "singular"
    s_end = float(sol.t[-1])
    dense = sol.sol

    def jet_fn(s):
        s = np.asarray(s, float)
        x, z, phi = dense(np.ravel(s))
        x, z, phi = (v.reshape(s.shape) for v in (x, z, phi))
        k = shoot_curvature(K, x, phi)
        c, sn = np.cos(phi), np.sin(phi)
        return ProfileJet(x=x, z=z, dx=c, dz=sn, ddx=-sn * k, ddz=c * k)

    return ShootResult(ProfileCurve(jet_fn, (0.0, s_end), f"shoot[K={K!r}]"), stop, s_end)
