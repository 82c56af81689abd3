"""Planar arc-length curves ``s -> (x(s), z(s))``.

A :class:`ProfileCurve` generates both cylindrical surfaces (curve in a plane
orthogonal to the rulings) and rotational surfaces (curve in the xz-plane).
The Frenet curvature is ``kappa = x' z'' - z' x''``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import fresnel

from .errors import DomainError

__all__ = [
    "ProfileJet",
    "ProfileCurve",
    "line_profile",
    "circle_profile",
    "euler_spiral_profile",
    "sphere_profile",
    "catenoid_profile",
]


@dataclass(frozen=True)
class ProfileJet:
    x: np.ndarray
    z: np.ndarray
    dx: np.ndarray
    dz: np.ndarray
    ddx: np.ndarray
    ddz: np.ndarray

    @property
    def kappa(self) -> np.ndarray:
        return self.dx * self.ddz - self.dz * self.ddx


@dataclass(frozen=True)
class ProfileCurve:
    """Arc-length planar curve given by a vectorized jet function on ``domain``."""

    jet_fn: Callable[[np.ndarray], ProfileJet]
    domain: tuple[float, float]
    name: str = ""

    def contains(self, s: ArrayLike) -> np.ndarray:
        s = np.asarray(s, float)
        return (s >= self.domain[0]) & (s <= self.domain[1])

    def jet(self, s: ArrayLike) -> ProfileJet:
        s = np.asarray(s, float)
        if not np.all(self.contains(s)):
            raise DomainError(f"s outside profile domain {self.domain}")
        return self.jet_fn(s)

    def __call__(self, s: ArrayLike) -> tuple[np.ndarray, np.ndarray]:
        j = self.jet(s)
        return j.x, j.z

    def kappa(self, s: ArrayLike) -> np.ndarray:
        return self.jet(s).kappa

    def arc_length_defect(self, s: ArrayLike) -> np.ndarray:
        j = self.jet(s)
        return np.abs(j.dx ** 2 + j.dz ** 2 - 1.0)

    def grid(self, n: int, trim: float = 0.0) -> np.ndarray:
        """``n`` equispaced parameters, each end pulled in by ``trim`` (for open ends)."""
        lo, hi = self.domain
        if not (np.isfinite(lo) and np.isfinite(hi)):
            raise DomainError("cannot grid an unbounded domain; restrict it first")
        return np.linspace(lo + trim, hi - trim, n)

    def restricted(self, lo: float, hi: float) -> "ProfileCurve":
        if lo < self.domain[0] or hi > self.domain[1] or lo >= hi:
            raise DomainError(f"[{lo}, {hi}] is not a subinterval of {self.domain}")
        return ProfileCurve(self.jet_fn, (float(lo), float(hi)), self.name)


def _angle_jet(s, x, z, phi, dphi) -> ProfileJet:
    c, sn = np.cos(phi), np.sin(phi)
    return ProfileJet(x=x, z=z, dx=c, dz=sn, ddx=-sn * dphi, ddz=c * dphi)


_SMALL_K1 = 1e-6
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(64)


def _spiral_integrals(s, phi0, k0, k1):
    """``(int_0^s cos phi, int_0^s sin phi)`` with ``phi = phi0 + k0 u + k1 u^2 / 2``."""
    if k1 == 0.0:
        # sin(a+ks) - sin(a) = 2 cos(a + ks/2) sin(ks/2); sinc form is exact at k0 = 0
        half = phi0 + 0.5 * k0 * s
        damp = s * np.sinc(k0 * s / (2 * np.pi))
        return damp * np.cos(half), damp * np.sin(half)
    if abs(k1) <= _SMALL_K1:
        # the Fresnel shift k0/k1 loses accuracy here; the integrand is nearly harmonic
        s = np.asarray(s, float)
        u = 0.5 * s[..., None] * (_GL_NODES + 1)
        w = 0.5 * s[..., None] * _GL_WEIGHTS
        phi = phi0 + k0 * u + 0.5 * k1 * u * u
        return np.sum(w * np.cos(phi), axis=-1), np.sum(w * np.sin(phi), axis=-1)
    a = abs(k1)
    shift = k0 / k1
    m = phi0 - k0 ** 2 / (2 * k1)
    scale = np.sqrt(np.pi / a)
    w1 = (s + shift) / scale
    w0 = shift / scale
    S1, C1 = fresnel(w1)
    S0, C0 = fresnel(w0)
    dC, dS = C1 - C0, S1 - S0
    if k1 < 0:
        dS = -dS
    X = scale * (np.cos(m) * dC - np.sin(m) * dS)
    Z = scale * (np.sin(m) * dC + np.cos(m) * dS)
    return X, Z


def euler_spiral_profile(x0: float, z0: float, phi0: float, k0: float, k1: float,
                         domain: tuple[float, float]) -> ProfileCurve:
    """Curve with tangent angle ``phi0 + k0 s + k1 s^2/2`` through ``(x0, z0)`` at ``s=0``.

    Covers lines (``k0 = k1 = 0``) and circles (``k1 = 0``) as special cases.
    """
    phi0, k0, k1 = float(phi0), float(k0), float(k1)

    def jet_fn(s):
        X, Z = _spiral_integrals(s, phi0, k0, k1)
        phi = phi0 + k0 * s + 0.5 * k1 * s ** 2
        return _angle_jet(s, x0 + X, z0 + Z, phi, k0 + k1 * s)

    return ProfileCurve(jet_fn, (float(domain[0]), float(domain[1])), "euler_spiral")


def line_profile(c1: float, c2: float, theta: float,
                 domain: tuple[float, float] = (-np.inf, np.inf)) -> ProfileCurve:
    """``(c1, c2) + (cos theta, sin theta) s``."""
    ct, st = np.cos(theta), np.sin(theta)

    def jet_fn(s):
        zero = np.zeros_like(s)
        return ProfileJet(x=c1 + ct * s, z=c2 + st * s, dx=zero + ct, dz=zero + st,
                          ddx=zero, ddz=zero)

    return ProfileCurve(jet_fn, domain, "line")


def circle_profile(c1: float, c2: float, r: float,
                   domain: tuple[float, float] | None = None) -> ProfileCurve:
    """``(c1, c2) + r (cos(s/r), sin(s/r))``, counter-clockwise, curvature ``1/r``."""
    if r <= 0:
        raise DomainError("circle radius must be positive")
    if domain is None:
        domain = (0.0, 2 * np.pi * r)

    def jet_fn(s):
        th = s / r
        c, sn = np.cos(th), np.sin(th)
        return ProfileJet(x=c1 + r * c, z=c2 + r * sn, dx=-sn, dz=c,
                          ddx=-c / r, ddz=-sn / r)

    return ProfileCurve(jet_fn, domain, "circle")


def sphere_profile(r: float = 1.0) -> ProfileCurve:
    """Meridian ``(r sin(s/r), -r cos(s/r))`` from the south pole, ``s in [0, pi r]``."""
    if r <= 0:
        raise DomainError("sphere radius must be positive")

    def jet_fn(s):
        th = s / r
        c, sn = np.cos(th), np.sin(th)
        return ProfileJet(x=r * sn, z=-r * c, dx=c, dz=sn, ddx=-sn / r, ddz=c / r)

    return ProfileCurve(jet_fn, (0.0, np.pi * r), "sphere")


def catenoid_profile(a: float = 1.0,
                     domain: tuple[float, float] = (-2.0, 2.0)) -> ProfileCurve:
    """Catenary ``x = sqrt(a^2 + s^2)``, ``z = a asinh(s / a)`` in arc length."""
    if a <= 0:
        raise DomainError("catenoid waist must be positive")

    def jet_fn(s):
        rho = np.sqrt(a * a + s * s)
        return ProfileJet(x=rho, z=a * np.arcsinh(s / a), dx=s / rho, dz=a / rho,
                          ddx=a * a / rho ** 3, ddz=-a * s / rho ** 3)

    return ProfileCurve(jet_fn, domain, "catenary")
