"""Graphs ``z = u(x, y)`` with ``K = K~`` for ``C = e_z``.

For the patch ``(x, y, u)`` the condition ``G = <C, N> H`` is equivalent to

    2 (u_xx u_yy - u_xy^2) = (1 + u_y^2) u_xx - 2 u_x u_y u_xy + (1 + u_x^2) u_yy.

Separable solutions ``u = f(x) + g(y)`` with ``(1 + f'^2) / f'' = 1/c`` give the family

    u = -(1/c) log cos(c x) - (1/k) log cos(k y),   k = c / (2c - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from numpy.typing import ArrayLike

from .errors import DomainError, GeometryError
from .geom_core import ParametricPatch, SurfaceJet2

__all__ = [
    "GraphJet",
    "GraphSurface",
    "pde_residual",
    "separable_residual",
    "separation_constant",
    "positivity_rectangle",
    "solution_family",
    "family_graph",
    "plane_graph",
    "paraboloid_graph",
]


@dataclass(frozen=True)
class GraphJet:
    u: np.ndarray
    ux: np.ndarray
    uy: np.ndarray
    uxx: np.ndarray
    uxy: np.ndarray
    uyy: np.ndarray


@dataclass(frozen=True)
class GraphSurface:
    """Height function with second-order jet on an open rectangle."""

    jet_fn: Callable[[np.ndarray, np.ndarray], GraphJet]
    x_range: tuple[float, float]
    y_range: tuple[float, float]
    name: str = "graph"

    def contains(self, x: ArrayLike, y: ArrayLike) -> np.ndarray:
        x, y = np.asarray(x, float), np.asarray(y, float)
        return ((x > self.x_range[0]) & (x < self.x_range[1])
                & (y > self.y_range[0]) & (y < self.y_range[1]))

    def jet(self, x: ArrayLike, y: ArrayLike) -> GraphJet:
        x, y = np.broadcast_arrays(np.asarray(x, float), np.asarray(y, float))
        if not np.all(self.contains(x, y)):
            raise DomainError(f"point outside graph domain {self.x_range} x {self.y_range}")
        return self.jet_fn(x, y)

    def __call__(self, x: ArrayLike, y: ArrayLike) -> np.ndarray:
        return self.jet(x, y).u

    def patch(self) -> ParametricPatch:
        """``(x, y, u(x, y))`` with analytic jets; its normal points upward."""

        def func(x, y):
            x, y = np.broadcast_arrays(np.asarray(x, float), np.asarray(y, float))
            return np.stack([x, y, self.jet_fn(x, y).u], axis=-1)

        def derivatives(x, y):
            x, y = np.broadcast_arrays(np.asarray(x, float), np.asarray(y, float))
            j = self.jet_fn(x, y)
            zero, one = np.zeros(x.shape), np.ones(x.shape)
            return SurfaceJet2(
                psi=np.stack([x, y, j.u], axis=-1),
                psi_s=np.stack([one, zero, j.ux], axis=-1),
                psi_t=np.stack([zero, one, j.uy], axis=-1),
                psi_ss=np.stack([zero, zero, j.uxx], axis=-1),
                psi_st=np.stack([zero, zero, j.uxy], axis=-1),
                psi_tt=np.stack([zero, zero, j.uyy], axis=-1),
            )

        # the patch domain is closed; keep it strictly inside the open rectangle
        return ParametricPatch(func, _shrink(self.x_range), _shrink(self.y_range),
                               derivatives, name=self.name)


def _shrink(r: tuple[float, float]) -> tuple[float, float]:
    lo, hi = r
    eps = 1e-12 * max(1.0, abs(lo), abs(hi))
    return (lo + eps, hi - eps)


def pde_residual(g: GraphSurface, x: ArrayLike, y: ArrayLike) -> np.ndarray:
    """LHS minus RHS of the graph equation; equals ``2 W^4 (G - H / W)``."""
    j = g.jet(x, y)
    lhs = 2 * (j.uxx * j.uyy - j.uxy ** 2)
    rhs = (1 + j.uy ** 2) * j.uxx - 2 * j.ux * j.uy * j.uxy + (1 + j.ux ** 2) * j.uyy
    return lhs - rhs


def separable_residual(f2: ArrayLike, f1sq: ArrayLike, g2: ArrayLike,
                       g1sq: ArrayLike) -> np.ndarray:
    """``2 f'' g'' - f'' (1 + g'^2) - g'' (1 + f'^2)`` from ``f''``, ``1+f'^2``, ``g''``, ``1+g'^2``."""
    f2, f1sq, g2, g1sq = (np.asarray(v, float) for v in (f2, f1sq, g2, g1sq))
    return 2 * f2 * g2 - f2 * g1sq - g2 * f1sq


def separation_constant(c: float) -> float:
    """``k`` with ``(1 + g'^2) / g'' = 1/k`` paired to ``c``; rejects ``c`` in ``{0, 1/2}``."""
    c = float(c)
    if c == 0.0:
        raise GeometryError("c = 0 does not define a log-cos profile; use the plane")
    if c == 0.5:
        raise GeometryError("c = 1/2 forces 1 + g'^2 = 0, no real solution")
    return c / (2 * c - 1)


def positivity_rectangle(c: float) -> tuple[tuple[float, float], tuple[float, float]]:
    """Open rectangle ``|c x| < pi/2``, ``|k y| < pi/2`` on which the family is defined."""
    k = separation_constant(c)
    hx, hy = np.pi / (2 * abs(c)), np.pi / (2 * abs(k))
    return (-hx, hx), (-hy, hy)


def _logcos_jet(c: float, t: np.ndarray):
    """``f = -(1/c) log cos(c t)`` and its first two derivatives."""
    ct = np.cos(c * t)
    tn = np.tan(c * t)
    return -np.log(ct) / c, tn, c * (1 + tn * tn)


def family_graph(c: float) -> GraphSurface:
    c = float(c)
    k = separation_constant(c)
    xr, yr = positivity_rectangle(c)

    def jet_fn(x, y):
        f, f1, f2 = _logcos_jet(c, x)
        g, g1, g2 = _logcos_jet(k, y)
        zero = np.zeros(np.broadcast(x, y).shape)
        return GraphJet(u=f + g, ux=f1 + zero, uy=g1 + zero, uxx=f2 + zero, uxy=zero,
                        uyy=g2 + zero)

    return GraphSurface(jet_fn, xr, yr, name=f"graph[c={c!r}]")


def solution_family(c: float, x: ArrayLike, y: ArrayLike) -> np.ndarray:
    """Height of the family member ``c`` at ``(x, y)``; raises outside the positivity domain."""
    return family_graph(c)(x, y)


def plane_graph(p: float = 0.0, q: float = 0.0, r: float = 0.0,
                half_width: float = 10.0) -> GraphSurface:
    """``u = p x + q y + r`` on ``(-half_width, half_width)^2``."""

    def jet_fn(x, y):
        zero = np.zeros(np.broadcast(x, y).shape)
        return GraphJet(u=p * x + q * y + r + zero, ux=zero + p, uy=zero + q, uxx=zero,
                        uxy=zero, uyy=zero)

    h = (-half_width, half_width)
    return GraphSurface(jet_fn, h, h, name="plane_graph")


def paraboloid_graph(a: float = 1.0, half_width: Optional[float] = 2.0) -> GraphSurface:
    """``u = a (x^2 + y^2)``; not a solution unless ``a = 0``."""

    def jet_fn(x, y):
        zero = np.zeros(np.broadcast(x, y).shape)
        return GraphJet(u=a * (x * x + y * y), ux=2 * a * x + zero, uy=2 * a * y + zero,
                        uxx=zero + 2 * a, uxy=zero, uyy=zero + 2 * a)

    h = (-half_width, half_width)
    return GraphSurface(jet_fn, h, h, name="paraboloid")
