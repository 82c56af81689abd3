"""Euclidean primitives, parametric patches and classical surface curvatures.

Vectors are plain ``numpy`` arrays whose last axis has length 3.  Every
function broadcasts over leading axes, so a grid of points is handled by the
same call as a single point.

The unit normal is always ``N = (psi_s x psi_t) / |psi_s x psi_t|``; the sign
of the mean curvature and of ``<C, N>`` downstream follow from this choice.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np
from numpy.typing import ArrayLike

from .errors import DegenerateError, DomainError

__all__ = [
    "DEGENERACY_TOL",
    "vec3",
    "dot",
    "cross",
    "det",
    "norm",
    "normalize",
    "SurfaceJet2",
    "ParametricPatch",
    "FundamentalForms",
    "ClassicalCurvatures",
    "default_step",
    "jet2",
    "fundamental_forms",
    "classical_curvatures",
]

#: metric determinants below this are treated as a degenerate immersion
DEGENERACY_TOL = 1e-12


def vec3(x: float, y: float, z: float) -> np.ndarray:
    return np.array([x, y, z], dtype=float)


def dot(a: ArrayLike, b: ArrayLike) -> np.ndarray:
    """Inner product along the last axis."""
    return np.sum(np.asarray(a, dtype=float) * np.asarray(b, dtype=float), axis=-1)


def cross(a: ArrayLike, b: ArrayLike) -> np.ndarray:
    return np.cross(np.asarray(a, dtype=float), np.asarray(b, dtype=float))


def det(a: ArrayLike, b: ArrayLike, c: ArrayLike) -> np.ndarray:
    """Determinant of the matrix with rows ``a, b, c``, i.e. ``<a x b, c>``."""
    return dot(cross(a, b), c)


def norm(a: ArrayLike) -> np.ndarray:
    return np.sqrt(dot(a, a))


def normalize(a: ArrayLike) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    n = norm(a)
    if np.any(n == 0):
        raise DegenerateError("cannot normalize a zero vector")
    return a / np.asarray(n)[..., None]


@dataclass(frozen=True)
class SurfaceJet2:
    """Value and partial derivatives up to order two of ``psi(s, t)``."""

    psi: np.ndarray
    psi_s: np.ndarray
    psi_t: np.ndarray
    psi_ss: np.ndarray
    psi_st: np.ndarray
    psi_tt: np.ndarray

    def swapped(self) -> "SurfaceJet2":
        """Jet of the same surface with the parameters exchanged."""
        return SurfaceJet2(self.psi, self.psi_t, self.psi_s,
                           self.psi_tt, self.psi_st, self.psi_ss)


JetFunction = Callable[[np.ndarray, np.ndarray], SurfaceJet2]


@dataclass(frozen=True)
class ParametricPatch:
    """A map ``(s, t) -> psi(s, t)`` on a closed rectangle.

    ``func`` must broadcast over array arguments and return an array of shape
    ``broadcast(s, t).shape + (3,)``.  ``derivatives``, when given, returns the
    analytic :class:`SurfaceJet2` with the same broadcasting rules.
    """

    func: Callable[[np.ndarray, np.ndarray], np.ndarray]
    s_range: tuple[float, float] = (-np.inf, np.inf)
    t_range: tuple[float, float] = (-np.inf, np.inf)
    derivatives: Optional[JetFunction] = None
    name: str = ""

    def __call__(self, s: ArrayLike, t: ArrayLike) -> np.ndarray:
        return np.asarray(self.func(np.asarray(s, float), np.asarray(t, float)), float)

    @property
    def has_analytic_jet(self) -> bool:
        return self.derivatives is not None

    def translated(self, v: ArrayLike) -> "ParametricPatch":
        v = np.asarray(v, dtype=float)
        func = self.func
        derivs = self.derivatives

        def moved(s, t):
            return np.asarray(func(s, t), float) + v

        moved_jet = None
        if derivs is not None:
            def moved_jet(s, t):
                j = derivs(s, t)
                return replace(j, psi=np.asarray(j.psi) + v)

        return replace(self, func=moved, derivatives=moved_jet)

    def without_jet(self) -> "ParametricPatch":
        """Same patch with the analytic derivatives dropped (forces finite differences)."""
        return replace(self, derivatives=None)

    def contains(self, s: ArrayLike, t: ArrayLike, margin: ArrayLike = 0.0) -> np.ndarray:
        s = np.asarray(s, float)
        t = np.asarray(t, float)
        return ((s - margin >= self.s_range[0]) & (s + margin <= self.s_range[1])
                & (t - margin >= self.t_range[0]) & (t + margin <= self.t_range[1]))


@dataclass(frozen=True)
class FundamentalForms:
    g11: np.ndarray
    g12: np.ndarray
    g22: np.ndarray
    h11: np.ndarray
    h12: np.ndarray
    h22: np.ndarray
    N: np.ndarray

    @property
    def metric_det(self) -> np.ndarray:
        return self.g11 * self.g22 - self.g12 ** 2


@dataclass(frozen=True)
class ClassicalCurvatures:
    G: np.ndarray
    H: np.ndarray
    N: np.ndarray


def default_step(s: ArrayLike, t: ArrayLike) -> np.ndarray:
    """Finite-difference step ``1e-4 * max(1, |s|, |t|)``."""
    return 1e-4 * np.maximum(1.0, np.maximum(np.abs(s), np.abs(t)))


def _fd_jet(patch: ParametricPatch, s: np.ndarray, t: np.ndarray,
            h: np.ndarray) -> SurfaceJet2:
    f = patch
    hv = h[..., None]
    p0 = f(s, t)
    sp, sm = f(s + h, t), f(s - h, t)
    tp, tm = f(s, t + h), f(s, t - h)
    pp, pm = f(s + h, t + h), f(s + h, t - h)
    mp, mm = f(s - h, t + h), f(s - h, t - h)
    return SurfaceJet2(
        psi=p0,
        psi_s=(sp - sm) / (2 * hv),
        psi_t=(tp - tm) / (2 * hv),
        psi_ss=(sp - 2 * p0 + sm) / hv ** 2,
        psi_st=(pp - pm - mp + mm) / (4 * hv ** 2),
        psi_tt=(tp - 2 * p0 + tm) / hv ** 2,
    )


def jet2(patch: ParametricPatch, s: ArrayLike, t: ArrayLike,
         step: Optional[float] = None, *, method: str = "auto",
         strict: bool = True) -> SurfaceJet2:
    """Second-order jet of ``patch`` at ``(s, t)``.

    ``method`` is ``"auto"`` (analytic when available), ``"analytic"`` or
    ``"fd"`` (central differences, truncation error O(step**2)).  With
    ``strict=False`` degenerate points are returned instead of raising.
    """
    s, t = np.broadcast_arrays(np.asarray(s, float), np.asarray(t, float))
    if method == "auto":
        method = "analytic" if patch.has_analytic_jet else "fd"
    if method == "analytic":
        if patch.derivatives is None:
            raise ValueError("patch has no analytic derivatives")
        if strict and not np.all(patch.contains(s, t)):
            raise DomainError("point outside the patch domain")
        jet = patch.derivatives(s, t)
        jet = SurfaceJet2(*(np.broadcast_to(np.asarray(v, float), s.shape + (3,))
                            for v in (jet.psi, jet.psi_s, jet.psi_t,
                                      jet.psi_ss, jet.psi_st, jet.psi_tt)))
    elif method == "fd":
        h = default_step(s, t) if step is None else np.full(s.shape, float(step))
        if np.any(h <= 0):
            raise ValueError("finite-difference step must be positive")
        if strict and not np.all(patch.contains(s, t, margin=2 * h)):
            raise DomainError("point closer than 2*step to the patch boundary")
        jet = _fd_jet(patch, s, t, h)
    else:
        raise ValueError(f"unknown jet method {method!r}")

    if strict:
        area2 = dot(cross(jet.psi_s, jet.psi_t), cross(jet.psi_s, jet.psi_t))
        if np.any(~(area2 >= DEGENERACY_TOL)):
            raise DegenerateError("psi_s and psi_t are (nearly) parallel")
    return jet


def fundamental_forms(jet: SurfaceJet2, *, strict: bool = True) -> FundamentalForms:
    """First and second fundamental forms with ``N = psi_s x psi_t / |...|``.

    Non-strict mode fills degenerate points with NaN.
    """
    g11 = dot(jet.psi_s, jet.psi_s)
    g12 = dot(jet.psi_s, jet.psi_t)
    g22 = dot(jet.psi_t, jet.psi_t)
    detg = g11 * g22 - g12 ** 2
    bad = ~(detg >= DEGENERACY_TOL)
    if strict and np.any(bad):
        raise DegenerateError("degenerate first fundamental form")
    n = cross(jet.psi_s, jet.psi_t)
    with np.errstate(invalid="ignore", divide="ignore"):
        N = n / norm(n)[..., None]
    if np.any(bad):
        N = np.where(np.asarray(bad)[..., None], np.nan, N)
    return FundamentalForms(g11=g11, g12=g12, g22=g22,
                            h11=dot(jet.psi_ss, N), h12=dot(jet.psi_st, N),
                            h22=dot(jet.psi_tt, N), N=N)


def classical_curvatures(forms: FundamentalForms, *, strict: bool = True) -> ClassicalCurvatures:
    detg = forms.metric_det
    if strict and np.any(~(detg >= DEGENERACY_TOL)):
        raise DegenerateError("degenerate first fundamental form")
    with np.errstate(invalid="ignore", divide="ignore"):
        G = (forms.h11 * forms.h22 - forms.h12 ** 2) / detg
        H = (forms.g22 * forms.h11 - 2 * forms.g12 * forms.h12
             + forms.g11 * forms.h22) / (2 * detg)
    return ClassicalCurvatures(G=G, H=H, N=forms.N)
