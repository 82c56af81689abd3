"""Named surface registry shared by the CLI and the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np
import tomli_w

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .axis_orthogonal import BRANCH_LIMIT, axis_orthogonal_profile
from .cylindrical import CylinderSpec, generating_curve_domain, grim_reaper_profile, \
    solve_generating_curve
from .errors import DomainError
from .geom_core import ParametricPatch, SurfaceJet2
from .graph_pde import family_graph
from .profiles import ProfileCurve, catenoid_profile, circle_profile, sphere_profile
from .rotational import RotationalSurface

__all__ = [
    "SurfaceRegistryEntry",
    "SurfaceSpec",
    "REGISTRY",
    "get_entry",
    "build_surface",
    "generating_curve_profile",
    "BRANCH_CODES",
    "load_toml",
]

#: numeric codes for the axis-orthogonal branch selector (parameters are real-valued)
BRANCH_CODES = {1: "plus", -1: "minus"}


@dataclass(frozen=True)
class SurfaceRegistryEntry:
    name: str
    params: Mapping[str, float]
    factory: Callable[..., ParametricPatch]
    description: str = ""

    def build(self, **overrides: float) -> ParametricPatch:
        unknown = set(overrides) - set(self.params)
        if unknown:
            raise KeyError(f"unknown parameter(s) for {self.name!r}: {sorted(unknown)}")
        values = {k: float(v) for k, v in {**self.params, **overrides}.items()}
        return self.factory(**values)


@dataclass(frozen=True)
class SurfaceSpec:
    """Surface name plus parameter overrides; round-trips through TOML."""

    name: str
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"surface": self.name, "params": {k: float(v) for k, v in self.params.items()}}

    @classmethod
    def from_dict(cls, data: Mapping) -> "SurfaceSpec":
        return cls(str(data["surface"]), {k: float(v) for k, v in data.get("params", {}).items()})

    def to_toml(self) -> str:
        return tomli_w.dumps(self.to_dict())

    @classmethod
    def from_toml(cls, text: str) -> "SurfaceSpec":
        return cls.from_dict(tomllib.loads(text))

    def build(self) -> ParametricPatch:
        return get_entry(self.name).build(**self.params)


def load_toml(path: str) -> dict:
    """Read a TOML file into a plain dict."""
    with open(path, "rb") as fh:
        return tomllib.load(fh)


def _plane(half_width: float, height: float) -> ParametricPatch:
    h = half_width

    def func(s, t):
        s, t = np.broadcast_arrays(np.asarray(s, float), np.asarray(t, float))
        return np.stack([s, t, np.full(s.shape, height)], axis=-1)

    def derivatives(s, t):
        s, t = np.broadcast_arrays(np.asarray(s, float), np.asarray(t, float))
        zero, one = np.zeros(s.shape), np.ones(s.shape)
        e1 = np.stack([one, zero, zero], axis=-1)
        e2 = np.stack([zero, one, zero], axis=-1)
        z3 = np.zeros(s.shape + (3,))
        return SurfaceJet2(func(s, t), e1, e2, z3, z3, z3)

    return ParametricPatch(func, (-h, h), (-h, h), derivatives, name="plane")


def _cylinder(r: float, height: float) -> ParametricPatch:
    # rulings along e_z, so a connection with C = e_z has rulings parallel to C
    spec = CylinderSpec(circle_profile(0.0, 0.0, r), w=np.array([0.0, 0.0, 1.0]))
    return spec.patch((-height, height))


def _sphere(r: float) -> ParametricPatch:
    return RotationalSurface(sphere_profile(r)).patch()


def _torus(R: float, r: float) -> ParametricPatch:
    if R <= r:
        raise DomainError("torus requires R > r")
    return RotationalSurface(circle_profile(R, 0.0, r)).patch()


def _catenoid(a: float, half_length: float) -> ParametricPatch:
    return RotationalSurface(catenoid_profile(a, (-half_length, half_length))).patch()


def _grim_reaper(half_length: float, height: float) -> ParametricPatch:
    return CylinderSpec(grim_reaper_profile((-half_length, half_length))).patch(
        (-height, height))


def generating_curve_profile(K: float, half_length: float = 3.0,
                             trim: float = 1e-3) -> ProfileCurve:
    """Quadrature generating curve restricted to a finite band.

    Finite endpoints (vertical tangent) are pulled in by ``trim`` times the
    band width; unbounded sides are cut at ``half_length`` from the anchor.
    """
    lo, hi = generating_curve_domain(K)
    anchor = 1.0 if K == 0 else 0.0
    if np.isfinite(lo) and np.isfinite(hi):
        d = trim * (hi - lo)
        lo, hi = lo + d, hi - d
    else:
        lo = lo if np.isfinite(lo) else anchor - half_length
        hi = hi if np.isfinite(hi) else anchor + half_length
    return solve_generating_curve(K).restricted(lo, hi)


def _cyl_generating(K: float, half_length: float, height: float) -> ParametricPatch:
    return CylinderSpec(generating_curve_profile(K, half_length)).patch((-height, height))


def _graph(c: float, fraction: float) -> ParametricPatch:
    if not 0 < fraction < 1:
        raise DomainError("fraction must lie in (0, 1)")
    g = family_graph(c)
    p = g.patch()
    (x0, x1), (y0, y1) = g.x_range, g.y_range
    return ParametricPatch(p.func, (fraction * x0, fraction * x1),
                           (fraction * y0, fraction * y1), p.derivatives, p.name)


def _rotational_axis(branch: float, x_max: float) -> ParametricPatch:
    code = int(branch)
    if code not in BRANCH_CODES or code != branch:
        raise DomainError("branch must be +1 (plus) or -1 (minus)")
    name = BRANCH_CODES[code]
    if not 0 < x_max < BRANCH_LIMIT[name]:
        raise DomainError(f"x_max must lie in (0, {BRANCH_LIMIT[name]:.6g}) for the "
                          f"{name} branch")
    prof = axis_orthogonal_profile(name, x_max).profile()
    return RotationalSurface(prof).patch()


REGISTRY: dict[str, SurfaceRegistryEntry] = {
    e.name: e
    for e in [
        SurfaceRegistryEntry("plane", {"half_width": 1.0, "height": 0.0}, _plane,
                             "horizontal plane z = height"),
        SurfaceRegistryEntry("cylinder", {"r": 1.0, "height": 1.0}, _cylinder,
                             "circular cylinder with rulings along e_z"),
        SurfaceRegistryEntry("sphere", {"r": 1.0}, _sphere, "sphere about the origin"),
        SurfaceRegistryEntry("torus", {"R": 2.0, "r": 0.5}, _torus,
                             "torus of revolution about e_z"),
        SurfaceRegistryEntry("catenoid", {"a": 1.0, "half_length": 1.5}, _catenoid,
                             "catenoid about e_z"),
        SurfaceRegistryEntry("grim_reaper", {"half_length": 2.0, "height": 1.0},
                             _grim_reaper, "cylinder over the grim reaper, rulings e_y"),
        SurfaceRegistryEntry("cyl_generating", {"K": 1.0, "half_length": 3.0,
                                                "height": 1.0},
                             _cyl_generating, "constant-K cylinder, rulings e_y"),
        SurfaceRegistryEntry("graph", {"c": 1.0, "fraction": 0.9}, _graph,
                             "separable graph with K = K~"),
        SurfaceRegistryEntry("rotational_axis", {"branch": 1.0, "x_max": 1.0},
                             _rotational_axis,
                             "rotational surface meeting e_z orthogonally"),
    ]
}


def get_entry(name: str) -> SurfaceRegistryEntry:
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown surface {name!r}; known: {sorted(REGISTRY)}") from None


def build_surface(name: str, **params: float) -> ParametricPatch:
    return get_entry(name).build(**params)
