"""Grid sampling, curvature-field tables and Wavefront OBJ / CSV writers.

All floats are printed with 17 significant digits so files round-trip exactly.
Grids are s-major: vertex ``(i, j)`` has index ``i * n_t + j``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .connection import CanonicalConnection, sectional_curvature
from .errors import GeometryError
from .geom_core import ParametricPatch
from .profiles import ProfileCurve

__all__ = [
    "fmt",
    "grid_parameters",
    "CURVATURE_HEADER",
    "curvature_rows",
    "Mesh",
    "grid_mesh",
    "write_obj",
    "parse_obj",
    "CURVE_HEADER",
    "curve_rows",
    "rows_to_csv",
    "json_dumps",
]


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def grid_parameters(patch: ParametricPatch, n_s: int, n_t: int) -> tuple[np.ndarray, np.ndarray]:
    """Equispaced ``(n_s, n_t)`` parameter grids over the closed patch rectangle."""
    if n_s < 2 or n_t < 2:
        raise ValueError("grid needs at least 2 points per direction")
    (s0, s1), (t0, t1) = patch.s_range, patch.t_range
    if not all(np.isfinite(v) for v in (s0, s1, t0, t1)):
        raise GeometryError("patch rectangle must be bounded to sample a grid")
    return np.meshgrid(np.linspace(s0, s1, n_s), np.linspace(t0, t1, n_t), indexing="ij")


CURVATURE_HEADER = ("s", "t", "x", "y", "z", "K_tilde", "G", "H", "C_dot_N", "K", "status")


def curvature_rows(patch: ParametricPatch, conn: CanonicalConnection, n_s: int, n_t: int,
                   method: str = "auto") -> list[tuple[str, ...]]:
    """One formatted row per grid point; degenerate points get ``status=degenerate``.

    Finite differences are used only at points whose stencil fits in the patch;
    points on the rectangle edge fall back to ``degenerate`` in that mode.
    """
    S, T = grid_parameters(patch, n_s, n_t)
    s, t = S.ravel(), T.ravel()
    with np.errstate(all="ignore"):
        try:
            xyz = patch(s, t)
        except GeometryError:
            xyz = np.full(s.shape + (3,), np.nan)
        rows = []
        for i in range(len(s)):
            values = [np.nan] * 5
            try:
                rep = sectional_curvature(patch, s[i], t[i], conn, method=method, strict=False)
                values = [rep.K_tilde, rep.G, rep.H, rep.C_dot_N, rep.K]
            except GeometryError:
                pass
            ok = all(np.isfinite(v) for v in values)
            rows.append((fmt(s[i]), fmt(t[i]), *(fmt(v) for v in xyz[i]),
                         *(fmt(v) for v in values), "ok" if ok else "degenerate"))
    return rows


@dataclass(frozen=True)
class Mesh:
    vertices: np.ndarray  # (n_s * n_t, 3)
    faces: np.ndarray     # (2 (n_s-1)(n_t-1), 3), zero-based

    def validate(self) -> None:
        if self.faces.size and (self.faces.min() < 0 or self.faces.max() >= len(self.vertices)):
            raise GeometryError("face index out of range")


def grid_mesh(patch: ParametricPatch, n_s: int, n_t: int) -> Mesh:
    """Triangulated quad grid; each quad ``(v00, v10, v11), (v00, v11, v01)``.

    With ``v10`` one step in ``s`` the winding is counter-clockwise about
    ``psi_s x psi_t``.
    """
    S, T = grid_parameters(patch, n_s, n_t)
    verts = patch(S, T).reshape(-1, 3)
    i, j = np.meshgrid(np.arange(n_s - 1), np.arange(n_t - 1), indexing="ij")
    v00 = (i * n_t + j).ravel()
    v10 = v00 + n_t
    v11 = v10 + 1
    v01 = v00 + 1
    faces = np.empty((2 * len(v00), 3), dtype=np.int64)
    faces[0::2] = np.column_stack([v00, v10, v11])
    faces[1::2] = np.column_stack([v00, v11, v01])
    mesh = Mesh(verts, faces)
    mesh.validate()
    return mesh


def write_obj(mesh: Mesh) -> str:
    """OBJ text with ``v`` and ``f`` records only (one-based indices)."""
    out = io.StringIO()
    for v in mesh.vertices:
        out.write("v " + " ".join(fmt(c) for c in v) + "\n")
    for f in mesh.faces:
        out.write("f " + " ".join(str(int(k) + 1) for k in f) + "\n")
    return out.getvalue()


def parse_obj(text: str) -> Mesh:
    verts, faces = [], []
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "v":
            verts.append([float(p) for p in parts[1:4]])
        elif parts[0] == "f":
            faces.append([int(p.split("/")[0]) - 1 for p in parts[1:]])
    return Mesh(np.array(verts, float).reshape(-1, 3), np.array(faces, np.int64).reshape(-1, 3))


CURVE_HEADER = ("s", "x", "z", "zp", "kappa")


def curve_rows(profile: ProfileCurve, n: int) -> list[tuple[str, ...]]:
    s = profile.grid(n)
    j = profile.jet(s)
    with np.errstate(all="ignore"):
        cols = [s, j.x, j.z, j.dz, j.kappa]
    return [tuple(fmt(c[i]) for c in cols) for i in range(n)]


def rows_to_csv(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return out.getvalue()


def json_dumps(obj, indent: int = 2) -> str:
    """Deterministic JSON with 17-significant-digit floats; non-finite floats become null."""

    def enc(o, level):
        pad = " " * (indent * (level + 1))
        end = " " * (indent * level)
        if isinstance(o, (bool, np.bool_)) or o is None:
            return {True: "true", False: "false", None: "null"}[None if o is None else bool(o)]
        if isinstance(o, (int, np.integer)):
            return str(int(o))
        if isinstance(o, (float, np.floating)):
            return fmt(o) if np.isfinite(o) else "null"
        if isinstance(o, str):
            return json.dumps(o)
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = [f"{pad}{json.dumps(str(k))}: {enc(v, level + 1)}" for k, v in o.items()]
            return "{\n" + ",\n".join(items) + "\n" + end + "}"
        if isinstance(o, (list, tuple, np.ndarray)):
            if len(o) == 0:
                return "[]"
            items = [pad + enc(v, level + 1) for v in o]
            return "[\n" + ",\n".join(items) + "\n" + end + "]"
        raise TypeError(f"cannot serialize {type(o).__name__}")

    return enc(obj, 0) + "\n"
