import csv
import io

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from snmgeom.connection import CanonicalConnection
from snmgeom.errors import DomainError
from snmgeom.geom_core import cross, jet2
from snmgeom.mesh import (CURVATURE_HEADER, curvature_rows, curve_rows, grid_mesh, json_dumps,
                          parse_obj, rows_to_csv, write_obj)
from snmgeom.surfaces import REGISTRY, SurfaceSpec, build_surface, generating_curve_profile

Z = CanonicalConnection(np.array([0.0, 0.0, 1.0]))


@pytest.mark.parametrize("name", sorted(REGISTRY))
def test_registry_round_trip_and_build(name):
    spec = SurfaceSpec(name, dict(REGISTRY[name].params))
    again = SurfaceSpec.from_toml(spec.to_toml())
    assert again == spec
    patch = again.build()
    assert np.all(np.isfinite(patch.s_range)) and np.all(np.isfinite(patch.t_range))


def test_registry_errors():
    with pytest.raises(KeyError):
        build_surface("klein_bottle")
    with pytest.raises(KeyError):
        build_surface("sphere", radius=2.0)
    with pytest.raises(DomainError):
        build_surface("torus", R=1.0, r=2.0)
    with pytest.raises(DomainError):
        build_surface("rotational_axis", branch=1.0, x_max=2.0)


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 12), st.integers(2, 12))
def test_mesh_counts_and_indices(n_s, n_t):
    mesh = grid_mesh(build_surface("torus"), n_s, n_t)
    assert len(mesh.vertices) == n_s * n_t
    assert len(mesh.faces) == 2 * (n_s - 1) * (n_t - 1)
    assert mesh.faces.min() >= 0 and mesh.faces.max() < n_s * n_t
    back = parse_obj(write_obj(mesh))
    assert np.array_equal(back.vertices, mesh.vertices)
    assert np.array_equal(back.faces, mesh.faces)


def test_mesh_winding_follows_surface_normal():
    patch = build_surface("cylinder")
    mesh = grid_mesh(patch, 12, 6)
    S = np.linspace(*patch.s_range, 12)
    T = np.linspace(*patch.t_range, 6)
    for f in mesh.faces[::7]:
        a, b, c = mesh.vertices[f]
        i, j = divmod(int(f[0]), 6)
        N = cross(*(lambda jt: (jt.psi_s, jt.psi_t))(jet2(patch, S[i], T[j])))
        assert np.dot(cross(b - a, c - a), N) > 0


def test_curvature_rows_examples():
    rows = curvature_rows(build_surface("cylinder"), Z, 10, 10)
    assert len(rows) == 100
    assert {r[9] for r in rows} == {"0.5"} and {r[10] for r in rows} == {"ok"}
    # s-major order
    assert [r[0] for r in rows[:10]] == [rows[0][0]] * 10
    rows = curvature_rows(build_surface("plane"), CanonicalConnection(np.array([0.6, 0, 0.8])),
                          4, 3)
    # horizontal plane: K = K_tilde = (1 - 0.8^2) / 2
    assert all(float(r[9]) == pytest.approx(0.18, abs=1e-15) for r in rows)
    rows = curvature_rows(build_surface("sphere"), Z, 5, 4)
    status = [r[10] for r in rows]
    assert status[:4] == ["degenerate"] * 4 and status[-4:] == ["degenerate"] * 4
    assert all(float(r[9]) == pytest.approx(1.5) for r in rows[8:12])


def test_csv_text_round_trips_floats():
    rows = curvature_rows(build_surface("torus"), Z, 3, 3)
    text = rows_to_csv(CURVATURE_HEADER, rows)
    parsed = list(csv.reader(io.StringIO(text)))
    assert tuple(parsed[0]) == CURVATURE_HEADER
    for r, p in zip(rows, parsed[1:]):
        assert [float(a) for a in r[:-1]] == [float(b) for b in p[:-1]]


def test_curve_rows_columns():
    rows = curve_rows(generating_curve_profile(1.0), 11)
    assert len(rows) == 11 and len(rows[0]) == 5
    s, x, z, zp, kappa = (float(v) for v in rows[5])
    assert (s, x, z, zp) == pytest.approx((0, 0, 0, 0), abs=1e-15)
    assert kappa == pytest.approx(-2.0)


def test_json_dumps_round_trip():
    import json
    data = [{"a": 0.1, "b": [1, 2.5e-300, float("nan")], "ok": np.bool_(True)}]
    back = json.loads(json_dumps(data))
    assert back[0]["a"] == 0.1 and back[0]["b"] == [1, 2.5e-300, None] and back[0]["ok"] is True
