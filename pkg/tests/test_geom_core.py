import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from snmgeom.errors import DegenerateError, DomainError
from snmgeom.geom_core import (ParametricPatch, SurfaceJet2, classical_curvatures, cross, det,
                               dot, fundamental_forms, jet2, norm)
from snmgeom.graph_pde import family_graph
from snmgeom.profiles import euler_spiral_profile, sphere_profile
from snmgeom.rotational import RotationalSurface, rotational_classical

finite = st.floats(-10, 10, allow_nan=False)
vec = st.tuples(finite, finite, finite).map(np.array)


def plane_patch():
    def f(s, t):
        s, t = np.broadcast_arrays(s, t)
        return np.stack([s, t, np.zeros(s.shape)], axis=-1)
    return ParametricPatch(f, (-2, 2), (-2, 2), name="plane")


def unit_cylinder():
    def f(s, t):
        s, t = np.broadcast_arrays(s, t)
        return np.stack([np.cos(s), np.sin(s), t], axis=-1)

    def d(s, t):
        s, t = np.broadcast_arrays(s, t)
        z = np.zeros(s.shape)
        return SurfaceJet2(f(s, t), np.stack([-np.sin(s), np.cos(s), z], -1),
                           np.stack([z, z, z + 1], -1), np.stack([-np.cos(s), -np.sin(s), z], -1),
                           np.stack([z, z, z], -1), np.stack([z, z, z], -1))
    return ParametricPatch(f, (-4, 4), (-2, 2), d, name="cylinder")


@given(vec, vec, vec)
def test_det_is_triple_product(a, b, c):
    assert np.isclose(det(a, b, c), dot(cross(a, b), c), atol=1e-9)


@given(vec, vec)
def test_dot_symmetric_and_norm_nonnegative(a, b):
    assert dot(a, b) == dot(b, a)
    assert norm(a) >= 0


def test_plane_jet_has_vanishing_second_derivatives():
    j = jet2(plane_patch(), 0.3, -0.7)
    for v in (j.psi_ss, j.psi_st, j.psi_tt):
        assert np.allclose(v, 0, atol=1e-7)


def test_cylinder_jet_at_origin():
    j = jet2(unit_cylinder(), 0.0, 0.0)
    assert np.allclose(j.psi_ss, [-1, 0, 0])
    assert np.allclose(j.psi_st, 0)
    jf = jet2(unit_cylinder(), 0.0, 0.0, method="fd")
    assert np.allclose(jf.psi_ss, [-1, 0, 0], atol=1e-7)


def test_graph_jet_at_origin_analytic_and_fd():
    p = family_graph(1.0).patch()
    for method in ("analytic", "fd"):
        j = jet2(p, 0.0, 0.0, method=method)
        assert np.allclose(j.psi_ss, [0, 0, 1], atol=1e-7)
        assert np.allclose(j.psi_tt, [0, 0, 1], atol=1e-7)
        assert np.allclose(j.psi_st, 0, atol=1e-7)


def test_fundamental_forms_of_unit_cylinder():
    f = fundamental_forms(jet2(unit_cylinder(), 0.4, 0.1))
    assert np.allclose([f.g11, f.g12, f.g22], [1, 0, 1])
    # N = psi_s x psi_t points outward, so h11 = <psi_ss, N> = -1
    assert np.allclose([f.h11, f.h12, f.h22], [-1, 0, 0])


def test_plane_second_form_and_curvatures_vanish():
    f = fundamental_forms(jet2(plane_patch(), 0.1, 0.2))
    assert np.allclose([f.h11, f.h12, f.h22], 0, atol=1e-7)
    c = classical_curvatures(f)
    assert abs(c.G) < 1e-6 and abs(c.H) < 1e-6


def test_unit_sphere_gaussian_curvature_is_one():
    p = RotationalSurface(sphere_profile(1.0)).patch()
    s, t = np.meshgrid(np.linspace(0.2, 2.9, 9), np.linspace(0, 6, 9))
    c = classical_curvatures(fundamental_forms(jet2(p, s, t)))
    assert np.allclose(c.G, 1.0, atol=1e-12)


def test_rotational_forms_and_closed_form_curvatures():
    rng = np.random.default_rng(3)
    prof = euler_spiral_profile(2.0, 0.0, 0.7, 0.4, -0.2, (-1, 1))
    surf = RotationalSurface(prof)
    s = rng.uniform(-0.9, 0.9, 100)
    t = rng.uniform(0, 2 * np.pi, 100)
    f = fundamental_forms(jet2(surf.patch(), s, t))
    x = prof(s)[0]
    assert np.allclose(f.g11, 1, atol=1e-12)
    assert np.allclose(f.g12, 0, atol=1e-12)
    assert np.allclose(f.g22, x ** 2, atol=1e-12)
    c = classical_curvatures(f)
    G, H = rotational_classical(prof.jet(s))
    assert np.max(np.abs(c.G - G)) < 1e-9
    assert np.max(np.abs(c.H - H)) < 1e-9


def test_fd_jet_converges_at_second_order():
    p = RotationalSurface(euler_spiral_profile(2.0, 0.0, 0.7, 0.4, -0.2, (-1, 1))).patch()
    exact = jet2(p, 0.3, 1.1)
    errs = []
    for h in (1e-2, 5e-3):
        j = jet2(p, 0.3, 1.1, h, method="fd")
        errs.append(max(np.max(np.abs(getattr(j, k) - getattr(exact, k)))
                        for k in ("psi_s", "psi_t", "psi_ss", "psi_tt")))
    assert 3.5 <= errs[0] / errs[1] <= 4.5


@settings(max_examples=30, deadline=None)
@given(st.floats(-0.9, 0.9), st.floats(0.1, 6.0))
def test_parameter_swap_keeps_G_and_flips_H(s, t):
    p = RotationalSurface(euler_spiral_profile(2.0, 0.0, 0.7, 0.4, -0.2, (-1, 1))).patch()
    j = jet2(p, s, t)
    a = classical_curvatures(fundamental_forms(j))
    b = classical_curvatures(fundamental_forms(j.swapped()))
    assert np.isclose(a.G, b.G, atol=1e-12)
    assert np.isclose(a.H, -b.H, atol=1e-12)
    assert np.allclose(a.N, -b.N)


@settings(max_examples=30, deadline=None)
@given(st.floats(-0.9, 0.9), st.floats(0.1, 6.0))
def test_normal_is_unit_and_tangent_and_H2_ge_G(s, t):
    p = RotationalSurface(euler_spiral_profile(2.0, 0.0, 0.7, 0.4, -0.2, (-1, 1))).patch()
    j = jet2(p, s, t)
    f = fundamental_forms(j)
    assert np.isclose(norm(f.N), 1)
    assert abs(dot(f.N, j.psi_s)) < 1e-12 and abs(dot(f.N, j.psi_t)) < 1e-12
    c = classical_curvatures(f)
    assert c.H ** 2 >= c.G - 1e-12


def test_domain_and_degeneracy_errors():
    p = unit_cylinder()
    with pytest.raises(DomainError):
        jet2(p, 5.0, 0.0)
    with pytest.raises(DomainError):
        jet2(p.without_jet(), 4.0, 0.0, method="fd")
    with pytest.raises(ValueError):
        jet2(p, 0.0, 0.0, -1.0, method="fd")
    sphere = RotationalSurface(sphere_profile(1.0)).patch()
    with pytest.raises(DegenerateError):
        jet2(sphere, 0.0, 0.5)
    j = jet2(sphere, 0.0, 0.5, strict=False)
    f = fundamental_forms(j, strict=False)
    assert np.all(np.isnan(f.N))
