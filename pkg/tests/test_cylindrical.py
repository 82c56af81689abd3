import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import generating_x_mp
from snmgeom.connection import CanonicalConnection, sectional_curvature
from snmgeom.cylindrical import (CylinderSpec, closed_form_curve_K_half,
                                 closed_form_curve_K_minus_half, cylinder_K,
                                 generating_curve_domain, grim_reaper_profile,
                                 solve_generating_curve)
from snmgeom.errors import DomainError, GeometryError
from snmgeom.geom_core import cross, det, normalize
from snmgeom.profiles import euler_spiral_profile, line_profile
from snmgeom.verification import generating_curve_residuals

Z = CanonicalConnection(np.array([0.0, 0.0, 1.0]))


def test_spec_validation():
    prof = line_profile(0, 0, 0)
    with pytest.raises(GeometryError):
        CylinderSpec(prof, w=np.array([0.0, 2.0, 0.0]))
    with pytest.raises(GeometryError):
        CylinderSpec(prof, w=np.array([0.0, 1.0, 0.0]), e_x=np.array([0.0, 1.0, 0.0]))


@settings(max_examples=30, deadline=None)
@given(st.floats(-0.9, 0.9))
def test_orientation_convention(s):
    w = normalize(np.array([0.2, 0.9, -0.3]))
    e_x = normalize(np.cross(w, [1.0, 0, 0]))
    spec = CylinderSpec(euler_spiral_profile(0, 0, 0.3, 0.5, 0.4, (-1, 1)), w=w, e_x=e_x)
    j, d1, d2, n = spec.curve(s)
    assert det(d1, w, n) == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(d2, j.kappa * n, atol=1e-12)
    assert abs(np.dot(d1, w)) < 1e-12


def test_cylinder_K_examples():
    rng = np.random.default_rng(0)
    C = normalize(rng.normal(size=3))
    conn = CanonicalConnection(C)
    e_x = normalize(np.cross(C, [0.3, 0.1, 0.2]))
    spec = CylinderSpec(euler_spiral_profile(0, 0, 0.3, 0.5, 0.4, (-1, 1)), w=C, e_x=e_x)
    assert np.allclose(cylinder_K(spec, conn, np.linspace(-1, 1, 9)), 0.5, atol=1e-14)
    flat = CylinderSpec(line_profile(0, 0, 0))
    assert np.allclose(cylinder_K(flat, Z, np.linspace(-3, 3, 7)), 0.0)
    gr = CylinderSpec(grim_reaper_profile())
    assert np.allclose(cylinder_K(gr, Z, np.linspace(-5, 5, 11)), 0.5, atol=1e-14)


@settings(max_examples=20, deadline=None)
@given(st.floats(-0.9, 0.9), st.floats(-0.9, 0.9), st.integers(0, 1000))
def test_cylinder_K_matches_pipeline_and_is_t_independent(s, t, seed):
    rng = np.random.default_rng(seed)
    w = normalize(rng.normal(size=3))
    e_x = normalize(np.cross(w, rng.normal(size=3)))
    spec = CylinderSpec(euler_spiral_profile(0.5, 0, 0.3, 0.5, -0.4, (-1, 1)), w=w, e_x=e_x)
    conn = CanonicalConnection(normalize(rng.normal(size=3)))
    p = spec.patch()
    assert sectional_curvature(p, s, t, conn).K == pytest.approx(cylinder_K(spec, conn, s),
                                                                 abs=1e-12)
    assert sectional_curvature(p.without_jet(), s, t, conn, method="fd").K == pytest.approx(
        cylinder_K(spec, conn, s), abs=1e-6)


def test_generating_domains():
    assert generating_curve_domain(1.0)[1] == pytest.approx(0.6232, abs=1e-4)
    om = np.sqrt(2.0)
    assert 1 - 2 * np.tanh(om * generating_curve_domain(1.0)[1]) ** 2 == pytest.approx(0, abs=1e-14)
    assert generating_curve_domain(0.0) == (1.0, np.inf)
    assert generating_curve_domain(0.25) == (-np.inf, np.inf)
    lo, hi = generating_curve_domain(-0.5)
    assert hi == pytest.approx(np.pi / 4)


def test_generating_curve_examples():
    j = solve_generating_curve(0.0).jet(1.0)
    assert (float(j.z), float(j.dz), float(j.dx)) == pytest.approx((0, -1, 0), abs=1e-15)
    j = solve_generating_curve(1.0).jet(0.0)
    assert (float(j.x), float(j.z), float(j.dz), float(j.dx)) == pytest.approx((0, 0, 0, 1))


@pytest.mark.parametrize("K,s", [(1.0, 0.5), (0.5, 2.5), (0.0, 3.0), (-0.5, -0.7), (-1.0, 0.4),
                                 (0.2, -4.0)])
def test_generating_curve_x_against_mpmath(K, s):
    assert solve_generating_curve(K)(s)[0] == pytest.approx(generating_x_mp(K, s), abs=1e-10)


@pytest.mark.parametrize("K", [1.0, 0.5, 0.0, -0.5, -1.0, 0.3, -2.0])
def test_generating_curve_residuals(K):
    res = generating_curve_residuals(K)
    assert res["ode"] < 1e-8
    assert res["arc_length"] < 1e-9


@pytest.mark.parametrize("K", [1.0, 0.5, 0.0, -0.5, -1.0])
def test_cylinder_over_generating_curve_reproduces_K(K):
    rng = np.random.default_rng(int(10 * K) + 20)
    prof = solve_generating_curve(K)
    lo, hi = prof.domain
    anchor = 1.0 if K == 0 else 0.0
    lo, hi = max(lo, anchor - 3), min(hi, anchor + 3)
    s = rng.uniform(lo + 0.05 * (hi - lo), hi - 0.05 * (hi - lo), 200)
    t = rng.uniform(-1, 1, 200)
    rep = sectional_curvature(CylinderSpec(prof).patch().without_jet(), s, t, Z, method="fd")
    assert np.max(np.abs(rep.K - K)) < 1e-6
    assert np.ptp(sectional_curvature(CylinderSpec(prof).patch(), s[0], t, Z).K) < 1e-8


def test_grim_reaper_closed_form():
    s = np.linspace(-4, 4, 41)
    xq, zq = solve_generating_curve(0.5)(s)
    xc, zc = closed_form_curve_K_half(s)
    assert np.max(np.abs(xq - xc)) < 1e-8 and np.max(np.abs(zq - zc)) < 1e-8
    assert closed_form_curve_K_half(0.0) == (0.0, 0.0)
    assert closed_form_curve_K_half(20.0)[0] == pytest.approx(np.pi / 2, abs=1e-8)
    assert np.max(grim_reaper_profile().arc_length_defect(s)) < 1e-15


def test_minus_half_closed_form():
    x, z = closed_form_curve_K_minus_half(0.0)
    assert (float(x), float(z)) == (0.0, 0.0)
    s = np.linspace(0.01, 0.7, 30)
    xq, zq = solve_generating_curve(-0.5)(s)
    xc, zc = closed_form_curve_K_minus_half(s)
    assert np.max(np.abs(xq - xc)) < 1e-8
    # on s < 0 the closed-form antiderivative is not arc length: its slope differs
    h = 1e-6
    slope = (closed_form_curve_K_minus_half(-0.3 + h)[0]
             - closed_form_curve_K_minus_half(-0.3 - h)[0]) / (2 * h)
    assert abs(slope - np.sqrt(1 - np.tan(0.3) ** 2)) > 1.0
    with pytest.raises(DomainError):
        closed_form_curve_K_minus_half(1.0)
