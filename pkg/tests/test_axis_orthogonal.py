import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from snmgeom.axis_orthogonal import (ALPHA, BRANCH_LIMIT, axis_orthogonal_profile,
                                     branch_slope, branch_slope_derivative, first_integral,
                                     first_integral_rhs, integrate_axis_graph, k_half_rhs,
                                     quadratic_coefficients, quadratic_zprime, track_branch)
from snmgeom.connection import CanonicalConnection, sectional_curvature
from snmgeom.errors import DomainError, GeometryError
from snmgeom.rotational import RotationalSurface, shoot_curvature


def test_first_integral_examples():
    assert first_integral(0.0, 0.0) == 0.0
    assert first_integral(2.0, -1.0) == pytest.approx(0.0, abs=1e-15)
    W = np.sqrt(1.25)
    assert first_integral(1.0, 0.5) == pytest.approx(-2 * (W - 1) - 0.5, abs=1e-15)


def test_quadratic_examples():
    assert quadratic_zprime(0.0) == (0.0,)
    r2 = quadratic_zprime(2.0)
    assert len(r2) == 1 and r2[0] == pytest.approx(-1.0, abs=1e-12)
    r1 = quadratic_zprime(1.0)
    ref = sorted(np.roots([-5.0, 16.0, 7.0]).real)
    assert r1 == pytest.approx(tuple(ref), abs=1e-12)
    assert r1 == pytest.approx((-0.3899, 3.5899), abs=1e-4)
    assert quadratic_coefficients(1.0) == (-5.0, 16.0, 7.0)


@settings(max_examples=100)
@given(st.floats(0.0, 3.4))
def test_admitted_roots_satisfy_first_integral(x):
    for p in quadratic_zprime(x):
        assert abs(first_integral(x, p)) < 1e-9


def test_squaring_introduces_rejected_roots():
    # beyond the last vertical tangent the squared equation still has real roots,
    # none of which satisfy the unsquared relation
    x = 3.4
    a, b, c = quadratic_coefficients(x)
    roots = np.roots([a, b, c])
    assert np.all(np.isreal(roots))
    assert all(abs(first_integral(x, p)) > 1e-3 for p in roots.real)
    assert quadratic_zprime(x) == ()


@pytest.mark.parametrize("branch", ["plus", "minus"])
def test_branch_closed_form_tracks_roots_and_satisfies_F(branch):
    track = track_branch(branch, BRANCH_LIMIT[branch] - 0.02)
    assert np.max(np.abs(branch_slope(track[:, 0], branch) - track[:, 1])) < 1e-9
    assert np.max(np.abs(first_integral(track[:, 0], track[:, 1]))) < 1e-9
    with pytest.raises(DomainError):
        track_branch(branch, BRANCH_LIMIT[branch] + 0.01)


@pytest.mark.parametrize("branch", ["plus", "minus"])
def test_axis_slope_ratio(branch):
    assert ALPHA[branch] ** 2 - ALPHA[branch] - 0.5 == pytest.approx(0, abs=1e-15)
    for x in (1e-3, 1e-4):
        assert branch_slope(x, branch) / x == pytest.approx(ALPHA[branch], abs=1e-6)


def test_minus_branch_through_double_root():
    assert branch_slope(2.0, "minus") == pytest.approx(-1.0, abs=1e-14)
    xs = np.linspace(1.9, 2.1, 21)
    p = branch_slope(xs, "minus")
    assert np.all(np.isfinite(p)) and np.max(np.abs(np.diff(p, 2))) < 1e-3
    assert np.isnan(branch_slope(3.3, "minus")) and np.isnan(branch_slope(1.3, "plus"))


@settings(max_examples=40)
@given(st.floats(0.05, 1.2), st.sampled_from(["plus", "minus"]))
def test_implicit_derivative_equals_graph_equation(x, branch):
    p = float(branch_slope(x, branch))
    assert branch_slope_derivative(x, p, branch) == pytest.approx(first_integral_rhs(x, p),
                                                                  rel=1e-9)


@settings(max_examples=40)
@given(st.floats(0.05, 1.0), st.floats(-3, 3))
def test_k_half_graph_equation_is_the_profile_equation(x, p):
    # converting the arc-length curvature equation to graph form
    W = np.sqrt(1 + p * p)
    if abs(2 * p - x) < 1e-3:
        return
    kappa = shoot_curvature(0.5, x, np.arctan(p))
    assert k_half_rhs(x, p) == pytest.approx(kappa * W ** 3, rel=1e-9, abs=1e-12)


@pytest.mark.parametrize("branch", ["plus", "minus"])
def test_first_integral_conserved_along_its_graph_equation(branch):
    x_max = BRANCH_LIMIT[branch] - 0.05
    sol = integrate_axis_graph(branch, x_max, "first_integral")
    x = np.linspace(1e-3, x_max, 300)
    assert np.max(np.abs(first_integral(x, sol(x)[1]))) < 1e-8


@pytest.mark.parametrize("branch", ["plus", "minus"])
def test_ode_profiles_have_K_half(branch):
    prof = axis_orthogonal_profile(branch, 1.0, method="ode")
    x = np.linspace(0.1, 1.0, 30)
    assert np.max(np.abs(prof.k_defect(x))) < 1e-9
    assert prof.slope(np.asarray(1e-3)) / 1e-3 == pytest.approx(ALPHA[branch], abs=1e-6)


def test_first_integral_profiles_do_not_have_K_half():
    # F = 0 is conserved by (x W + p) W^2 / (2p - x), not by the K = 1/2 graph
    # equation (x + p) W^2 / (2p - x); the two differ away from the axis.
    prof = axis_orthogonal_profile("minus", 1.0)
    x = np.array([0.5, 1.0])
    p = prof.slope(x)
    assert np.all(np.abs(first_integral_rhs(x, p) - k_half_rhs(x, p)) > 1e-3)
    assert np.all(np.abs(prof.k_defect(x)) > 1e-3)


@pytest.mark.parametrize("method,close", [("ode", True), ("first_integral", False)])
def test_K_from_generic_pipeline(method, close):
    ap = axis_orthogonal_profile("minus", 1.0, method=method)
    patch = RotationalSurface(ap.profile()).patch().without_jet()
    s = ap.arclength(np.array([0.4, 0.7, 0.9]))
    K = sectional_curvature(patch, s, 0.3, CanonicalConnection(np.array([0.0, 0.0, 1.0])),
                            method="fd").K
    assert bool(np.max(np.abs(K - 0.5)) < 1e-6) is close


def test_profile_conversion_to_arc_length():
    ap = axis_orthogonal_profile("minus", 1.5)
    pc = ap.profile()
    s = np.linspace(0.05, ap.s_max * 0.99, 9)
    j = pc.jet(s)
    assert np.max(np.abs(j.dx ** 2 + j.dz ** 2 - 1)) < 1e-12
    assert np.allclose(ap.arclength(ap.x_of_s(s)), s, atol=1e-12)
    assert float(pc.jet(0.0).x) == 0.0


def test_errors():
    with pytest.raises(ValueError):
        axis_orthogonal_profile("middle", 1.0)
    with pytest.raises(DomainError):
        axis_orthogonal_profile("plus", 1.3)
    with pytest.raises(DomainError):
        axis_orthogonal_profile("minus", -1.0)
    with pytest.raises(GeometryError):
        integrate_axis_graph("plus", 2.0, "first_integral")
