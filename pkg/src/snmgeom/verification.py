"""Deterministic numerical verification suites.

Each suite returns a list of :class:`Check` records.  Randomized suites draw
from ``numpy.random.default_rng([seed, suite_index])`` so a suite's output does
not depend on which other suites run.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .axis_orthogonal import (ALPHA, BRANCH_LIMIT, axis_orthogonal_profile, first_integral,
                              integrate_axis_graph, quadratic_zprime)
from .connection import CanonicalConnection, ambient_curvature_batch, sectional_curvature
from .cylindrical import CylinderSpec, closed_form_curve_K_half, \
    closed_form_curve_K_minus_half, cylinder_K, solve_generating_curve
from .errors import GeometryError
from .geom_core import cross, normalize
from .graph_pde import family_graph, pde_residual
from .profiles import ProfileCurve, catenoid_profile, circle_profile, euler_spiral_profile, \
    sphere_profile
from .rotational import RotationalSurface, circle_residual, conical_scan, fourier_coefficients, \
    profile_ode_shoot, rotational_K_axis_aligned, rotational_K_general
from .trig import equispaced_angles

__all__ = ["Check", "SUITES", "suite_names", "run_suite", "run_all", "random_unit",
           "random_spiral", "random_frame_orthogonal_to"]

LITERATURE_A3_RATIO = -1.0 / 3.0
ORACLE_A3_RATIO = -0.25


@dataclass
class Check:
    name: str
    anchor: str
    passed: bool
    measured: dict = field(default_factory=dict)
    tolerance: dict = field(default_factory=dict)
    runtime: float | None = None

    def to_dict(self, timing: bool = False) -> dict:
        d = {"check": self.name, "anchor": self.anchor,
             "status": "pass" if self.passed else "fail",
             "measured": self.measured, "tolerance": self.tolerance}
        if timing and self.runtime is not None:
            d["runtime"] = self.runtime
        return d


# -- random generators --------------------------------------------------------


def random_unit(rng: np.random.Generator, n: int | None = None) -> np.ndarray:
    v = rng.normal(size=(3,) if n is None else (n, 3))
    return normalize(v)


def random_frame_orthogonal_to(rng: np.random.Generator, w: np.ndarray) -> np.ndarray:
    """Random unit vector orthogonal to the unit vector ``w``."""
    v = rng.normal(size=3)
    v -= np.dot(v, w) * w
    return v / np.linalg.norm(v)


def random_spiral(rng: np.random.Generator, x_min: float = 0.5) -> ProfileCurve:
    """Euler spiral on ``[-1, 1]`` staying at ``x >= x_min`` and never horizontal for long."""
    x0 = rng.uniform(1.0, 2.0) + x_min
    phi0 = rng.choice([-1.0, 1.0]) * rng.uniform(0.3, 1.2)
    k0 = rng.uniform(-0.5, 0.5)
    k1 = rng.uniform(-0.3, 0.3)
    return euler_spiral_profile(x0, rng.uniform(-1, 1), phi0, k0, k1, (-1.0, 1.0))


def _c_with_ab(rng: np.random.Generator, min_ab2: float = 0.01) -> np.ndarray:
    while True:
        C = random_unit(rng)
        if C[0] ** 2 + C[1] ** 2 >= min_ab2:
            return C


def _f(x) -> float:
    return float(x)


# -- suites ---------------------------------------------------------------------


def suite_ambient(rng: np.random.Generator) -> list[Check]:
    t0 = time.perf_counter()
    n = 100_000
    C = random_unit(rng, n)
    # planes uniform on the Grassmannian, given by an orthonormal pair, then
    # re-expressed in random bases of bounded condition number
    normal = random_unit(rng, n)
    e1 = normalize(cross(normal, rng.normal(size=(n, 3))))
    e2 = cross(normal, e1)
    A = rng.normal(size=(n, 2, 2))
    M = rng.normal(size=(n, 2, 2))
    for T in (A, M):
        bad = np.linalg.cond(T) > 10
        T[bad] = np.eye(2)
    u = A[:, 0, 0, None] * e1 + A[:, 0, 1, None] * e2
    v = A[:, 1, 0, None] * e1 + A[:, 1, 1, None] * e2
    k = ambient_curvature_batch(u, v, C)
    u2 = M[:, 0, 0, None] * u + M[:, 0, 1, None] * v
    v2 = M[:, 1, 0, None] * u + M[:, 1, 1, None] * v
    k2 = ambient_curvature_batch(u2, v2, C)
    n_hat = normalize(cross(u, v))
    oracle = 0.5 * (1 - np.sum(n_hat * C, axis=-1) ** 2)
    elapsed = time.perf_counter() - t0

    bounds_tol = 1e-14
    in_bounds = bool(np.all((k >= -bounds_tol) & (k <= 0.5 + bounds_tol)))
    basis_var = _f(np.max(np.abs(k - k2)))
    oracle_err = _f(np.max(np.abs(k - oracle)))

    # extremes: plane containing C -> 1/2, plane orthogonal to C -> 0
    Cs = random_unit(rng, 100)
    perp = normalize(cross(Cs, rng.normal(size=(100, 3))))
    other = cross(Cs, perp)
    k_par = ambient_curvature_batch(Cs, perp, Cs)
    k_perp = ambient_curvature_batch(perp, other, Cs)
    ext_err = _f(max(np.max(np.abs(k_par - 0.5)), np.max(np.abs(k_perp))))
    return [
        Check("ambient curvature within [0, 1/2]", "prop2.1", in_bounds,
              {"min": _f(k.min()), "max": _f(k.max()), "n": n}, {"slack": bounds_tol}),
        Check("ambient curvature basis independence", "prop2.1", basis_var < 1e-12,
              {"max_variation": basis_var, "max_oracle_error": oracle_err},
              {"variation": 1e-12}),
        Check("ambient curvature extremes at parallel/perpendicular planes", "prop2.1",
              ext_err <= 1e-15, {"max_error": ext_err}, {"abs": 1e-15}),
        Check("ambient suite runtime", "prop2.1", elapsed < 1.0, {}, {"seconds": 1.0},
              runtime=elapsed),
    ]


def suite_scalar(rng: np.random.Generator) -> list[Check]:
    n = 10_000
    Q, R = np.linalg.qr(rng.normal(size=(n, 3, 3)))
    C = random_unit(rng, n)
    rho = sum(ambient_curvature_batch(Q[:, :, i], Q[:, :, j], C)
              for i, j in ((0, 1), (0, 2), (1, 2)))
    err = _f(np.max(np.abs(rho - 1)))
    return [Check("scalar curvature of random orthonormal frames", "rem2.2", err <= 1e-12,
                  {"max_abs_error": err, "n": n}, {"abs": 1e-12})]


def suite_cylinder_parallel(rng: np.random.Generator) -> list[Check]:
    err_closed, err_fd = 0.0, 0.0
    n_points = 0
    for _ in range(10):
        C = random_unit(rng)
        conn = CanonicalConnection(C)
        spec = CylinderSpec(random_spiral(rng), w=C, e_x=random_frame_orthogonal_to(rng, C))
        s = rng.uniform(-0.95, 0.95, 100)
        t = rng.uniform(-0.9, 0.9, 100)
        err_closed = max(err_closed, _f(np.max(np.abs(cylinder_K(spec, conn, s) - 0.5))))
        rep = sectional_curvature(spec.patch().without_jet(), s, t, conn, method="fd")
        err_fd = max(err_fd, _f(np.max(np.abs(rep.K - 0.5))))
        n_points += len(s)
    return [
        Check("rulings parallel to C, closed form", "cor3.2", err_closed <= 1e-10,
              {"max_abs_error": err_closed, "n": n_points}, {"abs": 1e-10}),
        Check("rulings parallel to C, finite-difference pipeline", "cor3.2", err_fd <= 1e-6,
              {"max_abs_error": err_fd, "n": n_points}, {"abs": 1e-6}),
    ]


def _d1(f: Callable, s: np.ndarray, h: float) -> np.ndarray:
    """Sixth-order central first derivative."""
    c = [(1, 3 / 4), (2, -3 / 20), (3, 1 / 60)]
    return sum(w * (f(s + k * h) - f(s - k * h)) for k, w in c) / h


def _d2(f: Callable, s: np.ndarray, h: float) -> np.ndarray:
    """Sixth-order central second derivative."""
    c = [(1, 3 / 2), (2, -3 / 20), (3, 1 / 90)]
    return (-49 / 18 * f(s) + sum(w * (f(s + k * h) + f(s - k * h)) for k, w in c)) / h ** 2


GENERATING_KS = (1.0, 0.5, 0.0, -0.5, -1.0)


def generating_curve_samples(K: float, n: int = 41) -> np.ndarray:
    """Interior sample parameters covering 90% of the (possibly truncated) domain."""
    prof = solve_generating_curve(K)
    lo, hi = prof.domain
    anchor = 1.0 if K == 0 else 0.0
    lo = lo if np.isfinite(lo) else anchor - 3.0
    hi = hi if np.isfinite(hi) else anchor + 3.0
    mid, half = 0.5 * (lo + hi), 0.45 * (hi - lo)
    return np.linspace(mid - half, mid + half, n)


def generating_curve_residuals(K: float, n: int = 41) -> dict:
    """ODE and arc-length residuals of the reconstructed curve, from finite differences."""
    prof = solve_generating_curve(K)
    s = generating_curve_samples(K, n)

    def x(u):
        return prof(u)[0]

    def z(u):
        return prof(u)[1]

    width = s[-1] - s[0]
    h1, h2 = min(2e-3, 1e-3 * width), min(2e-2, 1e-2 * width)
    xp = _d1(x, s, h1)
    zp = _d1(z, s, h1)
    zpp = _d2(z, s, h2)
    return {"ode": _f(np.max(np.abs(zpp - zp ** 2 + 2 * K))),
            "arc_length": _f(np.max(np.abs(xp ** 2 + zp ** 2 - 1)))}


def suite_generating_curves(rng: np.random.Generator) -> list[Check]:
    checks = []
    conn = CanonicalConnection(np.array([0.0, 0.0, 1.0]))
    for K in GENERATING_KS:
        res = generating_curve_residuals(K)
        checks.append(Check(f"generating curve K={K:g} residuals", "cor3.3",
                            max(res.values()) <= 1e-8, res, {"abs": 1e-8}))
        prof = solve_generating_curve(K)
        spec = CylinderSpec(prof)
        s = generating_curve_samples(K, 21)
        t = np.linspace(-0.5, 0.5, 21)
        S, T = np.meshgrid(s, t, indexing="ij")
        rep = sectional_curvature(spec.patch().without_jet(), S, T, conn, method="fd")
        err = _f(np.max(np.abs(rep.K - K)))
        checks.append(Check(f"cylinder over K={K:g} curve reproduces K", "cor3.4",
                            err <= 1e-6, {"max_abs_error": err}, {"abs": 1e-6}))
    s = np.linspace(-3, 3, 61)
    x_q, z_q = solve_generating_curve(0.5)(s)
    x_c, z_c = closed_form_curve_K_half(s)
    err = _f(max(np.max(np.abs(x_q - x_c)), np.max(np.abs(z_q - z_c))))
    checks.append(Check("grim reaper equals the K=1/2 quadrature curve", "cor3.4",
                        err <= 1e-8, {"max_abs_error": err}, {"abs": 1e-8}))
    s = np.linspace(0.0, 0.95 * np.pi / 4, 40)
    x_q, z_q = solve_generating_curve(-0.5)(s)
    x_c, z_c = closed_form_curve_K_minus_half(s)
    err = _f(max(np.max(np.abs(x_q - x_c)), np.max(np.abs(z_q - z_c))))
    checks.append(Check("K=-1/2 closed form equals quadrature curve for s >= 0", "cor3.4",
                        err <= 1e-8, {"max_abs_error": err}, {"abs": 1e-8}))
    return checks


def suite_axis_alignment(rng: np.random.Generator) -> list[Check]:
    t = equispaced_angles(64)
    min_var, max_var_aligned, max_fit, max_shift = np.inf, 0.0, 0.0, 0.0
    for _ in range(100):
        prof = random_spiral(rng)
        surf = RotationalSurface(prof)
        C = _c_with_ab(rng)
        conn = CanonicalConnection(C)
        s = np.linspace(-0.9, 0.9, 7)
        S, T = np.meshgrid(s, t, indexing="ij")
        K = rotational_K_general(surf, conn, S, T)
        min_var = min(min_var, _f(np.max(np.ptp(K, axis=1))))
        for si in s[::3]:
            max_fit = max(max_fit, fourier_coefficients(surf, conn, si).mismatch)
        c_sign = 1.0 if C[2] >= 0 else -1.0
        aligned = CanonicalConnection(np.array([0.0, 0.0, c_sign]))
        Ka = rotational_K_general(surf, aligned, S, T)
        max_var_aligned = max(max_var_aligned, _f(np.max(np.ptp(Ka, axis=1))))
        Ks = rotational_K_general(surf, aligned, S, T + 0.37)
        max_shift = max(max_shift, _f(np.max(np.abs(Ks - Ka))))
    return [
        Check("t-variation of K for (a,b) != 0", "thm4.1", min_var > 1e-4,
              {"min_over_profiles_of_max_variation": min_var}, {"greater_than": 1e-4}),
        Check("t-variation of K for a=b=0", "thm4.1", max_var_aligned < 1e-10,
              {"max_variation": max_var_aligned}, {"less_than": 1e-10}),
        Check("rotation invariance for a=b=0", "thm4.1", max_shift < 1e-12,
              {"max_variation": max_shift}, {"less_than": 1e-12}),
        Check("fitted Fourier coefficients match closed form", "thm4.1", max_fit <= 1e-8,
              {"max_abs_error": max_fit}, {"abs": 1e-8}),
    ]


def suite_equivalence(rng: np.random.Generator) -> list[Check]:
    """Closed forms against the generic pipeline over a mixed corpus."""
    err_fd, err_an = 0.0, 0.0
    # rotational corpus: random spirals plus sphere, catenoid and torus
    profiles = [random_spiral(rng) for _ in range(20)]
    profiles += [sphere_profile(1.0).restricted(0.2, np.pi - 0.2), catenoid_profile(1.0),
                 circle_profile(2.0, 0.0, 0.5)]
    for prof in profiles:
        surf = RotationalSurface(prof)
        conn = CanonicalConnection(random_unit(rng))
        lo, hi = prof.domain
        s = rng.uniform(lo + 0.05 * (hi - lo), hi - 0.05 * (hi - lo), 25)
        t = rng.uniform(0.1, 2 * np.pi - 0.1, 25)
        closed = rotational_K_general(surf, conn, s, t)
        patch = surf.patch()
        err_an = max(err_an, _f(np.max(np.abs(
            sectional_curvature(patch, s, t, conn, method="analytic").K - closed))))
        err_fd = max(err_fd, _f(np.max(np.abs(
            sectional_curvature(patch.without_jet(), s, t, conn, method="fd").K - closed))))
        for sign in (1, -1):
            axis_conn = CanonicalConnection(np.array([0.0, 0.0, float(sign)]))
            kgf = rotational_K_axis_aligned(surf, s, sign)
            err_an = max(err_an, _f(np.max(np.abs(
                sectional_curvature(patch, s, t, axis_conn, method="analytic").K - kgf))))
    # cylindrical corpus: random spirals, random ruling and C
    for _ in range(20):
        w = random_unit(rng)
        spec = CylinderSpec(random_spiral(rng), w=w, e_x=random_frame_orthogonal_to(rng, w))
        conn = CanonicalConnection(random_unit(rng))
        s = rng.uniform(-0.95, 0.95, 25)
        t = rng.uniform(-0.9, 0.9, 25)
        closed = cylinder_K(spec, conn, s)
        patch = spec.patch()
        err_an = max(err_an, _f(np.max(np.abs(
            sectional_curvature(patch, s, t, conn, method="analytic").K - closed))))
        err_fd = max(err_fd, _f(np.max(np.abs(
            sectional_curvature(patch.without_jet(), s, t, conn, method="fd").K - closed))))
    return [
        Check("closed forms vs finite-difference pipeline", "equivalence", err_fd <= 1e-6,
              {"max_abs_error": err_fd}, {"abs": 1e-6}),
        Check("closed forms vs analytic-jet pipeline", "equivalence", err_an <= 1e-9,
              {"max_abs_error": err_an}, {"abs": 1e-9}),
    ]


def suite_singular_sets(rng: np.random.Generator) -> list[Check]:
    checks = []
    cyl = profile_ode_shoot(0.5, 1.3, 0.0, np.pi / 2, 10.0)
    s = np.linspace(0, 10, 201)
    dev = _f(np.max(np.abs(cyl.profile(s)[0] - 1.3)))
    checks.append(Check("vertical start stays on the cylinder", "prop4.2", dev <= 1e-8,
                        {"max_deviation": dev, "stop": cyl.stop}, {"abs": 1e-8}))
    line = profile_ode_shoot(0.0, 1.0, 0.7, 0.0, 5.0)
    dev = _f(np.max(np.abs(line.profile(np.linspace(0, line.s_end, 101))[1] - 0.7)))
    checks.append(Check("horizontal start stays on the line", "prop4.2", dev <= 1e-10,
                        {"max_deviation": dev}, {"abs": 1e-10}))
    gen = profile_ode_shoot(0.5, 1.0, 0.0, np.pi / 4, 5.0)
    s = np.linspace(0, gen.s_end, 400)[:-1]
    dev = _f(np.max(np.abs(rotational_K_axis_aligned(gen.profile, s) - 0.5)))
    checks.append(Check("generic K=1/2 trajectory keeps K", "prop4.2", dev <= 1e-6,
                        {"max_deviation": dev, "stop": gen.stop}, {"abs": 1e-6}))
    longest = 0.0
    for _ in range(20):
        K = rng.uniform(-1, 1)
        x0 = rng.uniform(0.5, 2.0)
        phi0 = rng.uniform(-np.pi, np.pi)
        if abs(2 * np.sin(phi0) - x0 * np.cos(phi0)) < 1e-3:
            continue
        res = profile_ode_shoot(K, x0, 0.0, phi0, 5.0)
        if res.s_end <= 0:
            continue
        s = np.linspace(0, res.s_end, 2001)
        j = res.profile.jet(s)
        for g in (2 * j.dz - j.x * j.dx, j.x * j.dz - j.dx):
            small = np.abs(g) < 1e-9
            longest = max(longest, _run_length(small) * (s[1] - s[0]))
    checks.append(Check("singular sets are isolated along trajectories", "prop4.2",
                        longest <= 0.1, {"longest_small_run": longest}, {"max_length": 0.1}))
    return checks


def _run_length(mask: np.ndarray) -> int:
    best = cur = 0
    for m in mask:
        cur = cur + 1 if m else 0
        best = max(best, cur)
    return best


def suite_conical(rng: np.random.Generator) -> list[Check]:
    vert = conical_scan(np.pi / 2, 2.0)
    horiz = conical_scan(0.0, 1.0, 5.0)
    ok_special = (vert.constant and abs(vert.value - 0.5) <= 1e-12
                  and horiz.constant and abs(horiz.value) <= 1e-12)
    min_var = np.inf
    rejected = 0
    for _ in range(50):
        while True:
            theta = rng.uniform(-np.pi, np.pi)
            if min(abs(np.cos(theta)), abs(np.sin(theta))) >= 0.05:
                break
        scan = conical_scan(theta, rng.uniform(2.5, 4.0), rng.uniform(-1, 1))
        min_var = min(min_var, scan.variation)
        rejected += (not scan.constant) and scan.variation > 1e-6
    return [
        Check("vertical and horizontal lines give constant K", "thm4.3", bool(ok_special),
              {"vertical_K": vert.value, "horizontal_K": horiz.value}, {"abs": 1e-12}),
        Check("oblique lines rejected", "thm4.3", rejected == 50,
              {"rejected": int(rejected), "min_variation": _f(min_var)},
              {"variation_greater_than": 1e-6}),
    ]


def suite_circle(rng: np.random.Generator) -> list[Check]:
    radii = (0.5, 1.0, 2.0)
    K = float(rng.uniform(-1, 1))
    A3 = {r: circle_residual(r, r + 1.5, K).A3 for r in radii}
    ratios = np.array([A3[r] / r for r in radii])
    nonzero = all(abs(A3[r]) >= r / 8 for r in radii)
    spread = _f(np.ptp(ratios))
    oracle_err = _f(np.max(np.abs(ratios - ORACLE_A3_RATIO)))
    return [
        Check("A3 nonzero for every radius", "thm4.4", nonzero,
              {f"A3_r={r:g}": _f(A3[r]) for r in radii}, {"min_abs_ratio": 0.125}),
        Check("A3/r constant across radii", "thm4.4", spread <= 1e-9,
              {"spread": spread}, {"abs": 1e-9}),
        Check("A3/r equals the expansion oracle", "thm4.4", oracle_err <= 1e-9,
              {"measured_ratio": _f(ratios.mean()), "oracle_ratio": ORACLE_A3_RATIO,
               "literature_ratio": LITERATURE_A3_RATIO}, {"abs": 1e-9}),
    ]


def suite_axis_orthogonal(rng: np.random.Generator) -> list[Check]:
    t0 = time.perf_counter()
    checks = []
    r0 = quadratic_zprime(0.0)
    checks.append(Check("quadratic roots at x=0", "thm4.5", r0 == (0.0,),
                        {"roots": list(r0)}, {"exact": True}))
    r2 = quadratic_zprime(2.0)
    ok2 = len(r2) == 1 and abs(r2[0] + 1) <= 1e-12
    checks.append(Check("quadratic roots at x=2", "thm4.5", ok2, {"roots": list(r2)},
                        {"abs": 1e-12}))
    k_err_f, k_err_ode, drift_f, drift_int, ratio_err = 0.0, 0.0, 0.0, 0.0, 0.0
    for branch in ("plus", "minus"):
        x_max = BRANCH_LIMIT[branch] - 0.05
        prof = axis_orthogonal_profile(branch, x_max)
        ratio_err = max(ratio_err, _f(abs(prof.slope(np.asarray(1e-3)) / 1e-3
                                          - ALPHA[branch])))
        x = np.linspace(0.1, x_max, 40)
        drift_f = max(drift_f, _f(np.max(np.abs(prof.first_integral_drift(x)))))
        k_err_f = max(k_err_f, _f(np.max(np.abs(prof.k_defect(x)))))
        sol = integrate_axis_graph(branch, x_max, "first_integral")
        xs = np.linspace(1e-3, x_max, 400)
        drift_int = max(drift_int, _f(np.max(np.abs(first_integral(xs, sol(xs)[1])))))
        ode_x = min(x_max, 1.0)
        ode = axis_orthogonal_profile(branch, ode_x, method="ode")
        k_err_ode = max(k_err_ode, _f(np.max(np.abs(ode.k_defect(
            np.linspace(0.1, ode_x, 40))))))
    elapsed = time.perf_counter() - t0
    checks += [
        Check("slope ratio at the axis", "thm4.5", ratio_err <= 1e-6,
              {"max_abs_error": ratio_err, "x": 1e-3}, {"abs": 1e-6}),
        Check("first integral conserved along integrated branches", "thm4.5",
              max(drift_f, drift_int) <= 1e-8,
              {"root_branch_drift": drift_f, "graph_ode_drift": drift_int}, {"abs": 1e-8}),
        Check("first-integral profiles have K=1/2", "thm4.5", k_err_f <= 1e-5,
              {"max_abs_K_defect": k_err_f}, {"abs": 1e-5}),
        Check("K=1/2 graph-equation profiles have K=1/2", "thm4.5", k_err_ode <= 1e-5,
              {"max_abs_K_defect": k_err_ode}, {"abs": 1e-5}),
        Check("axis-orthogonal suite runtime", "thm4.5", elapsed < 5.0, {},
              {"seconds": 5.0}, runtime=elapsed),
    ]
    return checks


def suite_graph(rng: np.random.Generator) -> list[Check]:
    checks = []
    conn = CanonicalConnection(np.array([0.0, 0.0, 1.0]))
    for c in (1.0, 2.0, -1.0):
        g = family_graph(c)
        (x0, x1), (y0, y1) = g.x_range, g.y_range
        X, Y = np.meshgrid(np.linspace(0.95 * x0, 0.95 * x1, 50),
                           np.linspace(0.95 * y0, 0.95 * y1, 50), indexing="ij")
        res = _f(np.max(np.abs(pde_residual(g, X, Y))))
        rep = sectional_curvature(g.patch().without_jet(), X, Y, conn, method="fd")
        kk = _f(np.max(np.abs(rep.K - rep.K_tilde)))
        checks.append(Check(f"graph family c={c:g}", "ex2.5", res <= 1e-9 and kk <= 1e-6,
                            {"pde_residual": res, "K_minus_K_tilde": kk},
                            {"pde_residual": 1e-9, "K_minus_K_tilde": 1e-6}))
    rejected = []
    for c in (0.0, 0.5):
        try:
            family_graph(c)
        except GeometryError:
            rejected.append(c)
    checks.append(Check("c in {0, 1/2} rejected", "ex2.5", rejected == [0.0, 0.5],
                        {"rejected": rejected}, {}))
    return checks


SUITES: dict[str, Callable[[np.random.Generator], list[Check]]] = {
    "prop2.1": suite_ambient,
    "rem2.2": suite_scalar,
    "ex2.5": suite_graph,
    "cor3.2": suite_cylinder_parallel,
    "cor3.3": suite_generating_curves,
    "thm4.1": suite_axis_alignment,
    "prop4.2": suite_singular_sets,
    "thm4.3": suite_conical,
    "thm4.4": suite_circle,
    "thm4.5": suite_axis_orthogonal,
    "equivalence": suite_equivalence,
}


def suite_names() -> list[str]:
    return list(SUITES)


def run_suite(name: str, seed: int) -> list[Check]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {suite_names()}")
    index = suite_names().index(name)
    rng = np.random.default_rng([seed, index])
    t0 = time.perf_counter()
    checks = SUITES[name](rng)
    elapsed = time.perf_counter() - t0
    for c in checks:
        if c.runtime is None:
            c.runtime = elapsed
    return checks


def run_all(seed: int) -> list[Check]:
    return [c for name in SUITES for c in run_suite(name, seed)]
