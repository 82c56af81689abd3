"""Profiles meeting the rotation axis orthogonally with ``K = 1/2`` (``C = e_z``).

Near the axis the profile is written as a graph ``z = z(x)`` with slope
``p = z'(x)``, ``z(0) = z'(0) = 0``.  Two graph equations are provided:

* the equation whose first integral is

      F(x, p) = (2p - x) p / W - 2 (W - 1) - x^2 / 2,   W = sqrt(1 + p^2),

  i.e. ``p' = (x W + p) W^2 / (2p - x)``.  Squaring ``F = 0`` gives the
  quadratic ``(4x^2 - (x^2-4)^2) p^2 + 16 x p + 16 - (x^2-4)^2 = 0``;

* the graph form of the rotational ``K = 1/2`` equation,
  ``p' = (x + p) W^2 / (2p - x)``.

The two agree to second order at the axis (same slope ratios
``alpha = (1 +- sqrt 3) / 2``) but differ beyond it, so profiles built from
``F = 0`` carry a small ``K - 1/2`` defect that grows with ``x``.  Both
constructions are available through ``method=`` of
:func:`axis_orthogonal_profile`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.typing import ArrayLike
from scipy.integrate import quad, solve_ivp
from scipy.optimize import brentq

from .errors import DomainError, GeometryError
from .profiles import ProfileCurve, ProfileJet
from .rotational import rotational_K_axis_aligned

__all__ = [
    "ALPHA",
    "BRANCH_LIMIT",
    "first_integral",
    "quadratic_coefficients",
    "quadratic_zprime",
    "branch_slope",
    "branch_slope_derivative",
    "first_integral_rhs",
    "k_half_rhs",
    "GraphSolution",
    "integrate_axis_graph",
    "track_branch",
    "AxisOrthogonalProfile",
    "axis_orthogonal_profile",
]

SQRT3 = np.sqrt(3.0)
#: slope ratio z'(x)/x at the axis for each branch
ALPHA = {"plus": (1 + SQRT3) / 2, "minus": (1 - SQRT3) / 2}
#: supremum of x along each first-integral branch; both slopes blow up (vertical
#: tangent) where the leading coefficient 4x^2 - (x^2-4)^2 vanishes
BRANCH_LIMIT = {"plus": np.sqrt(5.0) - 1.0, "minus": np.sqrt(5.0) + 1.0}

_F_TOL = 1e-9


def _check_branch(branch: str) -> str:
    if branch not in ALPHA:
        raise ValueError(f"branch must be one of {sorted(ALPHA)}, got {branch!r}")
    return branch


def first_integral(x: ArrayLike, zp: ArrayLike) -> np.ndarray:
    """``F(x, z')``; zero along axis-orthogonal solutions."""
    x = np.asarray(x, float)
    zp = np.asarray(zp, float)
    W = np.sqrt(1 + zp * zp)
    return (2 * zp - x) * zp / W - 2 * (W - 1) - x * x / 2


def quadratic_coefficients(x: float) -> tuple[float, float, float]:
    D = (x * x - 4) ** 2
    return 4 * x * x - D, 16 * x, 16 - D


def quadratic_zprime(x: float) -> tuple[float, ...]:
    """Real roots of the squared first integral that also satisfy ``|F| < 1e-9``.

    Sorted ascending; a double root is returned once.
    """
    x = float(x)
    a, b, c = quadratic_coefficients(x)
    D = (x * x - 4) ** 2
    # (b^2 - 4ac) / 4 factored to avoid cancellation
    quarter_disc = D * (4 * x * x + 16 - D)
    scale = max(1.0, abs(a), abs(b), abs(c))
    if abs(a) <= 1e-14 * scale:
        if abs(b) <= 1e-14 * scale:
            if abs(c) > 1e-14 * scale:
                raise GeometryError(f"quadratic in z' has no root at x={x!r}")
            return ()
        roots = [-c / b]
    else:
        if quarter_disc < -1e-12 * scale ** 2:
            return ()
        sq = 2.0 * np.sqrt(max(quarter_disc, 0.0))
        q = -0.5 * (b + (sq if b >= 0 else -sq))
        r1 = q / a
        r2 = c / q if q != 0 else r1
        roots = [r1, r2]
    admitted = []
    for r in sorted(roots):
        tol = max(_F_TOL, 1e-14 * (1 + r * r))
        if abs(float(first_integral(x, r))) < tol:
            if not admitted or abs(r - admitted[-1]) > 1e-12 * max(1.0, abs(r)):
                admitted.append(float(r))
    return tuple(admitted)


def branch_slope(x: ArrayLike, branch: str) -> np.ndarray:
    """Slope ``z'(x)`` of the named first-integral branch (closed form).

    NaN outside ``[0, BRANCH_LIMIT[branch])``.  Uses the analytic square root ``2 (4 - x^2) sqrt(4x^2 + 16 - (x^2-4)^2)`` of the
    discriminant so each branch stays smooth through the double root at ``x = 2``.
    """
    _check_branch(branch)
    x = np.asarray(x, float)
    D = (x * x - 4) ** 2
    a, b, c = 4 * x * x - D, 16 * x, 16 - D
    sq = 2 * (4 - x * x) * np.sqrt(np.maximum(4 * x * x + 16 - D, 0.0))
    sgn = -1.0 if branch == "plus" else 1.0
    # p = (-b + sgn sq) / (2a) = 2c / (-b - sgn sq); use the larger denominator
    den1 = 2 * a
    den2 = -b - sgn * sq
    with np.errstate(divide="ignore", invalid="ignore"):
        p1 = (-b + sgn * sq) / den1
        p2 = 2 * c / den2
    p = np.where(np.abs(den1) >= np.abs(den2), p1, p2)
    p = np.where((x < 0) | (x >= BRANCH_LIMIT[branch]), np.nan, p)
    return np.where(x == 0, 0.0, p)


def branch_slope_derivative(x: ArrayLike, p: ArrayLike, branch: str) -> np.ndarray:
    """``z''(x)`` by implicit differentiation of ``x p + 2 = W (4 - x^2) / 2``."""
    x = np.asarray(x, float)
    p = np.asarray(p, float)
    W = np.sqrt(1 + p * p)
    gx = p + x * W
    gp = x - p * (4 - x * x) / (2 * W)
    with np.errstate(divide="ignore", invalid="ignore"):
        d = -gx / gp
    return np.where(x == 0, ALPHA[_check_branch(branch)], d)


def first_integral_rhs(x: float, p: float) -> float:
    """``z''`` of the graph equation that conserves :func:`first_integral`."""
    W = np.sqrt(1 + p * p)
    return (x * W + p) * W * W / (2 * p - x)


def k_half_rhs(x: float, p: float) -> float:
    """``z''`` of the graph equation equivalent to rotational ``K = 1/2``."""
    return (x + p) * (1 + p * p) / (2 * p - x)


# cubic coefficient of the axis series p = alpha x + gamma x^3 for each equation
def _gamma(equation: str, alpha: float) -> float:
    if equation == "first_integral":
        return (alpha ** 4 + alpha ** 2) / (4 * (2 * alpha - 1))
    return alpha ** 2 * (1 + alpha) / (8 * alpha - 5)


_RHS = {"first_integral": first_integral_rhs, "k_half": k_half_rhs}


@dataclass(frozen=True)
class GraphSolution:
    """Dense solution ``x -> (z, p, s)`` of a graph equation started on the axis."""

    branch: str
    equation: str
    x_start: float
    x_end: float
    alpha: float
    gamma: float
    dense: Callable

    def __call__(self, x: ArrayLike) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        x = np.asarray(x, float)
        flat = np.ravel(x)
        z, p, s = self.dense(np.clip(flat, self.x_start, self.x_end))
        near = flat < self.x_start
        if np.any(near):
            xs = flat[near]
            a, g = self.alpha, self.gamma
            z[near] = a * xs ** 2 / 2 + g * xs ** 4 / 4
            p[near] = a * xs + g * xs ** 3
            s[near] = xs + a * a * xs ** 3 / 6
        return z.reshape(x.shape), p.reshape(x.shape), s.reshape(x.shape)

    def slope_derivative(self, x: ArrayLike) -> np.ndarray:
        x = np.asarray(x, float)
        _, p, _ = self(x)
        rhs = np.vectorize(_RHS[self.equation])
        with np.errstate(divide="ignore", invalid="ignore"):
            out = rhs(x, p)
        return np.where(x < self.x_start, self.alpha + 3 * self.gamma * x ** 2, out)


def integrate_axis_graph(branch: str, x_max: float, equation: str = "k_half",
                         x_start: float = 1e-3, rtol: float = 1e-12,
                         atol: float = 1e-14, slope_limit: float = 1e3) -> GraphSolution:
    """Integrate a graph equation from the axis along the named branch.

    The singular start is bridged with the series ``p = alpha x + gamma x^3``
    up to ``x_start``.  Raises if the slope exceeds ``slope_limit`` (vertical
    tangent) or the denominator ``2p - x`` vanishes before ``x_max``.
    """
    _check_branch(branch)
    if equation not in _RHS:
        raise ValueError(f"equation must be one of {sorted(_RHS)}")
    a = ALPHA[branch]
    g = _gamma(equation, a)
    rhs = _RHS[equation]
    x0 = min(x_start, 0.5 * x_max)
    p0 = a * x0 + g * x0 ** 3
    y0 = [a * x0 ** 2 / 2 + g * x0 ** 4 / 4, p0, x0 + a * a * x0 ** 3 / 6]

    def f(x, y):
        p = y[1]
        return [p, rhs(x, p), np.sqrt(1 + p * p)]

    def steep(_x, y):
        return slope_limit - abs(y[1])
    steep.terminal = True

    def singular(x, y):
        return abs(2 * y[1] - x) - 1e-9
    singular.terminal = True

    sol = solve_ivp(f, (x0, float(x_max)), y0, method="DOP853", rtol=rtol, atol=atol,
                    dense_output=True, events=[steep, singular])
    if sol.status != 0:
        raise GeometryError(f"{branch} branch of the {equation} equation stops at "
                            f"x={sol.t[-1]:.6g} before x_max={x_max!r}")
    return GraphSolution(branch, equation, x0, float(x_max), a, g, sol.sol)


def track_branch(branch: str, x_max: float, dx: float = 1e-3) -> np.ndarray:
    """Follow the admitted roots of :func:`quadratic_zprime` from the axis to ``x_max``.

    At each grid point the admitted root nearest to the linear prediction from
    the two previous points is chosen; the step is halved (down to ``dx/64``)
    where roots crowd together, e.g. near double roots.  Raises
    :class:`DomainError` when the branch loses realness, leaves the admitted set
    or jumps before ``x_max``.  Returns the ``(m, 2)`` array of ``(x, z')`` samples.
    """
    _check_branch(branch)
    if x_max >= BRANCH_LIMIT[branch]:
        raise DomainError(f"x_max={x_max!r} beyond the {branch} branch limit "
                          f"{BRANCH_LIMIT[branch]:.6g}")
    a = ALPHA[branch]
    xs = [0.0, dx]
    ps = [0.0, None]
    roots = quadratic_zprime(dx)
    if not roots:
        raise DomainError("no admitted root next to the axis")
    ps[1] = min(roots, key=lambda r: abs(r - a * dx))
    x = dx
    h = dx
    while x < x_max - 1e-15:
        h_try = min(h, x_max - x)
        while True:
            xn = x + h_try
            pred = ps[-1] + (ps[-1] - ps[-2]) * h_try / (xs[-1] - xs[-2])
            roots = quadratic_zprime(xn)
            if not roots:
                raise DomainError(f"{branch} branch loses realness at x={xn:.6g}")
            best = min(roots, key=lambda r: abs(r - pred))
            err = abs(best - pred)
            gap = min((abs(r - best) for r in roots if r != best), default=np.inf)
            ok = err <= 0.25 * max(gap, 1e-12) or gap == np.inf
            if ok and err <= 0.1 * max(1.0, abs(pred)):
                break
            if h_try <= dx / 64:
                if err > 0.1 * max(1.0, abs(pred)):
                    raise DomainError(f"{branch} branch is discontinuous near x={xn:.6g}")
                break
            h_try /= 2
        xs.append(xn)
        ps.append(best)
        x = xn
        h = dx
    return np.column_stack([xs, ps])


@dataclass(frozen=True)
class AxisOrthogonalProfile:
    """Axis-orthogonal ``K = 1/2`` candidate profile in graph and arc-length form."""

    branch: str
    method: str
    x_max: float
    s_max: float
    slope: Callable[[np.ndarray], np.ndarray]
    slope_derivative: Callable[[np.ndarray], np.ndarray]
    height: Callable[[np.ndarray], np.ndarray]
    arclength: Callable[[np.ndarray], np.ndarray]

    def x_of_s(self, s: ArrayLike) -> np.ndarray:
        s = np.asarray(s, float)
        out = np.empty(s.shape)
        for idx, si in np.ndenumerate(s):
            if si <= 0:
                out[idx] = 0.0
            elif si >= self.s_max:
                out[idx] = self.x_max
            else:
                out[idx] = brentq(lambda u: float(self.arclength(u)) - si, 0.0,
                                  self.x_max, xtol=1e-15, rtol=4 * np.finfo(float).eps)
        return out

    def graph_jet(self, x: ArrayLike) -> ProfileJet:
        """Arc-length jet at the points with abscissa ``x``."""
        x = np.asarray(x, float)
        p = self.slope(x)
        pp = self.slope_derivative(x)
        W = np.sqrt(1 + p * p)
        xp, zp = 1 / W, p / W
        k = pp / W ** 3
        return ProfileJet(x=x, z=self.height(x), dx=xp, dz=zp, ddx=-zp * k, ddz=xp * k)

    def profile(self) -> ProfileCurve:
        def jet_fn(s):
            return self.graph_jet(self.x_of_s(s))

        return ProfileCurve(jet_fn, (0.0, self.s_max),
                            f"axis_orthogonal[{self.branch},{self.method}]")

    def k_defect(self, x: ArrayLike) -> np.ndarray:
        """``K - 1/2`` from the rotational closed form at abscissae ``x`` (off the axis)."""
        x = np.asarray(x, float)
        curve = ProfileCurve(lambda u: self.graph_jet(u), (0.0, self.x_max))
        return rotational_K_axis_aligned(curve, x) - 0.5

    def first_integral_drift(self, x: ArrayLike) -> np.ndarray:
        return first_integral(x, self.slope(np.asarray(x, float)))


def axis_orthogonal_profile(branch: str, x_max: float,
                            method: str = "first_integral") -> AxisOrthogonalProfile:
    """Profile through the axis with ``z'(0) = 0`` on the chosen branch.

    ``method="first_integral"`` takes ``z'`` from the admitted roots of the
    squared first integral (branch validated by :func:`track_branch`) and
    integrates ``z`` and arc length by quadrature.  ``method="ode"`` integrates
    the ``K = 1/2`` graph equation instead.
    """
    _check_branch(branch)
    if x_max <= 0:
        raise DomainError("x_max must be positive")
    if method == "first_integral":
        track = track_branch(branch, x_max)
        closed = branch_slope(track[:, 0], branch)
        if np.max(np.abs(closed - track[:, 1])) > 1e-8 * max(1.0, np.max(np.abs(closed))):
            raise GeometryError("tracked roots disagree with the branch closed form")

        def slope(x):
            return branch_slope(x, branch)

        def slope_derivative(x):
            x = np.asarray(x, float)
            return branch_slope_derivative(x, slope(x), branch)

        def _integral(f):
            def g(x):
                x = np.asarray(x, float)
                out = np.empty(x.shape)
                for idx, xi in np.ndenumerate(x):
                    out[idx] = quad(lambda u: float(f(u)), 0.0, xi, epsabs=1e-13,
                                    epsrel=1e-13, limit=200)[0] if xi > 0 else 0.0
                return out
            return g

        height = _integral(slope)
        arclength = _integral(lambda u: np.sqrt(1 + slope(u) ** 2))
    elif method == "ode":
        sol = integrate_axis_graph(branch, x_max, "k_half")

        def slope(x):
            return sol(x)[1]

        slope_derivative = sol.slope_derivative

        def height(x):
            return sol(x)[0]

        def arclength(x):
            return sol(x)[2]
    else:
        raise ValueError("method must be 'first_integral' or 'ode'")
    s_max = float(arclength(np.asarray(float(x_max))))
    return AxisOrthogonalProfile(branch, method, float(x_max), s_max, slope,
                                 slope_derivative, height, arclength)
