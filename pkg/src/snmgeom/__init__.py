"""Surface curvature for the canonical semi-symmetric non-metric connection on R^3."""

from .axis_orthogonal import axis_orthogonal_profile, first_integral, quadratic_zprime
from .connection import (CanonicalConnection, CurvatureReport, PlaneSection,
                         ambient_sectional_curvature, scalar_curvature, sectional_curvature)
from .cylindrical import CylinderSpec, cylinder_K, solve_generating_curve
from .errors import DegenerateError, DomainError, GeometryError
from .geom_core import ParametricPatch, SurfaceJet2, classical_curvatures, fundamental_forms, jet2
from .graph_pde import GraphSurface, pde_residual, solution_family
from .profiles import ProfileCurve
from .rotational import (RotationalSurface, circle_residual, conical_scan, fourier_coefficients,
                         profile_ode_shoot, rotational_K_axis_aligned, rotational_K_general)

__all__ = [
    "CanonicalConnection", "CurvatureReport", "CylinderSpec", "DegenerateError", "DomainError",
    "GeometryError", "GraphSurface", "ParametricPatch", "PlaneSection", "ProfileCurve",
    "RotationalSurface", "SurfaceJet2", "ambient_sectional_curvature", "axis_orthogonal_profile",
    "circle_residual", "classical_curvatures", "conical_scan", "cylinder_K", "first_integral",
    "fourier_coefficients", "fundamental_forms", "jet2", "pde_residual", "profile_ode_shoot",
    "quadratic_zprime", "rotational_K_axis_aligned", "rotational_K_general", "scalar_curvature",
    "sectional_curvature", "solution_family", "solve_generating_curve",
]
