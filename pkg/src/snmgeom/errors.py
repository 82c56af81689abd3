"""Exception types raised by snmgeom."""


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class DegenerateError(GeometryError):
    """Raised when a metric, basis or frame is (numerically) degenerate."""


class DomainError(GeometryError):
    """Raised when a parameter lies outside the admissible domain."""
