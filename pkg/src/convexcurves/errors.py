"""Exception types raised across the package."""


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class DegenerateInput(GeometryError):
    """Point set has no two-dimensional hull."""


class InvalidShape(GeometryError):
    """Vertex list violates the convex-shape invariants."""


class DegenerateShape(GeometryError):
    """A construction that must succeed on a valid shape did not."""


class UnsupportedSpec(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    pass


class TooManyPoints(ValueError):
    """Brute-force path enumeration refused above its cap."""


class NotThin(ValueError):
    """Lens requested in the thin regime but its apex is too wide."""


class OrderViolation(ValueError):
    pass


class GridTooCoarse(RuntimeError):
    pass


class MissingAux(ValueError):
    """A curve-dependent check was called without its curve."""
