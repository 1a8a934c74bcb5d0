"""Exception types shared across the package."""


class ZonotileError(Exception):
    """Base class for all errors raised by this package."""


class FieldError(ZonotileError, ValueError):
    """Bad field descriptor, mixed-field operands, or unrepresentable input."""


class GeometryError(ZonotileError, ValueError):
    """A geometric precondition does not hold."""


class IncommensurableError(GeometryError):
    """Lattices share no full-rank superlattice; the operation is refused."""


class RationalityError(GeometryError):
    """A determinant ratio that must be rational is irrational."""


class ZonotopeError(GeometryError):
    """Invalid generator list for a zonotope."""


class SymmetryError(ZonotopeError):
    """Vertex list is not a centrally symmetric convex polygon."""


class BoundaryError(ZonotileError):
    """A query point lies on a translate boundary; the caller should resample."""


class WindowError(GeometryError):
    """A verification window is empty or too small for the polygon."""


class AccountingError(ZonotileError, ArithmeticError):
    """A multiplicity that must be a positive integer is not."""
