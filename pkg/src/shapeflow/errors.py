"""Exception types raised across the package."""


class ShapeflowError(ValueError):
    """Base class for all errors raised by shapeflow."""


class DegenerateInput(ShapeflowError):
    """Point set whose convex hull has fewer than three vertices."""


class NotOriginSymmetric(ShapeflowError):
    pass


class InvalidParameter(ShapeflowError):
    pass


class DomainError(ShapeflowError):
    pass


class NotATriangle(ShapeflowError):
    pass


class NotInCanonicalFamily(ShapeflowError):
    """Triangle has no side whose altitude is the requested multiple of it."""


class InternalInconsistency(RuntimeError):
    """Two independent computations that must agree did not."""


class InsufficientOrbit(ShapeflowError):
    pass


class UnrealizableMeshpoint(ShapeflowError):
    pass


class ParseError(ShapeflowError):
    """Malformed polygon or config file."""
