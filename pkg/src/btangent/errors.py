"""Exception types raised by the btangent package."""


class BTangentError(Exception):
    """Base class for all structured errors in this package."""


class NonClosedSurfaceError(BTangentError):
    """The triangle complex is not a closed surface (or has stray vertices)."""


class InvalidZError(BTangentError):
    """The marked edge set is not a disjoint union of embedded cycles."""


class InconsistentGluingError(BTangentError):
    """A sign gluing does not match the graph it claims to decorate."""


class NotOrientableError(BTangentError):
    """Operation requires an orientable ambient manifold."""


class NotColorableError(BTangentError):
    """Operation requires a two-colorable region graph."""


class ImproperColoringError(BTangentError):
    """A supplied coloring is not total or violates an edge constraint."""


class OddDimensionError(BTangentError):
    """Euler-number computation requires even ambient dimension."""


class UnsupportedDimensionError(BTangentError):
    """Requested dimension is outside the supported range."""


class ZeroOnContourError(BTangentError):
    """The vector field vanishes on the sampling contour."""


class NonConvergentError(BTangentError):
    """Contour refinement hit the sample cap without resolving the field."""


class ZeroOnCriticalSetError(BTangentError):
    """A listed zero lies on (or too close to) the critical hypersurface."""


class NonUnitInputError(BTangentError):
    """Input vector must lie on the unit sphere."""


class NonTangentInputError(BTangentError):
    """Input vector must be tangent to the sphere at the base point."""


class EvenDimensionError(BTangentError):
    """The null-homotopy construction only exists in odd dimensions."""


class OutOfRangeError(BTangentError):
    """A cylinder coordinate is outside [-1, 1]."""


class ManifoldFormatError(BTangentError):
    """A manifold JSON document violates the input schema.

    Attributes:
        pointer: JSON-pointer path of the offending element.
    """

    def __init__(self, message: str, pointer: str = "/"):
        super().__init__(f"{message} (at {pointer})")
        self.pointer = pointer
