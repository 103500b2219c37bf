"""Exception taxonomy shared across the library."""


class NonscatterError(Exception):
    """Base class for all library-specific failures."""


class AccuracyEnvelopeExceeded(NonscatterError):
    """Argument left the range where the special-function code holds its tolerance."""


class InvalidShapeParams(NonscatterError):
    """Builtin curve name unknown or its shape parameters are out of range."""


class NoSaddle(NonscatterError):
    """The phase has no critical point in the search window."""


class NoAdmissiblePath(NonscatterError):
    """No descent contour from -pi to pi through the saddle survives the margin test."""


class EndpointAboveLevel(NonscatterError):
    """Re g at the interval endpoints is not below Re g at the saddle."""


class MarginViolated(NonscatterError):
    """A contour sample rose above the required descent margin."""

    def __init__(self, message, t=None, excess=None):
        super().__init__(message)
        self.t = t
        self.excess = excess


class BranchUnresolvable(NonscatterError):
    """No square-root branch angle satisfies the contour's half-angle window."""


class NoRealSolution(NonscatterError):
    """The aspect-ratio quadratic has no real root greater than one."""


class DegenerateCircle(NonscatterError):
    """The aspect-ratio quadratic degenerates to the unit ratio (a circle)."""


class StarShapeViolated(NonscatterError):
    """Curve is not star-shaped about the origin; the radial area map would fold."""


class QuadratureNotConverged(NonscatterError):
    """Refinement hit its cap before the requested tolerance was met."""


class OverflowRisk(NonscatterError):
    """Un-normalized exponential would overflow; pass a normalization point."""


class InsufficientData(NonscatterError):
    """Not enough sweep records for a tail fit."""


class ConfigError(NonscatterError):
    """Scenario file missing, unreadable, or semantically invalid."""
