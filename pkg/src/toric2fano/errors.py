"""Exception hierarchy shared by every module of the package."""


class ToricError(Exception):
    """Base class for all errors raised by toric2fano."""


class FanValidationError(ToricError, ValueError):
    """Raw fan data does not describe a smooth complete fan."""


class NonPrimitiveRay(FanValidationError):
    pass


class DuplicateRay(FanValidationError):
    pass


class NonUnimodularCone(FanValidationError):
    pass


class UnpairedWall(FanValidationError):
    pass


class CoverageFailure(FanValidationError):
    pass


class DimensionMismatch(FanValidationError):
    pass


class UnusedRay(FanValidationError):
    pass


class ConeNotInFan(ToricError, ValueError):
    pass


class DimensionTooSmall(ToricError, ValueError):
    pass


class NotAWall(ToricError, ValueError):
    pass


class DegreeMismatch(ToricError, ValueError):
    pass


class WrongDimension(ToricError, ValueError):
    pass


class UnsupportedSurface(ToricError):
    """The fast surface formulas only cover P^2 and Hirzebruch orbit closures."""


class MalformedInput(ToricError, ValueError):
    """Unparseable JSON input; ``lineno`` is 1-based when known."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno
