"""Exception hierarchy shared by every module in the package."""


class TwoBlochError(ValueError):
    """Base class for domain errors (bad operators, groups, frames, files)."""


class PauliParseError(TwoBlochError):
    pass


class NonHermitianPauli(TwoBlochError):
    pass


class AnticommutingGenerators(TwoBlochError):
    pass


class DependentGenerators(TwoBlochError):
    pass


class MinusIdentityInGroup(TwoBlochError):
    pass


class UnsupportedAngle(TwoBlochError):
    pass


class NotPure(TwoBlochError):
    pass


class NotStabilizerState(TwoBlochError):
    pass


class InvalidFrame(TwoBlochError):
    pass


class SchemaError(TwoBlochError):
    """Catalog file does not have the documented structure."""


class InvariantViolation(TwoBlochError):
    """Catalog file is well-formed but describes an impossible state."""


class CatalogIOError(OSError):
    pass
