"""Exception types shared across cdprkit modules."""


class CdprKitError(Exception):
    """Base class for all cdprkit errors."""


class SchemaError(CdprKitError):
    """A config or dataset file does not match its documented schema."""


class ConfigMismatch(CdprKitError):
    """Data does not fit the robot configuration it is paired with."""


class InfeasibleBounds(CdprKitError):
    """Pose bounds are empty or the initial guess lies outside them."""


class DivergenceDetected(CdprKitError):
    """Training loss became non-finite."""


class EmptyInput(CdprKitError):
    """An operation that needs at least one sample received none."""
