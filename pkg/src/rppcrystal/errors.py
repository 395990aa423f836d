"""Exception types raised by the library."""


class RPPError(Exception):
    """Base class for all library errors."""


class ShapeError(RPPError, ValueError):
    pass


class NotWeaklyDecreasing(ShapeError):
    pass


class NotContained(ShapeError):
    pass


class InvalidFilling(RPPError, ValueError):
    """A filling does not fit its shape, bound, or tableau class."""


class ReconstructionFailed(RPPError, ValueError):
    pass


class NotSymmetric(RPPError, ValueError):
    pass


class InternalInvariant(RPPError, RuntimeError):
    """A structural invariant that should be unreachable was violated."""
