"""Exception hierarchy shared by every module of the package."""


class GridCDSError(Exception):
    """Base class for all package errors."""


class RangeError(GridCDSError, ValueError):
    """A vertex lies outside its grid, or two sets live on different grids."""


class DomainError(GridCDSError, ValueError):
    """Grid dimensions fall outside the domain an operation is defined on."""


class CapacityError(GridCDSError):
    """The exact solver refuses a grid above its feasibility ceiling."""


class InconclusiveError(GridCDSError):
    """The exact solver ran out of its node budget before reaching a verdict."""

    def __init__(self, message: str, node_count: int = 0):
        super().__init__(message)
        self.node_count = node_count


class InvariantViolation(GridCDSError):
    """An input that should be minimal breaks a structural fact about MCDSs."""


class FrameError(GridCDSError, ValueError):
    """A regularity frame is malformed or does not fit the grid."""


class PreconditionError(GridCDSError):
    """A transform was called on a state its preconditions exclude."""


class ConnectivityError(GridCDSError):
    """No path exists between two vertices inside the allowed vertex set."""


class LemmaViolation(GridCDSError):
    """A constructive step that must succeed on MCDS inputs did not.

    Raised loudly: on true MCDS inputs this only fires when a transform is
    transcribed wrongly or the input is not minimal.
    """


class RoutineStuck(GridCDSError):
    """The regularization driver found no applicable case, or made no progress."""
