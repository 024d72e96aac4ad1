class ProjflowError(Exception):
    """Base class for every error raised by projflow."""


class ParseError(ProjflowError, ValueError):
    """Expression text outside the input grammar."""


class PreconditionError(ProjflowError, ValueError):
    """An operation was called on input it is not defined for."""


class NotHomogeneousError(PreconditionError):
    pass


class LevelZeroError(PreconditionError):
    pass


class NotLevelOneError(PreconditionError):
    pass


class NotAlgebraicError(PreconditionError):
    pass


class DegenerateOrbitError(PreconditionError):
    """Orbit function of the form c*y, whose x-derivative vanishes."""


class BoundaryConditionError(PreconditionError):
    pass


class UndecidedError(ProjflowError):
    """A decision procedure hit one of its configured search limits."""


class InconsistentInputError(ProjflowError, ValueError):
    pass


class SingularPointError(ProjflowError, ZeroDivisionError):
    pass


class ContinuationError(ProjflowError, ArithmeticError):
    pass


class StepUnderflowError(ContinuationError):
    pass


class RootCollisionError(ContinuationError):
    pass
