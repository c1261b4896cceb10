"""Exception hierarchy shared by every module."""


class HomspecError(Exception):
    """Base class for all library errors."""


class DomainError(HomspecError, ValueError):
    """An argument lies outside the domain of the operation."""


class NonConvergence(HomspecError, ArithmeticError):
    """An iterative numerical method ran out of budget.

    The best estimate and its error bound are kept on the exception so that
    callers can decide whether the partial answer is usable.
    """

    def __init__(self, message, estimate=float("nan"), error=float("inf")):
        super().__init__(f"{message} (estimate={estimate!r}, error bound={error!r})")
        self.estimate = estimate
        self.error = error


class BracketError(HomspecError, ValueError):
    """A root-finding target is not bracketed by the search interval."""


class SingularLimit(HomspecError, ArithmeticError):
    """A limit at r = 0 does not exist: singular parts failed to cancel."""


class InvariantViolation(HomspecError):
    """Input data is internally inconsistent (e.g. 2 V(D/2) > vol M)."""
