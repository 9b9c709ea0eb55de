"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Raised when an input violates a documented precondition or invariant."""


class ConvergenceError(RuntimeError):
    """Raised when an iterative solver fails to reach its tolerance.

    Carries the last observed marginal residual when applicable.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class UnderflowError(ConvergenceError):
    """Raised when linear-domain scaling underflows; retry in log domain."""


class CutoffError(ValueError):
    """Raised when a sparsification cutoff would remove all mass."""


class TrainingError(RuntimeError):
    """Raised when classifier fitting cannot proceed (single class, NaN loss)."""
