"""Exception types shared across the package."""


class MeanZeroViolation(ValueError):
    """A quantity requiring zero spatial mean got a field with nonzero mean."""


class SingularParameter(ValueError):
    """Parameter combination puts the requested constant out of range."""


class ContractionFailure(RuntimeError):
    """Fixed-point iteration did not converge within the iteration budget.

    Carries the last contraction residual; usually means the step size is
    too large for the size of the data.
    """

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


class BlowUpDetected(RuntimeError):
    """Non-finite values appeared during time stepping."""

    def __init__(self, message, last_time, last_state=None):
        super().__init__(message)
        self.last_time = last_time
        self.last_state = last_state


class HypothesisViolation(ValueError):
    """An estimate was queried outside its hypotheses; names the clause."""

    def __init__(self, clause):
        super().__init__(clause)
        self.clause = clause


class InsufficientData(ValueError):
    """Not enough samples/snapshots to evaluate the requested quantity."""


class NotApplicable(ValueError):
    """The requested ratio or bound is vacuous for this input."""
