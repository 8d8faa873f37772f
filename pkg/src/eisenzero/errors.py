"""Exception hierarchy for eisenzero."""


class EisenzeroError(Exception):
    """Base class for all package errors."""


class PoleError(EisenzeroError):
    """Evaluation requested at (or too close to) a pole."""


class DomainError(EisenzeroError):
    """Argument outside the documented domain of an operation."""


class DivisionError(EisenzeroError):
    """Division by a zero of an analytic function (e.g. a zeta zero)."""


class AccuracyError(EisenzeroError):
    """Requested accuracy could not be certified by the tail bound."""


class UnsupportedAccuracy(EisenzeroError):
    """Accuracy target tighter than the double-precision implementation supports."""


class StepTooCoarse(EisenzeroError):
    """Two sign changes resolved within one scan step; rescan with a smaller step."""


class BoundaryNearZero(EisenzeroError):
    """Contour boundary passes too close to a zero for reliable winding."""


class PhaseStepExceeded(EisenzeroError):
    """Adaptive phase tracking hit the subdivision depth cap."""


class AmbiguousBracket(EisenzeroError):
    """More than one sign change where theory guarantees at most one."""


class LadderMismatch(EisenzeroError):
    """Zero ladders differ by more than boundary churn can explain."""


class ConventionMismatch(EisenzeroError):
    """Closed-form branch selection disagrees with the independently computed value."""

    def __init__(self, message, selected=None, other=None):
        super().__init__(message)
        self.selected = selected
        self.other = other
