"""Exception types raised by rpsent."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested quantity."""


class CapExceededError(ValueError):
    """A size or configuration cap was exceeded."""


class PrecisionExhaustedError(ArithmeticError):
    """Interval refinement hit its cap without deciding the question."""


class ConvergenceError(RuntimeError):
    """An iterative solver did not converge within its iteration budget."""


class DocumentError(ValueError):
    """A belief document could not be parsed."""
