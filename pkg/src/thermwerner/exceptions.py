"""Exception types shared by the whole package."""


class ValidationError(ValueError):
    """Input violates a precondition (shape, range, symmetry, normalization)."""


class DomainError(ValueError):
    """Input is well formed but lies outside the mathematical domain of an operation."""


class ConvergenceError(RuntimeError):
    """An iterative routine failed to bracket or converge."""
