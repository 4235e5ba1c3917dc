"""Exception types shared across the package."""


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


class PreconditionError(ValueError):
    """A documented precondition of an operation does not hold."""


class InternalInconsistency(RuntimeError):
    """A sign pattern contradicts the classification theory.

    This signals a defect in a formula or in the theory, never bad user input.
    """
