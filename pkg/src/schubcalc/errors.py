"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input violates a documented constraint (bad diagram, out-of-range index, ...)."""


class ContextMismatchError(ValidationError):
    """Two classes from different rings A*(k, n) were combined."""


class BudgetExceededError(RuntimeError):
    """A brute-force enumeration would exceed the configured size limit."""
