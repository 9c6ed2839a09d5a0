"""Exception types shared across the toolkit."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class DegenerateBasisError(ValueError):
    """The row matrix is singular and does not generate a full-rank lattice."""


class BudgetExceededError(RuntimeError):
    """A lattice enumeration would exceed the configured vector budget."""


class UnsupportedRankError(ValueError):
    """Successive-minima search is capped at rank 4."""


class OutOfRegionError(DomainError):
    """Direct summation requested outside the region of absolute convergence."""


class PoleError(DomainError):
    """Evaluation requested at a pole."""


class RefinementError(RuntimeError):
    """An adaptive refinement loop hit its cap before stabilising.

    Carries the last observed increment so callers can decide whether the
    partial answer is usable.
    """

    def __init__(self, message, last_increment=None, value=None):
        super().__init__(message)
        self.last_increment = last_increment
        self.value = value


class UnsupportedFieldError(ValueError):
    """Field construction outside the built-in generators (use ingestion)."""


class FieldDataError(ValueError):
    """A field-data document failed schema or invariant validation."""

    def __init__(self, message, check=None, residual=None):
        super().__init__(message)
        self.check = check
        self.residual = residual
