"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed matrix, certificate or generator-spec text."""

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message)


class PreconditionError(ValueError):
    """An input does not satisfy the documented precondition of an operation."""


class BudgetExceededError(RuntimeError):
    """An exhaustive computation would exceed its configured budget or size cap."""


class StageError(RuntimeError):
    """An internal postcondition of a pipeline stage failed."""

    def __init__(self, stage, message):
        self.stage = stage
        super().__init__(f"stage {stage}: {message}")
