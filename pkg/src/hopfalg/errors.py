"""Exception types shared across the package."""


class GeneratorSetMismatchError(ValueError):
    """Two operands live over different generator sets."""


class PolyParseError(ValueError):
    """Polynomial text does not conform to the grammar.

    `position` is the 0-based offset into the input where parsing failed.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class BudgetExceededError(RuntimeError):
    """A configured resource budget (word length, matrix size, degree) was hit.

    Distinct from a mathematical negative: the computation was not carried
    out, so nothing is asserted about the answer.
    """

    def __init__(self, message, required=None, budget=None):
        super().__init__(message)
        self.required = required
        self.budget = budget


class EmptyRangeError(ValueError):
    """A growth-series comparison or estimate was asked on an empty window."""
