"""Exception types shared across the package."""


class GirthBoundError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(GirthBoundError, ValueError):
    pass


class DomainError(GirthBoundError, ValueError):
    """A parameter lies outside the documented domain of an operation."""


class BudgetExceeded(GirthBoundError, RuntimeError):
    """A bounded search ran out of budget; the answer is indeterminate."""

    def __init__(self, what: str, budget: int):
        super().__init__(f"{what}: search budget of {budget} nodes exceeded")
        self.budget = budget


class CapExceeded(GirthBoundError, RuntimeError):
    def __init__(self, what: str, cap: int):
        super().__init__(f"{what}: vertex cap of {cap} exceeded")
        self.cap = cap


class NotPartial2Tree(GirthBoundError, ValueError):
    pass


class Disconnected(GirthBoundError, ValueError):
    pass


class PreconditionViolated(GirthBoundError, ValueError):
    pass


class NotEmbedding(GirthBoundError, ValueError):
    pass
