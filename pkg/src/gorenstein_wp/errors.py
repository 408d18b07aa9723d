"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed polynomial text; ``position`` is the 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class PrecisionExhausted(ArithmeticError):
    """A computation needed coefficients beyond the tracked precision."""

    def __init__(self, message: str, branch: str | None = None, suggested_precision: int | None = None):
        super().__init__(message)
        self.branch = branch
        self.suggested_precision = suggested_precision


class NonGorenstein(ValueError):
    """The conductor data has odd total order, so the point is not Gorenstein."""

    def __init__(self, n_p: int):
        super().__init__(f"n_P = {n_p} is odd; the point is not Gorenstein")
        self.n_p = n_p


class LinearDependenceError(ValueError):
    pass


class InconsistentModel(ValueError):
    pass


class InternalConsistencyError(RuntimeError):
    """Two independent computation routes disagreed."""
