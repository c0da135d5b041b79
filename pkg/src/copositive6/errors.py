"""Exception types raised across the package."""

import numpy as np


class ConstraintViolation(ValueError):
    """An input violates a named precondition (angle inequality, positivity, ...)."""

    def __init__(self, constraint, detail=""):
        self.constraint = constraint
        msg = constraint if not detail else f"{constraint}: {detail}"
        super().__init__(msg)


class InvariantViolation(RuntimeError):
    """A computed object broke an invariant, usually from mismatched tolerances."""


class NotCopositiveEvidence(ArithmeticError):
    """A nonnegative vector with negative quadratic value was found."""

    def __init__(self, vector, value):
        self.vector = np.asarray(vector, dtype=float)
        self.value = float(value)
        super().__init__(f"x^T A x = {self.value:.3e} < 0 at x = {np.round(self.vector, 6).tolist()}")
