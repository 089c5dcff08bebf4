"""Exception types shared across the package."""


class DivergenceError(RuntimeError):
    """Trajectory left the attractor: a component went non-finite or past the bound.

    ``step`` is the integration step at which the escape was detected, when known.
    """

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class LengthMismatchError(ValueError):
    """Input bit sequences do not have the declared length."""


class TooLargeError(ValueError):
    """Truth table or spectrum would exceed the materialization bound."""


class NotBooleanValuedError(ValueError):
    """Inverse transform did not reconstruct a 0/1-valued function."""


class OddVariableCountError(ValueError):
    """Bentness is only defined for an even number of variables."""


class TooShortError(ValueError):
    """Input sequence is shorter than the test's documented minimum.

    ``minimum`` carries the required length so callers can report it.
    """

    def __init__(self, message, minimum=None):
        super().__init__(message)
        self.minimum = minimum


class DegenerateInputError(ValueError):
    """Input has no variation (e.g. a constant byte stream), so a statistic is undefined."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of a special function."""
