"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """A caller supplied a non-finite, negative or otherwise unusable value."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of a function."""


class RegimeError(ValueError):
    """An asymptotic formula was requested outside its regime of validity."""


class ConvergenceError(ArithmeticError):
    """An iterative evaluation hit its iteration cap."""


class QuadratureError(ConvergenceError):
    """Adaptive quadrature did not converge.

    The last two estimates are attached so callers can judge how far off
    the result was.
    """

    def __init__(self, message: str, estimates: tuple[float, float]):
        super().__init__(f"{message} (last estimates: {estimates[0]!r}, {estimates[1]!r})")
        self.estimates = estimates
