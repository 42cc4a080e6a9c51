"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class UnsupportedCaseError(ValueError):
    """The requested closed form does not cover these parameters."""


class ConvergenceError(ArithmeticError):
    """An iterative routine exhausted its budget.

    ``estimate`` holds the best value reached before giving up (a float or a
    :class:`~arcbeta.quadrature.QuadratureEstimate`).
    """

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate
        self.report = None
