"""Exception hierarchy for fpquad."""


class FpQuadError(Exception):
    """Base class for all fpquad errors."""


class NotConverged(FpQuadError, RuntimeError):
    """The trapezoidal sum hit its term cap before the truncation rule fired.

    ``terms`` holds the number of terms taken in each direction when the
    loop gave up, ``(n_pos, n_neg)``.
    """

    def __init__(self, message, terms=(0, 0)):
        super().__init__(message)
        self.terms = terms


class OracleUnstable(FpQuadError, RuntimeError):
    """The epsilon-limit sequence did not settle to a trustworthy limit."""


class ContourError(FpQuadError, ValueError):
    """A sample point of the contour touched the ray [0, +inf)."""


class IntegrandError(FpQuadError, ArithmeticError):
    """The integrand could not be evaluated at a sample point."""
