"""Exception hierarchy shared by the library and the command line."""


class DomainError(ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class PoleError(DomainError):
    """The complete Gamma function was requested at a pole (0, -1, -2, ...)."""


class UnsupportedOrder(DomainError):
    """An approximant order for which no closed form is available."""


class NumericalFailure(ArithmeticError):
    """Base class for failures that the CLI maps to exit status 3."""


class EnclosureCollapse(NumericalFailure):
    """Rounding turned a lower bound into something larger than the upper bound."""

    def __init__(self, lo, hi):
        super().__init__(f"enclosure collapsed: lo={lo!r} > hi={hi!r}")
        self.lo = lo
        self.hi = hi


class OracleToleranceError(NumericalFailure):
    """The reference computation could not reach the requested tolerance.

    The best value obtained is kept on the exception so that callers can
    still inspect it.
    """

    def __init__(self, message, best):
        super().__init__(message)
        self.best = best
