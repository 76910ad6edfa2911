"""
Errors raised by the fractional dynamics toolkit.
"""


class FracDynError(Exception):
    """Base class for every toolkit error."""


class DomainError(FracDynError, ValueError):
    """Argument outside the domain of an operation."""


class GammaOverflowError(FracDynError, OverflowError):
    """Gamma function argument beyond the representable range."""


class WeightIndexError(FracDynError, IndexError):
    """Quadrature weight requested for an index outside 0..n(+1)."""


class DimensionError(FracDynError, ValueError):
    """State, field or matrix dimension does not match."""


class ConfigurationError(FracDynError, ValueError):
    """Scenario or command input is invalid."""


class NumericalFailure(FracDynError, ArithmeticError):
    """A state component became non-finite during integration."""

    def __init__(self, step, alpha=None, message=None):
        self.step = step
        self.alpha = alpha
        if message is None:
            message = f'Non-finite state at step {step}'
            if alpha is not None:
                message += f' (alpha={alpha:g})'
        super().__init__(message)
