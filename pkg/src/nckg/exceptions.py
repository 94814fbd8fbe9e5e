"""Exception hierarchy for nckg."""


class NCKGError(Exception):
    """Base class for every error raised by this package."""


class ConfigurationError(NCKGError, ValueError):
    """Unsupported unit tag, mode or other bad configuration."""


class DomainError(NCKGError, ValueError):
    """Argument outside the mathematical domain of a function."""


class CriticalCouplingError(DomainError):
    """alpha >= l + 1/2: the effective order nu would become complex."""


class DivergentIntegralError(NCKGError, ArithmeticError):
    """The requested integral does not converge at the origin."""


class PoleError(NCKGError, ZeroDivisionError):
    """A closed-form expression hits a zero denominator."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class AccuracyError(NCKGError, ArithmeticError):
    """Adaptive quadrature did not converge; both estimates are attached."""

    def __init__(self, message, estimates=()):
        super().__init__(message)
        self.estimates = tuple(estimates)


class DegeneracyError(NCKGError, ZeroDivisionError):
    """Energy denominator vanishes in a perturbative sum."""


class UnboundedError(NCKGError, ValueError):
    """Transition coefficient is zero, so theta is not constrained."""
