"""Exception types raised by the library."""


class QLandauerError(Exception):
    """Base class for library errors."""


class PoleError(QLandauerError, ValueError):
    """Argument sits on a pole of Gamma / digamma (0, -1, -2, ...)."""


class DomainError(QLandauerError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class HeisenbergError(DomainError):
    """Phase-space volume below 1/2: an upstream numerical failure."""


class DegenerateRootsError(QLandauerError, ArithmeticError):
    """Characteristic frequencies (nearly) coincide: critical damping."""


class NumericalError(QLandauerError, ArithmeticError):
    """Non-finite result, failed residual check or similar."""


class QuadratureError(NumericalError):
    """Adaptive quadrature did not reach the requested tolerance."""
