"""Exception hierarchy shared by every finslerlab module."""


class FinslerError(Exception):
    """Base class for all library errors."""


class InputError(FinslerError, ValueError):
    """Malformed input: wrong dimension, zero direction, bad field."""


class SpecParseError(InputError):
    """A spec file could not be parsed; the message names the line or field."""


class NumericalError(FinslerError, ArithmeticError):
    """Base class for failures of a numerical evaluation."""


class SingularityError(NumericalError):
    """The metric function is evaluated where it is undefined (Kropina at s = 0)."""


class SingularDirectionError(SingularityError):
    """A tangent direction with beta(y) = 0 was passed to a singular metric."""


class DomainError(NumericalError):
    """Argument outside the real domain of the metric family (e.g. fractional power of s < 0)."""


class DegenerateMetricError(NumericalError):
    """A denominator of the (alpha, beta) scalars vanishes."""


class QuadratureDivergenceError(NumericalError):
    """Adaptive quadrature failed to converge."""


class ClassificationError(NumericalError):
    """No regular direction could be sampled for the isotropy classifier."""
