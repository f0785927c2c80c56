"""Exception types raised across the package."""


class QBargmannError(Exception):
    """Base class for all package errors."""


class ParameterError(QBargmannError, ValueError):
    """A numeric parameter is outside its domain (e.g. a non-positive weight)."""


class NearRealAxis(QBargmannError, ValueError):
    """The imaginary part of a quaternion is too small to define an axis."""


class NotPerpendicular(QBargmannError, ValueError):
    """Two imaginary units expected to be orthogonal are not."""


class MismatchedWeight(QBargmannError, ValueError):
    """Operands carry different Gaussian weight parameters."""


class QuadratureUnderResolved(QBargmannError, RuntimeError):
    """The quadrature rule is too coarse for the requested integrand."""


class ConfigError(QBargmannError, ValueError):
    """Invalid run configuration or command-line flags."""


class ParseError(QBargmannError, ValueError):
    """Malformed coefficient file."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class TruncationWarning(UserWarning):
    """A projection left measurable energy outside the truncated basis."""
