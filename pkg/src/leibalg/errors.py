"""Exception hierarchy for leibalg."""

from __future__ import annotations


class LeibalgError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatchError(LeibalgError, ValueError):
    """Operands have incompatible sizes."""


class NotSquareError(DimensionMismatchError):
    """A square matrix was required."""


class SingularMatrixError(LeibalgError, ValueError):
    """An invertible matrix was required."""


class NotAnIdealError(LeibalgError, ValueError):
    """A subspace expected to be a two-sided ideal is not one."""


class NotLeibnizError(LeibalgError, ValueError):
    """A structure-constant table violates the Leibniz identity."""


class NotDerivationError(LeibalgError, ValueError):
    """A matrix fails the derivation equations."""


class NotTriangularError(LeibalgError, ValueError):
    """A shortcut valid only for triangular matrices was requested."""


class ParameterError(LeibalgError, ValueError):
    """Catalog family or parameters are invalid."""


class LoadError(LeibalgError, ValueError):
    """An algebra file could not be parsed or validated.

    ``context`` names the offending location (a JSON path such as
    ``brackets[3].k`` or ``line 4, column 2``).
    """

    def __init__(self, message: str, context: str | None = None):
        self.context = context
        super().__init__(f"{context}: {message}" if context else message)
