"""Exception types shared across the package."""

from __future__ import annotations


class FilicertError(Exception):
    """Base class for all errors raised by this package."""


class ZeroSpecialization(FilicertError):
    """Evaluation at t = 0 of a scalar with a pole at t = 0."""


class NotAUnit(FilicertError):
    """A scalar or determinant that is not of the form c*t^k."""


class DimensionMismatch(FilicertError):
    """Operands of incompatible dimensions."""


class NegativeExponent(FilicertError):
    """A t-pole where a polynomial entry is required."""


class NotInvariant(FilicertError):
    """A subspace that is not invariant under the given matrix."""


class InvalidSpec(FilicertError):
    """A deformation specification violating one of its invariants."""


class ValidationError(FilicertError):
    """Structurally well-formed input violating a semantic invariant."""


class ParseError(FilicertError):
    """Syntax error, with position and the set of expected tokens."""

    def __init__(self, message: str, line: int = 0, column: int = 0,
                 expected: tuple[str, ...] = ()):
        self.line = line
        self.column = column
        self.expected = expected
        where = f" at line {line}, column {column}" if line else ""
        hint = f" (expected {', '.join(expected)})" if expected else ""
        super().__init__(f"{message}{where}{hint}")
