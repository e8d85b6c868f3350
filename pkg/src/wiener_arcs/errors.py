"""Exception hierarchy; the CLI maps each class to an exit code."""

from __future__ import annotations


class MeasureValidationError(ValueError):
    """A measure description violates an invariant.

    ``offset`` is the byte offset of the offending token when the measure came
    from DSL text, else None.
    """

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.message = message
        self.offset = offset

    def __str__(self) -> str:
        if self.offset is None:
            return self.message
        return f"{self.message} (at offset {self.offset})"


class ParseError(MeasureValidationError):
    """Syntax error in measure DSL text."""


class CertificateError(ValueError):
    """An operation needs a continuity certificate the measure lacks."""


class DegenerateSignalError(ValueError):
    """A ball measure is too small to take its logarithm."""

    def __init__(self, message: str, radius: float):
        super().__init__(message)
        self.radius = radius


class OracleUnsupported(NotImplementedError):
    """The exact oracle has no closed form for this measure."""
