"""Exception hierarchy.

Every error belongs to one family; the CLI maps a family to an exit status.
"""
from __future__ import annotations


class GcxError(Exception):
    exit_code = 1


class ParseError(GcxError):
    """Malformed input text; carries a 1-based line/column when known."""

    exit_code = 2

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.message = message
        self.line = line
        self.col = col
        where = f"{line}:{col}: " if line is not None else ""
        super().__init__(f"{where}{message}")


class ValidationError(GcxError):
    exit_code = 3


class ExpectationMismatch(GcxError):
    exit_code = 4


class PreconditionError(GcxError):
    exit_code = 5


class DimensionMismatch(PreconditionError, ValueError):
    pass


class InvalidStructure(ValidationError):
    def __init__(self, violations):
        self.violations = list(violations)
        names = ", ".join(sorted({v.relation for v in self.violations}))
        super().__init__(f"structure violates: {names}")


class NonClosedCocycle(PreconditionError):
    pass


class NotClosed(PreconditionError):
    pass


class LNotClosed(NotClosed):
    pass


class NotStrong(PreconditionError):
    pass


class NotContact(PreconditionError):
    pass


class Degenerate(PreconditionError):
    pass


class NotClosedForms(PreconditionError):
    pass


class NotAlmostContact(ValidationError):
    pass


class MCViolated(PreconditionError):
    pass


class NonIsotropic(ValidationError):
    pass


class NonTransverse(ValidationError):
    pass


class UnknownEntry(PreconditionError):
    pass


class BadParams(PreconditionError):
    pass
