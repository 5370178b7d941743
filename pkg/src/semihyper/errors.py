"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class SemihypergroupError(Exception):
    """Base class for all errors raised by :mod:`semihyper`."""


class UnknownElementError(SemihypergroupError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class CarrierMismatchError(SemihypergroupError, ValueError):
    pass


class FloatInputError(SemihypergroupError, TypeError):
    """A floating-point value reached an exact-arithmetic entry point."""


class AxiomError(SemihypergroupError, ValueError):
    """A convolution table failed :func:`semihyper.core.check_axioms`.

    The full :class:`~semihyper.core.AxiomReport` is kept on ``report``.
    """

    def __init__(self, report, message: str | None = None):
        self.report = report
        super().__init__(message or report.summary())


class TheoremViolation(SemihypergroupError):
    """A proven identity failed on a validated semihypergroup.

    This always indicates a library bug, never bad user input.
    """


class GroupError(SemihypergroupError, ValueError):
    pass


class ParameterError(SemihypergroupError, ValueError):
    pass


class FixtureError(SemihypergroupError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class NotAnIdealError(SemihypergroupError, ValueError):
    pass


class NotAHomomorphismError(SemihypergroupError, ValueError):
    pass


class SearchSpaceError(SemihypergroupError, ValueError):
    pass


class PreconditionError(SemihypergroupError, ValueError):
    """An operation was called on input outside its stated domain."""


class ParseError(SemihypergroupError, ValueError):
    """Syntax or validation error in a text document, with a location."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
