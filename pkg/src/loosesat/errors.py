"""Exception types shared across the package."""


class LooseSatError(Exception):
    """Base class for all package errors."""


class DomainError(LooseSatError, ValueError):
    """An argument lies outside the domain of an operation."""


class PreconditionError(LooseSatError):
    """A check was asked to run on an input that does not meet its hypothesis."""


class ParseError(LooseSatError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class SearchTimeout(LooseSatError):
    """Raised when a search exceeds its budget.

    ``outcome`` carries whatever was proven before the budget ran out
    (a partial :class:`~loosesat.search.SearchOutcome`, or None).
    """

    def __init__(self, message: str, outcome=None):
        super().__init__(message)
        self.outcome = outcome


class InvalidEdgeError(ParseError, DomainError):
    """A syntactically valid edge line naming an impossible edge."""
