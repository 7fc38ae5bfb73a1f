"""Exception hierarchy shared by every module of the package."""


class HopfGraphError(Exception):
    """Base class for all errors raised by hopfgraph."""


class DomainError(HopfGraphError, ValueError):
    """An operand lies outside the domain of the requested operation."""


class ResourceError(HopfGraphError):
    """A requested enumeration exceeds the configured size caps."""


class ParseError(HopfGraphError, ValueError):
    """Malformed graph text."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnsupportedConfigError(HopfGraphError):
    """The (product, coproduct, carrier) triple is not a Hopf algebra."""


class InternalError(HopfGraphError, RuntimeError):
    """An internal invariant was violated; indicates a bug, not bad input."""
