"""Exception types shared across the package."""


class ProbeIEPError(Exception):
    """Base class for package errors."""


class Graph6Error(ProbeIEPError, ValueError):
    """Malformed graph6 input; ``offset`` is the byte where decoding failed."""

    def __init__(self, reason: str, offset: int):
        super().__init__(f"{reason} (byte offset {offset})")
        self.reason = reason
        self.offset = offset


class SearchLimitError(ProbeIEPError, ValueError):
    """An exhaustive search was asked to run beyond its documented size limit."""


class PreconditionError(ProbeIEPError, ValueError):
    """An operation was called on an input outside its stated domain."""


class NoSolution(ProbeIEPError, ArithmeticError):
    """A linear system has no exact solution."""
