"""Exception types shared across the package."""

from __future__ import annotations


class Nlc2Error(Exception):
    """Base class for all package-specific errors."""


class MalformedInputError(Nlc2Error):
    """Structurally invalid input: bad edge list, bad file, bad term."""


class MisuseError(Nlc2Error):
    """An operation was called outside its documented domain."""


class PreconditionError(Nlc2Error):
    """A checked structural precondition does not hold for the input."""


class NotRhoFreeError(Nlc2Error):
    """An operation required relabel-free inputs but one is not relabel-free."""


class NotNlc2Error(Nlc2Error):
    """An operation required NLC-2 inputs but proved one lies outside the class."""


class OracleBudgetError(Nlc2Error):
    """A brute-force oracle was asked to exceed its configured budget."""


class ExpressionSyntaxError(MalformedInputError):
    """Expression text does not match the grammar; carries the offending position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position
