"""Exception taxonomy shared by every radicalc module.

Errors split into four families that the CLI maps onto exit codes:
usage/parse/domain problems (exit 2), budget exhaustion (exit 3),
and the purely advisory PrecisionInsufficient raised by the numeric
oracle when an interval is too wide to decide a separation question.
"""

from __future__ import annotations


class RadicalcError(Exception):
    """Base class for all radicalc errors."""


class DomainError(RadicalcError):
    """An input is outside the mathematical domain of the operation.

    Carries an optional source span (byte offsets into the input text)
    when the error originates from lowering a parsed expression.
    """

    def __init__(self, message: str, span: tuple[int, int] | None = None):
        super().__init__(message)
        self.span = span


class BudgetExceeded(RadicalcError):
    """An operation-count budget ran out before the answer was found.

    Signals the input was too large for the configured budget, never a
    wrong answer.
    """


class BasisMismatch(RadicalcError):
    """A sum cannot be expressed over the given reduced-set basis."""


class PrecisionInsufficient(RadicalcError):
    """A certified interval is too wide to decide the question asked."""


class ParseError(RadicalcError):
    """Syntax error in the expression language.

    ``offset`` is the byte position of the unexpected token and
    ``expected`` the set of token descriptions that would have been
    accepted there.
    """

    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        super().__init__(message)
        self.offset = offset
        self.expected = expected


class RootIndexError(ParseError):
    """A radical was written with index 0 (rt(x, 0))."""
