"""Shared exception types."""


class ParseError(ValueError):
    """Input text does not match one of the documented grammars."""


class PrecisionError(ArithmeticError):
    """A truncated series does not determine the requested quantity."""


class NonFiniteQuotientError(ArithmeticError):
    """A cohomology quotient has a free part, so its order is undefined."""
