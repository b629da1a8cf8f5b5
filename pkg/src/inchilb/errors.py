"""Exception types shared across the package."""


class InchilbError(Exception):
    """Base class for all domain errors raised by this package."""


class NotDivisibleError(InchilbError):
    """Exact polynomial division was requested but the dividend is not a multiple."""


class InvalidTruncationError(InchilbError):
    """A series truncation bound is negative."""


class ZeroNumeratorError(InchilbError):
    """The zero polynomial has no reduced rational form."""


class EmptyMonomialError(InchilbError):
    """An all-zero exponent matrix does not describe a monomial of positive degree."""


class NegativeExponentError(InchilbError):
    """Monomial exponents must be non-negative."""


class NoParentError(InchilbError):
    """An orbit supported on a single column has no parent orbit."""


class ParseError(InchilbError):
    """Malformed orbit input text.

    Carries ``position``, the 0-based offset of the offending character
    when known (or ``None``).
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class TooManyGeneratorsError(InchilbError):
    """Subset enumeration refused: the generator count exceeds the guard."""


class TooManySupportColumnsError(InchilbError):
    """The direct closed-form numerator is only available for up to three occupied columns."""


class NegativeDenominatorPowerError(InchilbError):
    """The direct closed-form numerator assumes a non-negative power of (1-t) in the denominator."""


class RepeatedColumnDegreesError(InchilbError):
    """The partial-fraction degree formula needs pairwise distinct column degrees."""
