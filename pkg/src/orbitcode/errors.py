"""Exception types shared across the package."""


class AlgebraError(ValueError):
    """An algebraic precondition failed.

    Raised for singular generators, rank-deficient inputs, non-units,
    mismatched fields or rings, and similar structural violations.
    """


class ParseError(ValueError):
    """Malformed textual input for a polynomial, matrix, or field."""
