"""Exception types raised by the library."""

from __future__ import annotations


class KummerError(ValueError):
    """Base class for every error raised on bad input."""


class RejectedParams(KummerError):
    """Curve parameters violate one or more admissibility conditions.

    ``reasons`` holds one short code per violated condition, in a fixed
    order, so callers can branch on them without parsing the message.
    """

    MESSAGES = {
        "r-too-small": "r must be greater than 2",
        "m-too-small": "m must be at least 2",
        "lambda-too-small": "lambda must be at least 1",
        "non-coprime": "parameters not coprime",
        "characteristic-not-prime": "characteristic must be a prime",
        "characteristic-divides-m": "characteristic divides m",
    }

    def __init__(self, reasons: list[str], detail: str = ""):
        self.reasons = tuple(reasons)
        text = "; ".join(self.MESSAGES[r] for r in self.reasons)
        if detail:
            text = f"{text} ({detail})"
        super().__init__(text)


class InvalidTuple(KummerError):
    """A place tuple is malformed (duplicates, bad index, misplaced inf)."""


class InvalidTupleLength(KummerError):
    """The number of places is outside the range an operation accepts."""


class NotAGammaElement(KummerError):
    """A vector does not match the parametric form of a generating-set element."""


class LengthMismatch(KummerError):
    """Vectors that must be aligned have different lengths."""


class NotAMember(KummerError):
    """A vector is not in the Weierstrass semigroup."""


class UnsupportedSupport(KummerError):
    """A divisor touches places other than the totally ramified ones."""
