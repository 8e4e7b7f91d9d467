"""Exception hierarchy and the fixed-width integer policy.

Python integers never wrap around, so "overflow" here means a computed
quantity left the signed 64-bit range the toolkit promises to operate in.
Such results are rejected loudly instead of being returned.
"""

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


class FrobkitError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(FrobkitError):
    """Input violates a documented precondition."""


class TooFewGeneratorsError(InvalidInputError):
    pass


class NonPositiveError(InvalidInputError):
    pass


class NotCoprimeError(InvalidInputError):
    """Generator tuple has an overall gcd larger than 1."""

    def __init__(self, gcd: int):
        self.gcd = gcd
        super().__init__(f"generators are not coprime (gcd={gcd})")


class NotPairwiseCoprimeError(InvalidInputError):
    """Some pair of generators shares a common factor."""

    def __init__(self, i: int, j: int, gcd: int):
        self.pair = (i, j)
        self.gcd = gcd
        super().__init__(
            f"generators at positions {i} and {j} share a factor (gcd={gcd})"
        )


class IntegerOverflowError(FrobkitError):
    """A value left the signed 64-bit range."""


class ResourceExceededError(FrobkitError):
    """A table or buffer would be too large to allocate."""


class CapExceededError(FrobkitError):
    """Enumeration would produce more witnesses than the caller allowed."""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"more than {cap} representations; raise the cap to enumerate")


class SearchCeilingExceededError(FrobkitError):
    """A residue-class search ran past its safety ceiling.

    For a valid input (k >= 2, gcd 1) the search is guaranteed to terminate,
    so hitting the ceiling signals either a bug or a ceiling set too low.
    """


class InternalInvariantError(FrobkitError):
    """An identity that must hold mathematically failed; report as a bug."""


def checked_int(value: int, context: str) -> int:
    """Return `value` unchanged, or raise IntegerOverflowError if it is outside int64."""
    if value > INT64_MAX or value < INT64_MIN:
        raise IntegerOverflowError(f"{context} exceeds the 64-bit integer range")
    return value
