"""Generator tuples: validation, gcd machinery, and the common-factor reduction step."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import (
    InvalidInputError,
    NonPositiveError,
    NotCoprimeError,
    TooFewGeneratorsError,
    checked_int,
)


@dataclass(frozen=True)
class Generators:
    """An ordered tuple (a_1, ..., a_k) of positive integers with overall gcd 1.

    Order is preserved and duplicates are allowed: representation counts
    genuinely differ between, say, (2, 3) and (2, 2, 3). Values of 1 are
    legal when k >= 2; single-element tuples are rejected because the
    per-residue searches downstream only terminate for k >= 2.
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) < 2:
            raise TooFewGeneratorsError(
                f"need at least 2 generators, got {len(self.values)}"
            )
        for v in self.values:
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidInputError(f"generator {v!r} is not an integer")
            if v <= 0:
                raise NonPositiveError(f"generator {v} is not positive")
            checked_int(v, "generator")
        g = math.gcd(*self.values)
        if g != 1:
            raise NotCoprimeError(g)

    @property
    def k(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True)
class ReductionStep:
    """One application of the common-factor reduction.

    With pivot a_1 kept fixed and d = gcd(a_2, ..., a_k) >= 2, the reduced
    tuple is (a_1, a_2/d, ..., a_k/d); gcd(a_1, d) = 1 is forced by the
    overall gcd being 1.
    """

    pivot: int
    d: int
    reduced: Generators


def gcd_all(values: Sequence[int]) -> int:
    """Greatest common divisor of a nonempty sequence of positive integers."""
    if not values:
        raise InvalidInputError("gcd of an empty sequence is undefined")
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise InvalidInputError(f"gcd input {v!r} is not a positive integer")
    return math.gcd(*values)


def validate(values: Sequence[int]) -> Generators:
    """Build a Generators tuple, raising a specific error for each broken invariant."""
    return Generators(tuple(values))


def is_pairwise_coprime(gens: Generators) -> bool:
    """True iff every pair of generators is coprime (stronger than overall gcd 1)."""
    return all(math.gcd(a, b) == 1 for a, b in combinations(gens.values, 2))


def reduce_step(gens: Generators) -> ReductionStep | None:
    """Split off the common factor of a_2..a_k, keeping a_1 as the pivot.

    Returns None when that gcd is 1 (no reduction available with this pivot).
    For k = 2 the step always applies with d = a_2, reducing to (a_1, 1).
    """
    d = math.gcd(*gens.values[1:])
    if d == 1:
        return None
    reduced = Generators(
        (gens.values[0],) + tuple(v // d for v in gens.values[1:])
    )
    return ReductionStep(pivot=gens.values[0], d=d, reduced=reduced)
