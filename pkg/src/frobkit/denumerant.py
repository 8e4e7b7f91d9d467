"""Exact representation counting and enumeration.

The denumerant of x is the number of coefficient vectors (m_1, ..., m_k) of
nonnegative integers with sum m_j * a_j = x. Counting uses the classic
coin-counting dynamic program: one pass per generator, scanning the table in
ascending order, so counts[x] accumulates the number of coefficient vectors
rather than ordered sequences. Each generator gets its own pass even when
values repeat, because repeated generators carry independent coefficients.

A representation is materialized as a plain tuple of coefficients aligned
with the generator order; enumeration emits them in ascending lexicographic
order so golden-file tests are stable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    CapExceededError,
    IntegerOverflowError,
    InvalidInputError,
    ResourceExceededError,
    INT64_MAX,
)
from .generators import Generators

Representation = tuple[int, ...]

# Enumeration witness budget; the family verifier needs only binomial-many.
DEFAULT_ENUM_CAP = 10**6

# Hard allocation guard for count tables (entries, not bytes).
MAX_TABLE_CELLS = 1 << 27


@dataclass(frozen=True)
class DenumerantTable:
    """Immutable table with counts[x] = denumerant(x) for 0 <= x <= limit."""

    gens: Generators
    limit: int
    counts: tuple[int, ...]

    def __getitem__(self, x: int) -> int:
        return self.counts[x]


def _counts_up_to(values: tuple[int, ...], limit: int) -> list[int]:
    """Raw DP table as a list; internal, callers wrap or slice it."""
    if limit < 0:
        raise InvalidInputError(f"table limit {limit} is negative")
    if limit + 1 > MAX_TABLE_CELLS:
        raise ResourceExceededError(
            f"count table of {limit + 1} cells exceeds the {MAX_TABLE_CELLS} cell budget"
        )
    counts = [0] * (limit + 1)
    counts[0] = 1
    for a in values:
        for x in range(a, limit + 1):
            counts[x] += counts[x - a]
    if max(counts) > INT64_MAX:
        raise IntegerOverflowError("representation count exceeds the 64-bit range")
    return counts


def denumerant(x: int, gens: Generators) -> int:
    """Exact number of representations of x over the generator tuple."""
    if x < 0:
        raise InvalidInputError(f"target {x} is negative")
    return _counts_up_to(gens.values, x)[x]


def denumerant_table(limit: int, gens: Generators) -> DenumerantTable:
    """Counts for every target 0..limit in one O(k * limit) sweep."""
    counts = _counts_up_to(gens.values, limit)
    return DenumerantTable(gens=gens, limit=limit, counts=tuple(counts))


def enumerate_representations(
    x: int, gens: Generators, cap: int = DEFAULT_ENUM_CAP
) -> list[Representation]:
    """All representations of x, lexicographically ascending in (m_1, ..., m_k).

    Raises CapExceededError (with no partial result) if there are more than
    `cap` of them. The list length always equals denumerant(x, gens).
    """
    if x < 0:
        raise InvalidInputError(f"target {x} is negative")
    if cap < 1:
        raise InvalidInputError(f"cap {cap} must be positive")
    values = gens.values
    k = len(values)

    # suffix_gcd[i] divides anything the generators from position i on can form
    suffix_gcd = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix_gcd[i] = math.gcd(values[i], suffix_gcd[i + 1])

    out: list[Representation] = []
    coeffs = [0] * k

    def descend(i: int, rem: int) -> None:
        if i == k - 1:
            q, r = divmod(rem, values[i])
            if r == 0:
                coeffs[i] = q
                out.append(tuple(coeffs))
                if len(out) > cap:
                    raise CapExceededError(cap)
            return
        step = values[i]
        tail = suffix_gcd[i + 1]
        for m in range(rem // step + 1):
            remainder = rem - m * step
            if remainder % tail:
                continue
            coeffs[i] = m
            descend(i + 1, remainder)

    descend(0, x)
    return out
