"""Generalized Frobenius numbers via residue-class minima.

For a threshold s, let n_{j,s} be the least nonnegative integer congruent to
j modulo a chosen generator m that has more than s representations. Because
adding a generator to one coefficient is injective on representations, the
denumerant is nondecreasing with step m along each residue class, and it is
unbounded for k >= 2 with gcd 1 — so each n_{j,s} exists and an ascending
scan finds it.

Everything else falls out of the table:

  g*_s = max_j n_{j,s} - m        (largest integer with at most s representations)
  n*_s = (1/m) sum_j n_{j,s} - (m-1)/2   (how many integers have at most s)

g_s, the largest integer with *exactly* s representations, is found by a
downward scan from g*_s; it does not exist for every s, in which case None
is returned rather than an error.

The choice of m does not matter (any generator can serve as the modulus);
the default is the smallest generator, which minimizes the table width.
The reduction identities, however, are stated for a specific pivot, so the
via-reduction operations take an explicit ReductionStep.
"""

from __future__ import annotations

from dataclasses import dataclass

from .denumerant import _counts_up_to
from .errors import (
    InternalInvariantError,
    InvalidInputError,
    SearchCeilingExceededError,
    INT64_MAX,
    checked_int,
)
from .generators import Generators, ReductionStep


@dataclass(frozen=True)
class SAperyTable:
    """Per-residue minima n_{j,s} modulo one chosen generator.

    entries[j] is the least x = j (mod modulus) with denumerant(x) > s;
    in particular denumerant(entries[j] - modulus) <= s whenever that
    index is nonnegative.
    """

    gens: Generators
    s: int
    modulus_index: int
    modulus: int
    entries: tuple[int, ...]


@dataclass(frozen=True)
class FrobeniusReport:
    """g*_s, g_s (None when no integer has exactly s representations), and n*_s."""

    gens: Generators
    s: int
    g_star: int
    g_exact: int | None
    n_star: int


def _default_modulus_index(gens: Generators) -> int:
    return min(range(gens.k), key=lambda i: gens.values[i])


def default_search_ceiling(gens: Generators, s: int, modulus: int) -> int:
    """Generous upper bound for the n_{j,s} searches, saturating at int64.

    Scale: (s+1) * modulus * (a_min*a_max + product of all generators).
    Any valid search resolves far below this; hitting it is always an error.
    """
    pi = 1
    for v in gens.values:
        pi = min(pi * v, INT64_MAX)
    naive = min(gens.values) * max(gens.values)
    raw = (s + 1) * modulus * min(naive + pi, INT64_MAX)
    return min(raw, INT64_MAX)


def _check_args(gens: Generators, s: int, modulus_index: int | None) -> int:
    if s < 0:
        raise InvalidInputError(f"threshold s={s} is negative")
    if modulus_index is None:
        return _default_modulus_index(gens)
    if not 0 <= modulus_index < gens.k:
        raise InvalidInputError(
            f"modulus index {modulus_index} out of range for k={gens.k}"
        )
    return modulus_index


def _apery_search(
    gens: Generators,
    s: int,
    modulus_index: int | None = None,
    ceiling: int | None = None,
) -> tuple[SAperyTable, list[int]]:
    """Find all n_{j,s}, returning the table plus the count array that located it."""
    idx = _check_args(gens, s, modulus_index)
    modulus = gens.values[idx]
    if ceiling is None:
        ceiling = default_search_ceiling(gens, s, modulus)
    if ceiling < 0:
        raise InvalidInputError(f"ceiling {ceiling} is negative")

    limit = min(max(4 * modulus, 64), ceiling)
    while True:
        counts = _counts_up_to(gens.values, limit)
        entries: list[int | None] = [None] * modulus
        found = 0
        for x in range(limit + 1):
            if counts[x] > s:
                j = x % modulus
                if entries[j] is None:
                    entries[j] = x
                    found += 1
                    if found == modulus:
                        break
        if found == modulus:
            table = SAperyTable(
                gens=gens,
                s=s,
                modulus_index=idx,
                modulus=modulus,
                entries=tuple(entries),  # type: ignore[arg-type]
            )
            return table, counts
        if limit >= ceiling:
            raise SearchCeilingExceededError(
                f"residue search for {gens} with s={s} passed ceiling {ceiling}; "
                f"{modulus - found} residue classes unresolved"
            )
        limit = min(limit * 2, ceiling)


def apery_table(
    gens: Generators,
    s: int,
    modulus_index: int | None = None,
    ceiling: int | None = None,
) -> SAperyTable:
    """The n_{j,s} table modulo the selected generator (smallest by default)."""
    return _apery_search(gens, s, modulus_index, ceiling)[0]


def g_star_from_table(table: SAperyTable) -> int:
    return max(table.entries) - table.modulus


def g_star(
    gens: Generators,
    s: int,
    modulus_index: int | None = None,
    ceiling: int | None = None,
) -> int:
    """Largest integer with at most s representations; -1 if there is none."""
    return g_star_from_table(apery_table(gens, s, modulus_index, ceiling))


def n_star_from_table(table: SAperyTable) -> int:
    m = table.modulus
    total = sum(table.entries) - m * (m - 1) // 2
    q, r = divmod(total, m)
    if r != 0:
        raise InternalInvariantError(
            f"residue-minima sum {total} not divisible by modulus {m} for {table.gens}, s={table.s}"
        )
    return q


def n_star(
    gens: Generators,
    s: int,
    modulus_index: int | None = None,
    ceiling: int | None = None,
) -> int:
    """Number of nonnegative integers with at most s representations."""
    return n_star_from_table(apery_table(gens, s, modulus_index, ceiling))


def g_exact(
    gens: Generators,
    s: int,
    modulus_index: int | None = None,
    ceiling: int | None = None,
) -> int | None:
    """Largest integer with exactly s representations, or None if no such integer.

    Everything above g*_s has more than s representations, so the downward
    scan from g*_s is exhaustive. None is a routine outcome: thresholds can
    be skipped entirely when counts jump by more than one.
    """
    table, counts = _apery_search(gens, s, modulus_index, ceiling)
    top = g_star_from_table(table)
    for x in range(top, -1, -1):
        if counts[x] == s:
            return x
    return None


def frobenius_report(
    gens: Generators,
    s: int,
    modulus_index: int | None = None,
    ceiling: int | None = None,
) -> FrobeniusReport:
    """g*_s, g_s and n*_s from a single residue-table computation."""
    table, counts = _apery_search(gens, s, modulus_index, ceiling)
    top = g_star_from_table(table)
    exact = None
    for x in range(top, -1, -1):
        if counts[x] == s:
            exact = x
            break
    return FrobeniusReport(
        gens=gens, s=s, g_star=top, g_exact=exact, n_star=n_star_from_table(table)
    )


def g_star_via_reduction(step: ReductionStep, s: int, ceiling: int | None = None) -> int:
    """g*_s of the original tuple computed on the reduced tuple: d*g*_s' + a_1*(d-1)."""
    if step.d < 2:
        raise InvalidInputError(f"reduction step must have d >= 2, got d={step.d}")
    return checked_int(
        step.d * g_star(step.reduced, s, ceiling=ceiling) + step.pivot * (step.d - 1),
        "reduced g_star",
    )


def n_star_via_reduction(step: ReductionStep, s: int, ceiling: int | None = None) -> int:
    """n*_s of the original tuple via the reduced one: d*n*_s' + (a_1-1)(d-1)/2.

    The correction term is always an even product divided by 2 because
    gcd(a_1, d) = 1 forces one of a_1 - 1, d - 1 to be even; non-integrality
    would mean a broken invariant, not a valid answer.
    """
    if step.d < 2:
        raise InvalidInputError(f"reduction step must have d >= 2, got d={step.d}")
    q, r = divmod((step.pivot - 1) * (step.d - 1), 2)
    if r != 0:
        raise InternalInvariantError(
            f"correction term (a_1-1)(d-1) = {(step.pivot - 1) * (step.d - 1)} is odd "
            f"for pivot={step.pivot}, d={step.d}"
        )
    return checked_int(
        step.d * n_star(step.reduced, s, ceiling=ceiling) + q, "reduced n_star"
    )
