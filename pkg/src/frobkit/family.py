"""The complementary-product family and its staircase of representation counts.

From pairwise coprime (a_1, ..., a_k) build Pi = a_1*...*a_k and the
cofactors A_j = Pi / a_j, which themselves form a gcd-1 generator tuple.
This family is extremal in a precise sense:

  * the classical Frobenius number of (A_1, ..., A_k) is (k-1)*Pi - Sigma,
    where Sigma = A_1 + ... + A_k;
  * for every t >= 1 the value (k+t-1)*Pi - Sigma has exactly
    C(k+t-2, k-1) representations, all of the canonical shape
    coefficient_j = (n_j + 1)*a_j - 1 with the n_j summing to t-1;
  * every integer beyond it has at least C(k+t-1, k-1) representations.

So the largest-with-at-most-s numbers plateau: g*_s sits at the same
progression value for every s between consecutive binomials, and the
progression steps by exactly Pi.

verify_step checks all three claims mechanically for one t, using the exact
denumerant engine as the oracle. "Every larger integer" reduces to the
finite window (value, value + Pi]: adding Pi = a_j * A_j to any coefficient
shows the denumerant is nondecreasing with step Pi, so a bound that holds on
the window holds everywhere above it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .denumerant import (
    DEFAULT_ENUM_CAP,
    Representation,
    denumerant_table,
    enumerate_representations,
)
from .errors import InvalidInputError, NotCoprimeError, NotPairwiseCoprimeError, checked_int
from .generators import Generators

# Table size grows linearly in t*Pi; fail loudly rather than crawl.
DEFAULT_MAX_T = 6


@dataclass(frozen=True)
class ProductFamily:
    """Pairwise coprime base with its product Pi, cofactors A_j = Pi/a_j, and Sigma."""

    base: Generators
    pi: int
    cofactors: tuple[int, ...]
    sigma: int

    @property
    def k(self) -> int:
        return self.base.k

    @property
    def generators(self) -> Generators:
        """The cofactor tuple as a generator set (gcd 1 by pairwise coprimality)."""
        return Generators(self.cofactors)


@dataclass(frozen=True)
class StepReport:
    """Verification record for one progression step t."""

    t: int
    value: int
    expected_count: int
    actual_count: int
    canonical_ok: bool
    window_min_count: int
    window_bound: int

    @property
    def holds(self) -> bool:
        return (
            self.actual_count == self.expected_count
            and self.canonical_ok
            and self.window_min_count >= self.window_bound
        )


def build_family(base: Generators) -> ProductFamily:
    """Assemble Pi, the cofactors and Sigma; the base must be pairwise coprime."""
    values = base.values
    for (i, a), (j, b) in combinations(enumerate(values), 2):
        g = math.gcd(a, b)
        if g != 1:
            raise NotPairwiseCoprimeError(i, j, g)
    pi = 1
    for v in values:
        pi = checked_int(pi * v, "generator product")
    cofactors = tuple(pi // v for v in values)
    sigma = checked_int(sum(cofactors), "cofactor sum")
    return ProductFamily(base=base, pi=pi, cofactors=cofactors, sigma=sigma)


def family_g0(family: ProductFamily) -> int:
    """Closed-form Frobenius number of the cofactor tuple: (k-1)*Pi - Sigma."""
    return checked_int((family.k - 1) * family.pi - family.sigma, "closed-form g0")


def progression_value(family: ProductFamily, t: int) -> int:
    """The t-th progression value (k+t-1)*Pi - Sigma, t >= 1."""
    if t < 1:
        raise InvalidInputError(f"progression index t={t} must be >= 1")
    return checked_int((family.k + t - 1) * family.pi - family.sigma, "progression value")


def expected_count(k: int, t: int) -> int:
    """Exact count C(k+t-2, k-1) of representations at progression step t."""
    if k < 2:
        raise InvalidInputError(f"k={k} must be >= 2")
    if t < 1:
        raise InvalidInputError(f"t={t} must be >= 1")
    return checked_int(math.comb(k + t - 2, k - 1), "binomial count")


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Nonnegative integer vectors of given length summing to total, lex ascending."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def canonical_representations(family: ProductFamily, t: int) -> list[Representation]:
    """The canonical coefficient vectors ((n_j + 1)*a_j - 1) with sum n_j = t - 1.

    Each one evaluates to progression_value(family, t) against the cofactor
    generators, and there are exactly expected_count(k, t) of them.
    """
    if t < 1:
        raise InvalidInputError(f"progression index t={t} must be >= 1")
    base = family.base.values
    return [
        tuple((n + 1) * a - 1 for n, a in zip(ns, base))
        for ns in _compositions(t - 1, family.k)
    ]


def verify_step(
    family: ProductFamily,
    t: int,
    max_t: int = DEFAULT_MAX_T,
    cap: int = DEFAULT_ENUM_CAP,
) -> StepReport:
    """Check one progression step with the denumerant engine as the oracle.

    Confirms (a) the exact representation count at the progression value,
    (b) that the enumerated representations equal the canonical set (and
    each coefficient is congruent to -1 modulo its base generator), and
    (c) the at-least bound on the window (value, value + Pi], which by
    step-Pi monotonicity covers every larger integer.
    """
    if t < 1:
        raise InvalidInputError(f"progression index t={t} must be >= 1")
    if t > max_t:
        raise InvalidInputError(
            f"t={t} exceeds the verification cap {max_t}; raise max_t explicitly"
        )
    value = progression_value(family, t)
    gens = family.generators
    table = denumerant_table(value + family.pi, gens)
    actual = table.counts[value]
    expected = expected_count(family.k, t)

    canonical = canonical_representations(family, t)
    witnesses = enumerate_representations(value, gens, cap=cap)
    congruent = all(
        (c + 1) % a == 0 for rep in witnesses for c, a in zip(rep, family.base.values)
    )
    canonical_ok = congruent and set(witnesses) == set(canonical)

    window = table.counts[value + 1 : value + family.pi + 1]
    return StepReport(
        t=t,
        value=value,
        expected_count=expected,
        actual_count=actual,
        canonical_ok=canonical_ok,
        window_min_count=min(window),
        window_bound=expected_count(family.k, t + 1),
    )


def pair_gs_closed_form(a1: int, a2: int, s: int) -> int:
    """Closed form for coprime pairs: g_s(a1, a2) = (s+1)*a1*a2 - a1 - a2."""
    if a1 < 1 or a2 < 1:
        raise InvalidInputError(f"pair ({a1}, {a2}) must be positive")
    if s < 0:
        raise InvalidInputError(f"threshold s={s} is negative")
    g = math.gcd(a1, a2)
    if g != 1:
        raise NotCoprimeError(g)
    return checked_int((s + 1) * a1 * a2 - a1 - a2, "pair closed form")
