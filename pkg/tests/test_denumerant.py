import pytest

from frobkit import (
    CapExceededError,
    InvalidInputError,
    ResourceExceededError,
    denumerant,
    denumerant_table,
    enumerate_representations,
    validate,
)
from frobkit.denumerant import MAX_TABLE_CELLS

from oracle import brute_count, brute_representations


def test_denumerant_examples():
    assert denumerant(0, validate([3, 5])) == 1
    assert denumerant(15, validate([3, 5])) == 2
    assert denumerant(89, validate([15, 10, 6])) == 3


def test_denumerant_rejects_negative():
    with pytest.raises(InvalidInputError):
        denumerant(-1, validate([3, 5]))


def test_table_examples():
    assert denumerant_table(4, validate([3, 5])).counts == (1, 0, 0, 1, 0)
    assert denumerant_table(0, validate([3, 5])).counts == (1,)
    t = denumerant_table(16, validate([3, 5]))
    assert t.counts[15] == 2
    assert t.counts[8] == 1
    assert t.counts[7] == 0


def test_table_matches_pointwise_denumerant():
    gens = validate([15, 10, 6])
    table = denumerant_table(100, gens)
    for x in range(101):
        assert table.counts[x] == denumerant(x, gens)


def test_table_structure_invariants():
    gens = validate([7, 4, 6, 10])
    table = denumerant_table(120, gens)
    assert table.counts[0] == 1
    for x in range(1, min(gens.values)):
        assert table.counts[x] == 0
    for a in gens.values:
        for x in range(121 - a):
            assert table.counts[x + a] >= table.counts[x]


def test_table_size_guard():
    with pytest.raises(ResourceExceededError):
        denumerant_table(MAX_TABLE_CELLS + 5, validate([3, 5]))


def test_repeated_generators_count_separately():
    # (2,2,3) carries two independent coefficients for the value 2
    assert denumerant(4, validate([2, 2, 3])) == 3  # (2,0,0),(1,1,0),(0,2,0)
    assert denumerant(4, validate([2, 3])) == 1


def test_enumerate_examples():
    assert enumerate_representations(59, validate([15, 10, 6])) == [(1, 2, 4)]
    assert enumerate_representations(7, validate([3, 5])) == []
    assert enumerate_representations(0, validate([2, 3, 5])) == [(0, 0, 0)]


def test_enumerate_is_lexicographic_and_complete():
    gens = validate([15, 10, 6])
    reps = enumerate_representations(89, gens)
    assert reps == sorted(reps)
    assert reps == [(1, 2, 9), (1, 5, 4), (3, 2, 4)]
    assert all(sum(m * a for m, a in zip(rep, gens.values)) == 89 for rep in reps)


def test_enumerate_matches_brute_force():
    gens = validate([3, 5, 7])
    for x in (0, 1, 12, 35, 47):
        assert enumerate_representations(x, gens) == brute_representations(x, gens.values)


def test_enumerate_cap():
    gens = validate([1, 2])
    with pytest.raises(CapExceededError) as exc:
        enumerate_representations(50, gens, cap=3)
    assert exc.value.cap == 3
    # at the cap exactly is fine
    assert len(enumerate_representations(50, gens, cap=26)) == 26


def test_unboundedness_along_residue_class():
    gens = validate([3, 5])
    for n in range(11):
        assert denumerant(15 * n, gens) >= n + 1


def test_counts_agree_with_brute_force_small():
    for values in [(3, 5), (2, 3), (6, 10, 15)]:
        gens = validate(list(values))
        for x in range(61):
            assert denumerant(x, gens) == brute_count(x, values)
