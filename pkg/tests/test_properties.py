import math

from hypothesis import assume, given, settings, strategies as st

from frobkit import (
    FrobkitError,
    apery_table,
    denumerant,
    denumerant_table,
    enumerate_representations,
    g_star,
    g_star_via_reduction,
    n_star,
    n_star_via_reduction,
    reduce_step,
    validate,
)

from oracle import brute_count

coprime_tuples = st.lists(st.integers(1, 30), min_size=2, max_size=4).filter(
    lambda vs: math.gcd(*vs) == 1
)

small_coprime_tuples = st.lists(st.integers(1, 12), min_size=2, max_size=3).filter(
    lambda vs: math.gcd(*vs) == 1
)


@given(coprime_tuples, st.integers(0, 60))
def test_dp_count_matches_nested_loop_oracle(values, x):
    assert denumerant(x, validate(values)) == brute_count(x, tuple(values))


@given(coprime_tuples, st.integers(0, 150), st.integers(0, 3))
def test_residue_monotonicity(values, x, j_seed):
    gens = validate(values)
    j = j_seed % gens.k
    a = gens.values[j]
    table = denumerant_table(x + a, gens)
    assert table.counts[x + a] >= table.counts[x]


@given(coprime_tuples, st.integers(0, 80))
def test_enumeration_agrees_with_count(values, x):
    gens = validate(values)
    reps = enumerate_representations(x, gens)
    assert len(reps) == denumerant(x, gens)
    assert reps == sorted(reps)
    for rep in reps:
        assert sum(m * a for m, a in zip(rep, gens.values)) == x
    assert len(set(reps)) == len(reps)


@given(coprime_tuples, st.integers(0, 100))
def test_table_is_pointwise_consistent(values, x):
    gens = validate(values)
    table = denumerant_table(x, gens)
    assert table.counts[x] == denumerant(x, gens)
    assert table.counts[0] == 1


@given(st.lists(st.integers(-3, 12), min_size=0, max_size=5))
def test_validate_succeeds_iff_invariants_hold(values):
    should_pass = (
        len(values) >= 2
        and all(v >= 1 for v in values)
        and math.gcd(*values) == 1
    )
    try:
        gens = validate(values)
    except FrobkitError:
        assert not should_pass
    else:
        assert should_pass
        assert gens.values == tuple(values)


@settings(max_examples=40, deadline=None)
@given(small_coprime_tuples, st.integers(0, 2))
def test_g_star_and_n_star_modulus_independent(values, s):
    gens = validate(values)
    assert len({g_star(gens, s, modulus_index=i) for i in range(gens.k)}) == 1
    assert len({n_star(gens, s, modulus_index=i) for i in range(gens.k)}) == 1


@settings(max_examples=40, deadline=None)
@given(small_coprime_tuples, st.integers(0, 2))
def test_g_star_is_the_last_at_most_s_integer(values, s):
    gens = validate(values)
    star = g_star(gens, s)
    modulus = min(gens.values)
    for x in range(star + 1, star + modulus + 1):
        assert brute_count(x, gens.values) > s
    if star >= 0:
        assert brute_count(star, gens.values) <= s


@settings(max_examples=30, deadline=None)
@given(
    st.integers(2, 12),
    st.integers(2, 6),
    st.lists(st.integers(1, 8), min_size=1, max_size=3),
    st.integers(0, 2),
)
def test_reduction_identities_on_constructed_tuples(pivot, d, tail, s):
    assume(math.gcd(pivot, d) == 1)
    values = [pivot] + [d * v for v in tail]
    assume(math.gcd(*values) == 1)
    gens = validate(values)
    step = reduce_step(gens)
    assume(step is not None)
    assert g_star_via_reduction(step, s) == g_star(gens, s)
    assert n_star_via_reduction(step, s) == n_star(gens, s)
    original = apery_table(gens, s, modulus_index=0).entries
    reduced = apery_table(step.reduced, s, modulus_index=0).entries
    assert sorted(original) == sorted(step.d * e for e in reduced)
