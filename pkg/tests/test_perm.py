import pytest
from hypothesis import given, settings, strategies as st

from klmask.errors import InvalidPermutation, RankCapExceeded, RankMismatch
from klmask.perm import (
    HEXAGON, HEXAGON_PATTERNS, MC_PATTERNS, all_perms, check, classify, compose,
    contains_pattern, count_321, identity, inverse, length, right_descents,
    simple, times_simple,
)

import oracles


def perm_strategy(max_n=8):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(tuple))


def test_compose_examples():
    assert compose((2, 1, 3), identity(3)) == (2, 1, 3)
    assert compose((2, 1, 3), simple(2, 3)) == (2, 3, 1)
    w = identity(4)
    for i in (2, 3, 1, 2):
        w = compose(w, simple(i, 4))
    assert w == (3, 4, 1, 2)


def test_compose_rank_mismatch():
    with pytest.raises(RankMismatch):
        compose((1, 2), (1, 2, 3))


@pytest.mark.parametrize("w, ell", [((1, 2, 3), 0), ((3, 4, 1, 2), 4), ((4, 2, 3, 1), 5)])
def test_length_examples(w, ell):
    assert length(w) == ell == oracles.inversions(w)


@pytest.mark.parametrize("w, desc", [((1, 2, 3), set()), ((3, 2, 1), {1, 2}),
                                     ((3, 4, 1, 2), {2})])
def test_right_descents_examples(w, desc):
    assert right_descents(w) == desc


def test_contains_pattern_examples():
    assert contains_pattern((5, 3, 2, 4, 1), (3, 2, 1)) is not None
    assert contains_pattern((3, 2, 1, 4), (3, 2, 1, 4)) == (1, 2, 3, 4)
    assert contains_pattern((3, 4, 1, 2), (3, 2, 1)) is None


def test_contains_pattern_rank_cap():
    with pytest.raises(RankCapExceeded):
        contains_pattern(identity(13), (1,))


@pytest.mark.parametrize("w, n321", [((1, 2, 3, 4), 0), ((4, 2, 3, 1), 2), ((4, 3, 2, 1), 4)])
def test_count_321_examples(w, n321):
    assert count_321(w) == n321


def test_classify_examples():
    c = classify((4, 2, 3, 1))
    assert c.maximally_clustered and not c.freely_braided and c.n321 == 2
    c = classify(identity(5))
    assert all([c.fully_commutative, c.maximally_clustered, c.freely_braided,
                c.hexagon_pattern_free, c.mc_hexagon_avoiding]) and c.n321 == 0
    c = classify(HEXAGON)
    assert c.maximally_clustered and not c.hexagon_pattern_free
    assert c.fully_commutative and not c.mc_hexagon_avoiding


def test_check_rejects_bad_input():
    with pytest.raises(InvalidPermutation):
        check((1, 1, 2))
    with pytest.raises(InvalidPermutation):
        check((0, 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_contains_pattern_matches_brute_force(n):
    patterns = list(MC_PATTERNS) + [(3, 2, 1), (2, 1), (1, 3, 2), (4, 2, 3, 1)]
    for w in all_perms(n):
        for p in patterns:
            if len(p) > n:
                continue
            found = oracles.pattern_instances(w, p)
            assert contains_pattern(w, p) == (found[0] if found else None)


@settings(max_examples=60, deadline=None)
@given(perm_strategy(8), st.sampled_from([(3, 2, 1), (4, 2, 3, 1), (3, 4, 2, 1), (2, 4, 1, 3)]))
def test_contains_pattern_oracle_random(w, p):
    found = oracles.pattern_instances(w, p)
    assert contains_pattern(w, p) == (found[0] if found else None)


def test_hexagon_patterns_are_the_expected_four():
    assert set(HEXAGON_PATTERNS) == {(4, 6, 7, 1, 8, 2, 3, 5), (4, 6, 7, 8, 1, 2, 3, 5),
                                     (5, 6, 7, 1, 8, 2, 3, 4), (5, 6, 7, 8, 1, 2, 3, 4)}


@pytest.mark.parametrize("n", range(1, 8))
def test_classification_invariants(n):
    for w in all_perms(n):
        c = classify(w)
        if c.fully_commutative or c.freely_braided:
            assert c.maximally_clustered
        assert c.fully_commutative == (c.n321 == 0)
        assert c.mc_hexagon_avoiding == c.maximally_clustered     # rank < 8
        assert (c.n321 == 0) == (contains_pattern(w, (3, 2, 1)) is None)


@settings(max_examples=100, deadline=None)
@given(perm_strategy(9), st.data())
def test_length_and_simple_multiplication(w, data):
    assert length(w) == oracles.inversions(w)
    assert inverse(inverse(w)) == w
    assert compose(w, inverse(w)) == identity(len(w))
    if len(w) > 1:
        i = data.draw(st.integers(1, len(w) - 1))
        ws = times_simple(w, i)
        assert ws == compose(w, simple(i, len(w)))
        assert abs(length(ws) - length(w)) == 1
        assert (length(ws) < length(w)) == (i in right_descents(w))
