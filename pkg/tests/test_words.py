import pytest

from klmask.errors import LetterOutOfRange, RankMismatch
from klmask.perm import all_perms, identity, length, simple
from klmask.words import (
    bruhat_leq, evaluate, format_word, is_reduced, lower_interval, parse_word,
    some_reduced_word, support,
)

import oracles


@pytest.mark.parametrize("word, n, w", [
    ((), 3, (1, 2, 3)),
    ((2, 3, 1, 2), 4, (3, 4, 1, 2)),
    ((1, 2, 3, 2, 1), 4, (4, 2, 3, 1)),
])
def test_evaluate_examples(word, n, w):
    assert evaluate(word, n) == w == oracles.apply_word(word, n)


def test_evaluate_letter_out_of_range():
    with pytest.raises(LetterOutOfRange):
        evaluate((3,), 3)
    with pytest.raises(LetterOutOfRange):
        evaluate((0,), 3)


@pytest.mark.parametrize("word, n, expected", [
    ((1, 1), 3, False), ((2, 3, 1, 2), 4, True), ((1, 2, 1), 3, True)])
def test_is_reduced_examples(word, n, expected):
    assert is_reduced(word, n) is expected


def test_some_reduced_word_examples():
    assert some_reduced_word(identity(4)) == ()
    assert some_reduced_word((2, 1, 3)) == (1,)
    word = some_reduced_word((3, 2, 1))
    assert len(word) == 3 and evaluate(word, 3) == (3, 2, 1)


def test_support_examples():
    s = support(identity(3))
    assert s.generators == frozenset() and s.connected
    s = support((3, 4, 1, 2))
    assert s.generators == {1, 2, 3} and s.connected
    s = support((2, 1, 4, 3))
    assert s.generators == {1, 3} and not s.connected


def test_bruhat_examples():
    assert bruhat_leq(identity(4), (4, 2, 3, 1))
    assert bruhat_leq(simple(1, 3), (3, 2, 1))
    expected = (3, 4, 1, 2) in oracles.subword_products((1, 2, 3, 2, 1), 4)
    assert expected is False
    assert bruhat_leq((3, 4, 1, 2), (4, 2, 3, 1)) is expected


def test_bruhat_rank_mismatch():
    with pytest.raises(RankMismatch):
        bruhat_leq((1, 2), (1, 2, 3))


def test_word_serialization_round_trip():
    assert format_word((2, 3, 1, 2)) == "2,3,1,2"
    assert parse_word("2,3,1,2") == (2, 3, 1, 2)
    assert parse_word(format_word(())) == ()


@pytest.mark.parametrize("n", range(1, 7))
def test_canonical_word_is_reduced_and_evaluates(n):
    for w in all_perms(n):
        word = some_reduced_word(w)
        assert evaluate(word, n) == w
        assert is_reduced(word, n)
        assert len(word) == oracles.inversions(w)


@pytest.mark.parametrize("n", range(1, 6))
def test_bruhat_matches_subword_enumeration(n):
    for w in all_perms(n):
        below = oracles.subword_products(some_reduced_word(w), n)
        assert lower_interval(w) == below
        for x in all_perms(n):
            leq = bruhat_leq(x, w)
            assert leq == (x in below) == oracles.bruhat_tableau(x, w)
            if leq:
                assert length(x) <= length(w)


@pytest.mark.parametrize("n", range(1, 6))
def test_support_is_word_independent(n):
    for w in all_perms(n):
        gens = support(w).generators
        for word in oracles.reduced_words(w):
            assert set(word) == gens
