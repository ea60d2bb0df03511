import random

import pytest
from hypothesis import given, settings, strategies as st

from klmask.cluster import ClusterDecomposition, contract
from klmask.errors import NotMCHexagonAvoiding
from klmask.hecke import (
    ONE, Q, V, ZERO, HeckeElement, LaurentPoly, T, bar_involution, cprime,
    cprime_product, h_from_sums, h_of_masks, is_bar_invariant, t_multiply_right,
)
from klmask.kl import kl_recursion
from klmask.mask import enumerate_masks, mask_sum
from klmask.perm import HEXAGON, all_perms, classify, identity, length, simple
from klmask.words import bruhat_leq, some_reduced_word

S1 = simple(1, 3)
Q_INV = LaurentPoly({-2: 1})


def poly_strategy():
    return st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=4).map(LaurentPoly)


# --- Laurent polynomials ----------------------------------------------------

def test_poly_examples():
    assert Q.bar() == Q_INV
    assert (ONE + Q) * ONE == ONE + Q
    assert str(ONE + Q) == "1 + q"
    assert str(LaurentPoly({-3: 1})) == "q^{-3/2}"
    assert str(Q * Q) == "q^2"
    assert str(ZERO) == "0"
    assert V * V == Q


@settings(max_examples=80, deadline=None)
@given(poly_strategy(), poly_strategy(), poly_strategy())
def test_poly_ring_laws(a, b, c):
    assert a.bar().bar() == a
    assert (a + b).bar() == a.bar() + b.bar()
    assert (a * b).bar() == a.bar() * b.bar()
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert LaurentPoly.from_json(a.to_json()) == a
    assert all(c != 0 for _, c in a.items())


def test_q_coefficients():
    p = LaurentPoly.from_q([1, 0, 2])
    assert p.is_q_polynomial() and p.q_coefficients() == [1, 0, 2] and p.q_degree() == 2
    assert not LaurentPoly({1: 1}).is_q_polynomial()


# --- Hecke algebra ----------------------------------------------------------

def test_quadratic_relation():
    h = t_multiply_right(T(S1), 1)
    assert h == HeckeElement(3, {S1: Q - ONE, identity(3): Q})


def test_length_increasing_products():
    assert t_multiply_right(T(identity(3)), 2) == T(simple(2, 3))
    assert t_multiply_right(T(S1), 2) == T((2, 3, 1))


def test_bar_examples():
    e = identity(3)
    assert bar_involution(T(e)) == T(e)
    expected = HeckeElement(3, {S1: Q_INV, e: Q_INV - ONE})
    assert bar_involution(T(S1)) == expected
    assert is_bar_invariant(T(e))
    assert not is_bar_invariant(T(S1))


def test_bar_is_inverse_of_generator():
    # T_s * bar(T_s) = 1
    prod = HeckeElement(3, {})
    for x, c in bar_involution(T(S1)).items():
        prod = prod + t_multiply_right(T(x), 1).scale(c)
    assert prod == T(identity(3))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.permutations([1, 2, 3, 4]).map(tuple), poly_strategy()), max_size=4))
def test_bar_is_an_involution_on_s4(terms):
    h = HeckeElement(4, {})
    for x, c in terms:
        h = h + HeckeElement(4, {x: c})
    assert bar_involution(bar_involution(h)) == h


def test_h_of_masks_examples():
    d = ClusterDecomposition(2, (1,), ())
    c = h_of_masks(d, enumerate_masks(d, "all"))
    v_inv = LaurentPoly({-1: 1})
    assert c == HeckeElement(2, {(1, 2): v_inv, (2, 1): v_inv})
    assert c == cprime((2, 1))
    empty = ClusterDecomposition(3, (), ())
    assert h_of_masks(empty, enumerate_masks(empty, "all")) == T(identity(3))
    d = contract((3, 2, 1))
    assert is_bar_invariant(h_of_masks(d, enumerate_masks(d)))


def test_cprime_examples():
    assert cprime(identity(4)) == T(identity(4))
    w0 = (3, 2, 1)
    coef = LaurentPoly({-3: 1})
    assert cprime(w0) == HeckeElement(3, {x: coef for x in all_perms(3)})
    assert is_bar_invariant(cprime((4, 2, 3, 1)))
    with pytest.raises(NotMCHexagonAvoiding):
        cprime((4, 3, 2, 1))
    with pytest.raises(NotMCHexagonAvoiding):
        cprime(HEXAGON)


def test_h_from_sums_matches_explicit_stream():
    for w in all_perms(5):
        if not classify(w).maximally_clustered:
            continue
        d = contract(w)
        explicit = h_of_masks(d, enumerate_masks(d))
        assert explicit == h_from_sums(mask_sum(d.word, d.n, d.central_starts), d.n, len(d.word))
        assert explicit == cprime(w)


def test_full_mask_set_is_product_of_rank_one_elements():
    rng = random.Random(3)
    words = [some_reduced_word(w) for w in all_perms(4)]
    words += [some_reduced_word(tuple(rng.sample(range(1, 6), 5))) for _ in range(20)]
    words += [(1, 2, 1), (2, 1, 3, 2, 4, 3, 1), (3, 2, 4, 3, 5, 4, 1, 2, 1, 3)]
    for word in words:
        assert len(word) <= 10
        n = max(word, default=1) + 1
        d = ClusterDecomposition(n, word, ())
        assert h_of_masks(d, enumerate_masks(d, "all")) == cprime_product(word, n)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_cprime_unitriangular_with_degree_bound(n):
    for w in all_perms(n):
        if not classify(w).mc_hexagon_avoiding:
            continue
        lw = length(w)
        c = cprime(w)
        assert c.coefficient(w) == LaurentPoly({-lw: 1})
        for x, coef in c.items():
            assert bruhat_leq(x, w)
            p = coef.shift(lw)
            assert p.is_q_polynomial()
            if x != w:
                assert 2 * p.q_degree() <= lw - length(x) - 1


def test_cprime_matches_recursion_coefficients():
    for w in all_perms(4):
        if not classify(w).mc_hexagon_avoiding:
            continue
        lw = length(w)
        c = cprime(w)
        for x in all_perms(4):
            assert c.coefficient(x) == kl_recursion(x, w).shift(-lw)
