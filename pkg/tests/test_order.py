import pytest
from hypothesis import given, settings, strategies as st

from dualis import bits
from dualis.errors import NotAPartialOrder
from dualis.order import (FinitePoset, down_closure, frink_closure, frink_ideal_generate, frink_ideals,
                          is_down_directed, is_frink_ideal, is_up_directed, max_elements,
                          min_elements, order_filters, order_ideals, up_closure, up_sets)

import oracles as O
from conftest import masks

C2 = FinitePoset.chain(2)
C3 = FinitePoset.chain(3)          # 0 < m < 1 as 0 < 1 < 2
M4 = FinitePoset.from_pairs(4, [(0, 1), (0, 2), (1, 3), (2, 3)])   # 0, a, b, 1
EMPTY = FinitePoset(0, ())


def test_construction_rejects_non_orders():
    with pytest.raises(NotAPartialOrder):
        FinitePoset(2, (0b11, 0b11))
    with pytest.raises(NotAPartialOrder):
        FinitePoset(3, (0b011, 0b110, 0b100))
    with pytest.raises(NotAPartialOrder):
        FinitePoset(1, (0,))


def test_up_closure_examples():
    assert up_closure(C3, 0b010) == 0b110
    assert up_closure(M4, 0) == 0
    assert up_closure(M4, 0b0001) == 0b1111
    assert down_closure(M4, 0b0010) == 0b0011


def test_order_ideals_and_filters():
    assert order_ideals(C3) == masks({0}, {0, 1}, {0, 1, 2})
    assert order_filters(M4) == masks({3}, {1, 3}, {2, 3}, {0, 1, 2, 3})
    assert order_filters(EMPTY) == ()


def test_frink_ideals_on_m4():
    assert not is_frink_ideal(M4, 0b0111)
    assert is_frink_ideal(M4, 0b0011)
    assert frink_ideal_generate(M4, 0) == 0b0001
    assert frink_ideal_generate(M4, 0b0010) == 0b0011
    assert frink_ideal_generate(C2, 0b10) == 0b11


def test_empty_set_is_frink_ideal_iff_no_bottom():
    assert is_frink_ideal(FinitePoset.antichain(2), 0)
    assert not is_frink_ideal(M4, 0)


def test_maximal_and_directed():
    assert max_elements(M4, 0b0111) == 0b0110
    assert min_elements(M4, 0b1110) == 0b0110
    assert not is_up_directed(M4, 0b0110)
    assert is_up_directed(C3, 0b011)
    assert is_up_directed(M4, 0)
    assert not is_down_directed(M4, 0b0110)


def test_covers_are_the_transitive_reduction():
    assert sorted(M4.covers()) == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert C3.covers() == [(0, 1), (1, 2)]


def test_poset_counts_match_brute_force():
    from dualis.sweeps import labeled_posets
    for n in range(5):
        assert sum(1 for _ in labeled_posets(n)) == O.count_posets(n)


@st.composite
def posets(draw, max_size=5):
    n = draw(st.integers(0, max_size))
    pairs = draw(st.lists(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))),
                          max_size=8))
    # orient every pair upwards by index so the closure stays antisymmetric
    return FinitePoset.from_pairs(n, [(min(a, b), max(a, b)) for a, b in pairs if n])


@settings(max_examples=150, deadline=None)
@given(posets(), st.data())
def test_frink_fast_path_agrees_with_literal_definition(P, data):
    B = data.draw(st.integers(0, bits.full(P.size)))
    assert frink_closure(P, B) == frink_ideal_generate(P, B)
    rel = {(a, b) for a in range(P.size) for b in range(P.size) if P.leq(a, b)}
    assert is_frink_ideal(P, B) == O.is_frink_ideal(P.size, rel, O.to_set(B))
    assert (B in frink_ideals(P)) == is_frink_ideal(P, B)


@settings(max_examples=150, deadline=None)
@given(posets(), st.data())
def test_up_closure_is_a_closure_operator(P, data):
    U = data.draw(st.integers(0, bits.full(P.size)))
    V = data.draw(st.integers(0, bits.full(P.size)))
    assert bits.is_subset(U, up_closure(P, U))
    assert up_closure(P, up_closure(P, U)) == up_closure(P, U)
    assert up_closure(P, U | V) == up_closure(P, U) | up_closure(P, V)
    assert (up_closure(P, U) in up_sets(P))
    complement = P.full & ~up_closure(P, U)
    assert down_closure(P, complement) == complement
