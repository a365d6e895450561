import pytest

from dualis.errors import NotCongruential
from dualis.fixtures import load
from dualis.logic import (LogicPresentation, check_filters, filter_system, has_bottom_family,
                          irreducible_s_filters, is_filter_distributive_on, is_s_algebra, is_s_prime,
                          is_strong_s_ideal, optimal_s_filters, s_filters_all, separate_irreducible,
                          separate_optimal, specialization, tarski_quotient)
from dualis.terms import Signature, evaluate, parse_term

import oracles as O
from conftest import masks


@pytest.fixture(scope="module")
def c(corpus):
    return corpus


def test_term_evaluation(c):
    H2, M4 = c.algebras["H2"], c.algebras["M4"]
    imp = parse_term("imp(p,q)", H2.signature)
    assert evaluate(imp, H2, {"p": 0, "q": 0}) == 1
    conj = parse_term("and(p,q)", M4.signature)
    assert evaluate(conj, M4, {"p": 1, "q": 2}) == 0
    assert evaluate(parse_term("top", M4.signature), M4, {}) == 3


def test_filters_examples(c):
    L_HIL, L_TOP = c.logics["L_HIL"], c.logics["L_TOP_AND"]
    assert s_filters_all(L_HIL, c.algebras["H2"]) == masks({1}, {0, 1})
    assert s_filters_all(L_TOP, c.algebras["M4"]) == masks({3}, {1, 3}, {2, 3}, {0, 1, 2, 3})
    tf = load("theorem_free")
    assert 0 in s_filters_all(tf.logics["L_AND"], tf.algebras["C2"])


def test_specialization_and_s_algebras(c):
    L = c.logics["L_TOP_AND"]
    M4 = c.algebras["M4"]
    up = specialization(L, M4)
    assert up == (0b1111, 0b1010, 0b1100, 0b1000)
    assert is_s_algebra(L, M4)
    D2 = c.algebras["D2"]
    assert specialization(L, D2) == (0b11, 0b11)
    assert not is_s_algebra(L, D2)
    q = tarski_quotient(L, D2)
    assert q.algebra.size == 1 and q.projection == (0, 0)
    assert not q.filter_bijection_failures
    assert is_s_algebra(L, c.algebras["T1"])


def test_filter_distributivity(c):
    assert is_filter_distributive_on(c.logics["L_TOP_AND"], c.algebras["M4"])
    assert is_filter_distributive_on(c.logics["L_HIL"], c.algebras["H2"])
    assert not is_filter_distributive_on(c.logics["L_TOP_AND"], c.algebras["M3"])


def test_ideals_and_bottom_families(c):
    L, M4 = c.logics["L_TOP_AND"], c.algebras["M4"]
    assert has_bottom_family(L, M4) == (True, 0b0001)
    assert is_strong_s_ideal(L, M4, 0b0011)
    assert not is_strong_s_ideal(L, M4, 0)


def test_optimal_and_irreducible_examples(c):
    L_TOP, L_HIL = c.logics["L_TOP_AND"], c.logics["L_HIL"]
    assert optimal_s_filters(L_TOP, c.algebras["M4"]) == masks({1, 3}, {2, 3})
    assert optimal_s_filters(L_HIL, c.algebras["H2"]) == masks({1})
    assert irreducible_s_filters(L_TOP, c.algebras["C3"]) == masks({2}, {1, 2})


def test_prime_sets(c):
    L, M4 = c.logics["L_TOP_AND"], c.algebras["M4"]
    assert is_s_prime(L, M4, 0b0111)
    assert not is_s_prime(L, M4, 0b1111)
    assert not is_s_prime(L, M4, 0b0001)


def test_separation(c):
    L, M4 = c.logics["L_TOP_AND"], c.algebras["M4"]
    assert separate_optimal(L, M4, 0b1000, 0b0011) == 0b1100
    assert separate_optimal(L, M4, 0b1010, 0b0001) == 0b1010
    assert separate_optimal(c.logics["L_HIL"], c.algebras["H2"], 0b10, 0b01) == 0b10
    assert separate_irreducible(L, M4, 0b1000, 0b0011) == 0b1100


def test_theorem_free_empty_filter_is_optimal():
    tf = load("theorem_free")
    L, C2 = tf.logics["L_AND"], tf.algebras["C2"]
    assert 0 in optimal_s_filters(L, C2)
    assert not L.has_theorems


def test_non_congruential_quotient_refused():
    from dualis.algebra import FiniteAlgebra
    sig = Signature.of(h=1, f=1)
    L = LogicPresentation.from_text("L_HF", sig, ["p |- h(p)", "h(p) |- p"])
    # h swaps 0 and 1, so they are interderivable, while f separates them
    A = FiniteAlgebra(sig, 3, (("h", (1, 0, 2)), ("f", (2, 0, 2))))
    fs = filter_system(L, A)
    assert fs.principal[0] == fs.principal[1] == 0b011
    assert not fs.is_congruential
    with pytest.raises(NotCongruential):
        tarski_quotient(L, A)


def small_pairs(doc):
    for suite in doc.suites.values():
        for lg, names in suite.pairs:
            for n in names:
                if doc.algebras[n].size <= 5:
                    yield lg, n


@pytest.mark.parametrize("lg,name", sorted(set(small_pairs(load("corpus")))))
def test_filter_machinery_matches_brute_force(corpus, lg, name):
    L = corpus.logics[lg]
    fs = filter_system(L, corpus.algebras[name])
    A = fs.algebra
    as_masks = lambda family: sorted(O.to_mask(s) for s in family)
    assert list(fs.filters) == as_masks(O.filters(L, A))
    for B in range(1 << A.size):
        assert fs.fg(B) == O.to_mask(O.fg(L, A, O.to_set(B)))
    assert sorted(fs.strong_ideals) == as_masks(O.strong_ideals(L, A))
    assert sorted(fs.optimal) == as_masks(O.optimal_filters(L, A))
    assert sorted(fs.irreducible) == as_masks(O.irreducible_filters(L, A))
    assert all(fs.is_s_ideal(I) == O.is_s_ideal(L, A, O.to_set(I)) for I in range(1 << A.size))
    assert check_filters(L, A).ok


def test_theorem_free_matches_brute_force():
    tf = load("theorem_free")
    L, C2 = tf.logics["L_AND"], tf.algebras["C2"]
    fs = filter_system(L, C2)
    assert sorted(fs.optimal) == sorted(O.to_mask(s) for s in O.optimal_filters(L, C2))
