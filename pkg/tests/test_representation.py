import pytest

from dualis import bits
from dualis.errors import RepresentationError
from dualis.fixtures import load
from dualis.logic import filter_system
from dualis.representation import (build_representation, check_base_independence,
                                   check_semilattice_isos, check_representation, closure_base,
                                   s_semilattice)

import oracles as O


def all_pairs():
    """Every logic/algebra pair in the corpus suites whose algebra is an S-algebra."""
    doc = load("corpus")
    out = set()
    for suite in doc.suites.values():
        for lg, names in suite.pairs:
            out.update((lg, n) for n in names
                       if filter_system(doc.logics[lg], doc.algebras[n]).is_s_algebra)
    return sorted(out)


def test_representation_needs_an_s_algebra(corpus):
    with pytest.raises(RepresentationError):
        build_representation(corpus.logics["L_TOP_AND"], corpus.algebras["D2"])


def test_hilbert_two_element_representation(corpus):
    R = build_representation(corpus.logics["L_HIL"], corpus.algebras["H2"])
    assert R.base.family == (0b10,)
    assert R.phi == (0, 1)
    assert R.phi_hat(0) == R.full


def test_m4_representation_matches_sigma(corpus):
    from dualis.order import FinitePoset
    from dualis.semilattice import MeetSemilattice, sigma
    R = build_representation(corpus.logics["L_TOP_AND"], corpus.algebras["M4"])
    M4 = MeetSemilattice.from_poset(FinitePoset.from_pairs(4, [(0, 1), (0, 2), (1, 3), (2, 3)]))
    assert R.phi == sigma(M4).images


def test_join_of_generators_example(corpus):
    L, M4 = corpus.logics["L_TOP_AND"], corpus.algebras["M4"]
    R = build_representation(L, M4)
    fs = filter_system(L, M4)
    ab = 0b0110
    assert fs.fg(ab) >> 0 & 1
    assert R.phi_hat(ab) == 0
    assert bits.is_subset(R.phi_hat(ab), R.phi[0])


def test_semilattice_of_the_representation(corpus):
    M = s_semilattice(corpus.logics["L_TOP_AND"], corpus.algebras["M4"])
    assert M.lattice.size == 4 and M.lattice.is_distributive
    H = s_semilattice(corpus.logics["L_HIL"], corpus.algebras["H2"])
    assert H.members == (0, 1)


def test_empty_generators_and_the_bottom_of_the_semilattice(corpus):
    # Fg({a, b}) is all of M4, so φ̂({a, b}) is the bottom of M(A) and lies below every φ(c)
    L, M4 = corpus.logics["L_TOP_AND"], corpus.algebras["M4"]
    M = s_semilattice(L, M4)
    assert filter_system(L, M4).fg(0b0110) == 0b1111
    assert M.hat(0b0110) == M.lattice.poset.bottom()


def test_base_must_be_a_closure_base(corpus):
    L, M4 = corpus.logics["L_TOP_AND"], corpus.algebras["M4"]
    with pytest.raises(RepresentationError):
        closure_base(L, M4, "custom", family=(0b1010,))
    with pytest.raises(RepresentationError):
        closure_base(L, M4, "custom", family=(0b0110,))


def test_optimal_bijection_sizes(corpus):
    for lg, name, n in (("L_TOP_AND", "M4", 2), ("L_HIL", "H2", 1)):
        M = s_semilattice(corpus.logics[lg], corpus.algebras[name])
        assert len(M.lattice.optimal_filters) == n
        assert len(filter_system(corpus.logics[lg], corpus.algebras[name]).optimal) == n


@pytest.mark.parametrize("lg,name", all_pairs())
def test_reports_are_clean(corpus, lg, name):
    L, A = corpus.logics[lg], corpus.algebras[name]
    for rep in (check_representation(L, A), check_semilattice_isos(L, A), check_base_independence(L, A)):
        assert rep.ok, rep.summary()


@pytest.mark.parametrize("lg,name", [p for p in all_pairs() if load("corpus").algebras[p[1]].size <= 5])
def test_phi_matches_brute_force(corpus, lg, name):
    L = corpus.logics[lg]
    A = filter_system(L, corpus.algebras[name]).algebra
    R = build_representation(L, A)
    ops = sorted(O.to_mask(F) for F in O.optimal_filters(L, A))
    assert list(R.base.family) == ops
    for a in range(A.size):
        assert R.phi[a] == sum(1 << i for i, P in enumerate(ops) if P >> a & 1)
    spec = O.specialization(L, A)
    for a in range(A.size):
        for b in range(A.size):
            assert ((a, b) in spec) == bits.is_subset(R.phi[a], R.phi[b])
    assert O.is_homomorphism(R.embedding, A, R.image)
