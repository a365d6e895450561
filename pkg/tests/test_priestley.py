import pytest
from hypothesis import assume, given, settings, strategies as st

from dualis import bits
from dualis.algebra import FiniteAlgebra
from dualis.errors import GateError, HypothesisFailure, NotVerified
from dualis.fixtures import load
from dualis.logic import filter_system
from dualis.order import FinitePoset, up_sets
from dualis.priestley import (SPriestleySpace, b_structures, box_map, check_dual_morphism,
                              check_dual_space, check_natural_isos, check_xi, dual_morphism,
                              dual_relation, dual_space, identity_morphism, make_morphism,
                              reduced_from_clopen_description, star, t_inverse, t_morphism,
                              verify_space)
from dualis.semilattice import MeetSemilattice
from dualis.terms import Signature


@pytest.fixture(scope="module")
def top_and(corpus):
    return corpus.logics["L_TOP_AND"]


def test_dual_of_m4(corpus, top_and):
    sp = dual_space(top_and, corpus.algebras["M4"])
    assert sp.size == 2 and sp.poset.up == (0b01, 0b10)
    assert sp.sets == (0, 0b01, 0b10, 0b11)
    assert sp.xb == sp.full
    assert sp.labels == ("{a,1}", "{b,1}")


def test_dual_of_h2_carries_the_implication_table(corpus):
    sp = dual_space(corpus.logics["L_HIL"], corpus.algebras["H2"])
    assert sp.size == 1 and sp.sets == (0, 1)
    imp = sp.algebra.table("imp")
    # element i stands for sets[i]: ∅→∅ = X, ∅→X = X, X→∅ = ∅, X→X = X
    assert [sp.sets[v] for v in imp] == [1, 1, 0, 1]


def test_dual_of_trivial_algebra_is_empty(corpus, top_and):
    sp = dual_space(top_and, corpus.algebras["T1"])
    assert sp.size == 0 and sp.sets == (0,)
    assert verify_space(sp).ok and check_xi(sp).ok


def test_gates(corpus, top_and):
    tf = load("theorem_free")
    with pytest.raises(GateError, match="theorems required"):
        dual_space(tf.logics["L_AND"], tf.algebras["C2"])
    with pytest.raises(HypothesisFailure) as info:
        dual_space(top_and, corpus.algebras["M3"])
    assert "filter-distributive" in info.value.failed
    with pytest.raises(HypothesisFailure):
        dual_space(top_and, corpus.algebras["D2"])


def test_empty_member_is_the_bottom(corpus, top_and):
    sp = dual_space(top_and, corpus.algebras["M4"])
    rep = verify_space(sp)
    assert rep.ok
    assert 0 in sp.sets and min(sp.sets) == 0
    assert rep.get("bottom-element-iff-empty-member").passed


def test_corrupted_space_fails_carrier_in_family():
    doc = load("negative")
    from dualis.workbench.suites import space_from_decl
    good = space_from_decl(doc, "DM4")
    assert verify_space(good).ok
    bad = space_from_decl(doc, "BROKEN")
    rep = verify_space(bad)
    assert not rep.get("carrier-in-family").passed
    with pytest.raises(NotVerified):
        b_structures(bad)


def test_xi(corpus, top_and):
    sp = dual_space(top_and, corpus.algebras["M4"])
    assert sp.xi == (0b1010, 0b1100)
    h2 = dual_space(corpus.logics["L_HIL"], corpus.algebras["H2"])
    assert h2.xi == (0b10,)
    assert filter_system(h2.logic, h2.algebra).optimal == (0b10,)
    for s in (sp, h2):
        assert check_xi(s).ok


def test_b_structures(corpus, top_and):
    sp = dual_space(top_and, corpus.algebras["M4"])
    bs = b_structures(sp)
    assert bs.meet_closure == sp.sets
    assert bs.lattice_closure == up_sets(sp.poset)
    assert bs.report.ok
    h2 = b_structures(dual_space(corpus.logics["L_HIL"], corpus.algebras["H2"]))
    assert h2.meet_closure == h2.lattice_closure == (0, 1)


def test_dual_morphisms(corpus, top_and):
    M4, C2 = corpus.algebras["M4"], corpus.algebras["C2"]
    ident = dual_morphism((0, 1, 2, 3), M4, M4, top_and)
    assert ident.relation == dual_space(top_and, M4).poset.up
    f, _, _ = corpus.hom("f")
    R = dual_relation(f, C2, M4, top_and)
    assert R == (0b1, 0b1)
    sp_c2, sp_m4 = dual_space(top_and, C2), dual_space(top_and, M4)
    assert bits.intersect_all((sp_m4.full,), sp_m4.full) == sp_m4.sets[3]
    # the box of R sends φ(1) of C2 to φ(1) of M4
    assert box_map(R, sp_m4, sp_c2)[1] == 3
    assert check_dual_morphism(f, C2, M4, top_and, "f").ok


def test_order_is_the_identity_morphism(corpus, top_and):
    for name in ("C2", "C3", "M4", "CUBE"):
        sp = dual_space(top_and, corpus.algebras[name])
        ident = identity_morphism(sp)
        assert box_map(ident.relation, sp, sp) == tuple(range(len(sp.sets)))


def test_star_composition(corpus, top_and):
    f, C2, M4 = corpus.hom("f")
    g, _, _ = corpus.hom("g")
    Rf, Rg = dual_morphism(f, C2, M4, top_and), dual_morphism(g, M4, M4, top_and)
    gf = tuple(g[f[a]] for a in range(C2.size))
    assert star(Rf, Rg).relation == dual_relation(gf, C2, M4, top_and)
    order_m4 = identity_morphism(dual_space(top_and, M4))
    assert star(Rf, order_m4).relation == Rf.relation
    assert star(identity_morphism(dual_space(top_and, C2)), Rf).relation == Rf.relation
    swap, _, _ = corpus.hom("swap")
    Rs = dual_morphism(swap, M4, M4, top_and)
    assert star(Rf, star(Rg, Rs)).relation == star(star(Rf, Rg), Rs).relation


def test_t_morphism_of_h2_dual(corpus):
    sp = dual_space(corpus.logics["L_HIL"], corpus.algebras["H2"])
    T = t_morphism(sp)
    assert T.relation == (0b1,)
    assert box_map(T.relation, sp, T.target) == (0, 1)
    back = t_inverse(sp)
    assert star(back, T).relation == sp.poset.up


def test_natural_isomorphisms_over_the_corpus(corpus):
    suite = corpus.suites["full-duality"]
    homs = dict(suite.homs)
    for lg, names in suite.pairs:
        L = corpus.logics[lg]
        algebras = [corpus.algebras[n] for n in names]
        hs = [(n,) + corpus.hom(n) for n in homs.get(lg, ())]
        rep = check_natural_isos(L, algebras, hs)
        assert rep.ok, rep.summary()
        for A in algebras:
            assert check_dual_space(L, A).ok


# random meet-semilattices read as algebras of the top-and logic

@st.composite
def and_algebras(draw, universe=4):
    full = bits.full(universe)
    family = draw(st.lists(st.integers(0, full), max_size=5))
    members = bits.intersection_closure(tuple(family) + (full,))
    assume(len(members) <= 8)
    M = MeetSemilattice.from_sets(members, full)
    sig = Signature.of(**{"and": 2, "top": 0})
    table = tuple(M.meet[a][b] for a in range(M.size) for b in range(M.size))
    return FiniteAlgebra(sig, M.size, (("and", table), ("top", (M.top,))), name="R")


@settings(max_examples=60, deadline=None)
@given(and_algebras())
def test_every_filter_distributive_algebra_dualizes(top_and, A):
    fs = filter_system(top_and, A)
    if not fs.is_filter_distributive:
        with pytest.raises(HypothesisFailure):
            dual_space(top_and, A)
        return
    sp = dual_space(top_and, A)
    assert verify_space(sp).ok
    assert check_xi(sp).ok
    assert b_structures(sp).report.ok
    ident = tuple(range(A.size))
    assert check_dual_morphism(ident, A, A, top_and).ok


@st.composite
def posets_with_families(draw, max_size=5):
    n = draw(st.integers(1, max_size))
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=6))
    P = FinitePoset.from_pairs(n, [(min(a, b), max(a, b)) for a, b in pairs])
    ups = up_sets(P)
    extra = draw(st.lists(st.sampled_from(ups), max_size=4))
    generating = draw(st.booleans())
    sets = set(extra) | {P.full}
    if generating:
        sets |= set(P.up)
    return P, tuple(sorted(sets)), generating


@settings(max_examples=150, deadline=None)
@given(posets_with_families())
def test_clopen_description_forces_the_order(data):
    P, sets, generating = data
    verdict = reduced_from_clopen_description(P, sets)
    assert verdict is not False
    if generating:
        assert verdict is True


def test_hand_written_space_passes_the_duality(corpus, top_and):
    doc = load("negative")
    from dualis.workbench.suites import space_from_decl
    sp = space_from_decl(doc, "DM4")
    rep = check_natural_isos(top_and, [], spaces=[sp])
    assert rep.ok, rep.summary()
