from itertools import product

import pytest

from dualis import bits
from dualis.fixtures import load
from dualis.priestley import dual_morphism, dual_space
from dualis.properties import (PropertyWitness, admissible_up_sets, arrow, check_pc, check_pdi,
                               check_pdi_single_dual, check_pie, check_uddt, quotient_transfer_check,
                               witness)
from dualis.terms import parse_term

import oracles as O


@pytest.fixture(scope="module")
def neg():
    return load("negative")


def homs(corpus, *names):
    return [(n,) + corpus.hom(n) for n in names]


# witnesses

def test_witness_normalisation(corpus):
    L_POS = corpus.logics["L_POS"]
    w = witness(L_POS, "PDI")
    assert w.tag == "PDI_single" and str(w.term) == "or(p,q)"
    assert witness(corpus.logics["L_HIL"], "PC") is None
    assert witness(L_POS, "PC", "and(q,p)").term == parse_term("and(q,p)", L_POS.signature)
    multi = witness(L_POS, "PDI", ["or(p,q)", "or(q,p)"])
    assert multi.tag == "PDI" and len(multi.terms) == 2


def test_witness_validation(corpus):
    sig = corpus.logics["L_POS"].signature
    with pytest.raises(ValueError):
        PropertyWitness("PC", (parse_term("and(p,r)", sig),))
    with pytest.raises(ValueError):
        PropertyWitness("PC", ())
    with pytest.raises(ValueError):
        PropertyWitness("XYZ", (parse_term("top", sig),))


# conjunction

@pytest.mark.parametrize("name", ["C2", "C3", "M4", "CUBE", "T1"])
def test_conjunction_on_top_and(corpus, name):
    assert check_pc(corpus.logics["L_TOP_AND"], None, corpus.algebras[name]).ok


def test_conjunction_image_is_every_admissible_up_set(corpus):
    sp = dual_space(corpus.logics["L_TOP_AND"], corpus.algebras["M4"])
    assert admissible_up_sets(sp) == (0, 1, 2, 3) == tuple(sorted(sp.sets))


def test_fake_conjunction_fails_at_zero_zero(neg):
    rep = check_pc(neg.logics["L_FAKE_IMP"], None, neg.algebras["H2"])
    assert rep.get("pc-transfer").failures[0] == {"a": "0", "b": "0"}


def test_conjunction_transfer_matches_brute_force(corpus, neg):
    cases = [(corpus, "L_TOP_AND", n) for n in ("C2", "C3", "M4")] + [(neg, "L_FAKE_IMP", "H2")]
    for doc, lg, name in cases:
        L, A = doc.logics[lg], doc.algebras[name]
        t = L.witness("pc")[0]
        brute = all(O.fg(L, A, X | {O.evaluate(t, A, {"p": a, "q": b})}) == O.fg(L, A, X | {a, b})
                    for X in O.subsets(range(A.size)) for a, b in product(range(A.size), repeat=2))
        assert check_pc(L, None, A).get("pc-transfer").passed == brute


# disjunction

def test_disjunction_on_positive_m4(corpus):
    L, M4 = corpus.logics["L_POS"], corpus.algebras["M4L"]
    rep = check_pdi(L, None, M4, homs(corpus, "id_M4L", "fL", "pL"))
    assert rep.ok, rep.summary()
    sp = dual_space(L, M4)
    assert sp.size == 2 and sp.xb == sp.full
    a, b, one = 1, 2, 3
    assert sp.sets[a] | sp.sets[b] == sp.sets[M4.apply("or", a, b)] == sp.sets[one]


def test_fake_disjunction_fails_at_documented_pairs(neg):
    rep = check_pdi(neg.logics["L_FAKE_AND"], None, neg.algebras["M4"])
    fails = rep.get("pdi-transfer").failures
    assert fails[0] == {"X": [], "a": "0", "b": "a"}
    assert {"X": [], "a": "a", "b": "b"} in fails


def test_disjunction_transfer_matches_brute_force(corpus, neg):
    for doc, lg, name in ((corpus, "L_POS", "M4L"), (corpus, "L_POS", "C2L"), (neg, "L_FAKE_AND", "M4")):
        L, A = doc.logics[lg], doc.algebras[name]
        t = L.witness("pdi")[0]
        brute = all(O.fg(L, A, X | {O.evaluate(t, A, {"p": a, "q": b})}) ==
                    O.fg(L, A, X | {a}) & O.fg(L, A, X | {b})
                    for X in O.subsets(range(A.size)) for a, b in product(range(A.size), repeat=2))
        assert check_pdi(L, None, A).get("pdi-transfer").passed == brute


def test_union_closure_on_duals(corpus):
    L = corpus.logics["L_POS"]
    sp = dual_space(L, corpus.algebras["M4L"])
    ms = [dual_morphism(h, A1, A2, L) for _, h, A1, A2 in homs(corpus, "id_M4L", "fL", "pL")]
    assert check_pdi_single_dual(sp, ms).ok
    assert check_pdi_single_dual(dual_space(corpus.logics["L_HIL"], corpus.algebras["H2"])).ok


def test_union_closure_negative_control(corpus):
    sp = dual_space(corpus.logics["L_HIL"], corpus.algebras["H5"])
    rep = check_pdi_single_dual(sp)
    fail = rep.get("union-closed").failures[0]
    assert (fail["U"], fail["V"]) == ("a", "b")
    U, V = sp.sets[0], sp.sets[1]
    assert U | V not in sp.sets


def test_cube_is_union_closed(corpus):
    # the image of a finite distributive lattice is closed under unions
    sp = dual_space(corpus.logics["L_TOP_AND"], corpus.algebras["CUBE"])
    assert all(U | V in sp.sets for U in sp.sets for V in sp.sets)


# deduction-detachment

@pytest.mark.parametrize("lg,name", [("L_HIL", "H2"), ("L_HIL", "G3"), ("L_HIL", "H5"), ("L_HEY", "C3H")])
def test_deduction_detachment(corpus, lg, name):
    rep = check_uddt(corpus.logics[lg], None, corpus.algebras[name])
    assert rep.ok, rep.summary()


def test_arrow_on_the_three_chain(corpus):
    L, C3H = corpus.logics["L_HEY"], corpus.algebras["C3H"]
    sp = dual_space(L, C3H)
    zero, m, one = 0, 1, 2
    phi = sp.sets
    assert arrow(sp, phi[m], phi[zero]) == 0 == phi[C3H.apply("imp", m, zero)]
    up_m = sp.labels.index("{m,1}")
    assert arrow(sp, phi[one], phi[m]) == 1 << up_m == phi[C3H.apply("imp", one, m)]


def test_fake_deduction_detachment_fails(neg):
    rep = check_uddt(neg.logics["L_FAKE_AND"], None, neg.algebras["M4"])
    assert not rep.get("ddt-transfer").passed


def test_deduction_transfer_matches_brute_force(corpus):
    L, A = corpus.logics["L_HIL"], corpus.algebras["G3"]
    t = L.witness("ddt")[0]
    brute = all((b in O.fg(L, A, X | {a})) == (O.evaluate(t, A, {"p": a, "q": b}) in O.fg(L, A, X))
                for X in O.subsets(range(A.size)) for a, b in product(range(A.size), repeat=2))
    assert brute and check_uddt(L, None, A).get("ddt-transfer").passed


# inconsistent element

def test_inconsistent_element(corpus):
    L = corpus.logics["L_BOT"]
    C3B = corpus.algebras["C3B"]
    assert check_pie(L, None, C3B).ok
    sp = dual_space(L, C3B)
    assert sp.sets[0] == 0 and 0 in sp.sets
    assert check_pie(L, None, corpus.algebras["T1H"]).ok


def test_inconsistent_element_without_constants(corpus):
    rep = check_pie(corpus.logics["L_HIL"], None, corpus.algebras["H2"])
    assert not rep.get("pie-transfer").passed
    assert rep.get("bottom-is-empty").passed and rep.get("empty-member").passed


# quotients

def test_quotient_transfer(corpus):
    L = corpus.logics["L_TOP_AND"]
    algebras = [corpus.algebras[n] for n in ("C2", "M4", "D2", "T1")]
    rep = quotient_transfer_check(L, algebras, homs(corpus, "c", "f", "id_M4"))
    assert rep.ok, rep.summary()
    assert rep.get("quotient-square-commutes").instances > 0


def test_degenerate_quotient_filters(corpus):
    from dualis.logic import filter_system, tarski_quotient
    L, D2 = corpus.logics["L_TOP_AND"], corpus.algebras["D2"]
    assert filter_system(L, D2).filters == (0b11,)
    q = tarski_quotient(L, D2)
    assert filter_system(L, q.algebra).filters == (0b1,)
