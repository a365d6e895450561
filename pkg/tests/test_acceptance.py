"""Acceptance criteria 1-9.

Each test prints one line, ``criterion N: PASS|FAIL ...`` with its runtime, and
then asserts. Run under pytest, or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import io
import json
import sys
import time
from contextlib import contextmanager, redirect_stderr, redirect_stdout
from pathlib import Path

import pytest


sys.path.insert(0, str(Path(__file__).parent))

import oracles as O  # noqa: E402
from dualis.fixtures import load  # noqa: E402
from dualis.logic import filter_system  # noqa: E402
from dualis.priestley import b_structures, check_natural_isos, check_xi, dual_space, verify_space  # noqa: E402
from dualis.properties import (arrow, check_pc, check_pdi, check_pdi_single_dual, check_pie,  # noqa: E402
                               check_uddt)
from dualis.representation import check_semilattice_isos, check_representation  # noqa: E402
from dualis.sweeps import characterization_sweep, envelope_sweep  # noqa: E402
from dualis.workbench.cli import main  # noqa: E402
from dualis.workbench.document import parse_document, print_document  # noqa: E402
from dualis.workbench.export import export_dot, export_json  # noqa: E402

SEMILATTICES_UP_TO_5 = 425


def quiet_main(argv) -> int:
    """Run the CLI with its output swallowed, so each criterion stays one line."""
    sink = io.StringIO()
    with redirect_stdout(sink), redirect_stderr(sink):
        return main(argv)


DISTRIBUTIVE_UP_TO_5 = 285


class Outcome:
    def __init__(self):
        self.problems: list[str] = []
        self.note = ""

    def require(self, ok: bool, what: str) -> None:
        if not ok:
            self.problems.append(what)


_capsys = None


@pytest.fixture(autouse=True)
def _uncaptured(capsys):
    """Let the one-line verdicts through pytest's output capture."""
    global _capsys
    _capsys = capsys
    yield
    _capsys = None


@contextmanager
def criterion(number: int, title: str, budget: float):
    out = Outcome()
    start = time.perf_counter()
    try:
        yield out
    except Exception as exc:   # report, then let the assertion below fail the test
        out.problems.append(f"{type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - start
    out.require(elapsed < budget, f"took {elapsed:.1f}s, budget {budget:.0f}s")
    status = "PASS" if not out.problems else "FAIL"
    detail = "; ".join(out.problems) if out.problems else out.note
    line = f"criterion {number}: {status} {title} [{elapsed:.2f}s] {detail}".rstrip()
    if _capsys is not None:
        with _capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    assert not out.problems, line


def _corpus_pairs(names_by_logic):
    doc = load("corpus")
    return [(doc.logics[lg], doc.algebras[n]) for lg, names in names_by_logic for n in names]


def _every_s_algebra_pair():
    doc = load("corpus")
    out = []
    for suite in doc.suites.values():
        for lg, names in suite.pairs:
            for n in names:
                L, A = doc.logics[lg], doc.algebras[n]
                if filter_system(L, A).is_s_algebra and (L, A) not in out:
                    out.append((L, A))
    return out


def test_criterion_1_characterization_sweep():
    with criterion(1, "semilattice characterization sweep", 60) as out:
        sweep = characterization_sweep(5)
        out.require(sweep.semilattices == SEMILATTICES_UP_TO_5,
                    f"{sweep.semilattices} semilattices, expected {SEMILATTICES_UP_TO_5}")
        out.require(sweep.distributive == DISTRIBUTIVE_UP_TO_5,
                    f"{sweep.distributive} distributive, expected {DISTRIBUTIVE_UP_TO_5}")
        out.require(sum(O.count_meet_semilattices_with_top(n) for n in range(1, 5)) == 45,
                    "brute-force count on at most 4 elements")
        out.require(sweep.report.ok, sweep.report.summary())
        out.note = f"{sweep.semilattices} semilattices, {sweep.distributive} distributive, " \
                   f"{sweep.report.instances} instances"


def test_criterion_2_envelope():
    with criterion(2, "distributive envelope universality", 60) as out:
        sweep = envelope_sweep(5, max_len=3)
        out.require(sweep.distributive == DISTRIBUTIVE_UP_TO_5, "distributive count")
        out.require(sweep.report.ok, sweep.report.summary())
        out.note = f"{sweep.report.instances} instances"


CROSS_VALIDATION = (("L_TOP_AND", ("C2", "C3", "M4")), ("L_HIL", ("H2", "G3")), ("L_POS", ("M4L",)),
                    ("L_HEY", ("C3H",)), ("L_BOT", ("C3B",)))


def test_criterion_3_two_routes():
    with criterion(3, "optimal/irreducible routes coincide", 30) as out:
        for L, A in _corpus_pairs(CROSS_VALIDATION):
            routes = filter_system(L, A).routes
            out.require(routes.hypotheses_hold, f"{L.name}/{A.name}: hypotheses")
            out.require(routes.agree, f"{L.name}/{A.name}: routes differ")
            B = filter_system(L, A).algebra
            out.require(sorted(routes.optimal_by_definition) ==
                        sorted(O.to_mask(F) for F in O.optimal_filters(L, B)),
                        f"{L.name}/{A.name}: brute-force optimal filters")
        out.note = f"{len(_corpus_pairs(CROSS_VALIDATION))} fixtures"


ISO_CHECKS = ("optimal-filter-transfer", "optimal-filter-isomorphism",
              "filters-to-semilattice-filters", "semilattice-filters-to-filters",
              "filter-lattice-isomorphism")


def test_criterion_4_representation_reports():
    with criterion(4, "representation and semilattice reports", 30) as out:
        pairs = _every_s_algebra_pair()
        exercised = dict.fromkeys(ISO_CHECKS, 0)
        for L, A in pairs:
            r3, r4 = check_representation(L, A), check_semilattice_isos(L, A)
            out.require(r3.ok, r3.summary())
            out.require(r4.ok, r4.summary())
            distributive = filter_system(L, A).is_filter_distributive
            for cid in ISO_CHECKS:
                c = r4.get(cid)
                exercised[cid] += c.instances
                out.require(not (distributive and c.skipped), f"{L.name}/{A.name}: {cid} skipped")
        for cid, n in exercised.items():
            out.require(n > 0, f"{cid} never exercised")
        out.note = f"{len(pairs)} fixtures"


def test_criterion_5_space_axioms():
    with criterion(5, "space axioms on every dual", 30) as out:
        duals = []
        for L, A in _every_s_algebra_pair():
            if L.has_theorems and filter_system(L, A).is_filter_distributive:
                duals.append(dual_space(L, A))
        out.require(any(sp.size == 0 for sp in duals), "the empty dual of a trivial algebra")
        for sp in duals:
            rep = verify_space(sp)
            out.require(rep.ok, rep.summary())
            for cid in ("bottom-element-iff-empty-member", "bottom-family-iff-empty-meet"):
                out.require(rep.get(cid).passed and rep.get(cid).instances == 1, f"{sp.name}: {cid}")
            out.require(check_xi(sp).ok, f"{sp.name}: xi")
            out.require(b_structures(sp).report.ok, f"{sp.name}: closures of B")
        out.note = f"{len(duals)} duals"


def test_criterion_6_category_laws():
    with criterion(6, "category laws and natural isomorphisms", 30) as out:
        doc = load("corpus")
        suite = doc.suites["full-duality"]
        homs_by_logic = dict(suite.homs)
        total = 0
        for lg, names in suite.pairs:
            hs = [(n,) + doc.hom(n) for n in homs_by_logic.get(lg, ())]
            total += len(hs)
            rep = check_natural_isos(doc.logics[lg], [doc.algebras[n] for n in names], hs)
            out.require(rep.ok, rep.summary())
            if lg == "L_TOP_AND":
                for cid in ("identity-dualizes-to-order", "composition-dualizes-to-star",
                            "star-associative", "star-identity-laws", "phi-naturality",
                            "xi-naturality"):
                    out.require(rep.get(cid).instances > 0, f"{cid} never exercised")
        out.require(total >= 6, f"only {total} homomorphisms")
        out.note = f"{total} homomorphisms"


def test_criterion_7_property_ladder():
    with criterion(7, "conjunction/disjunction/deduction/inconsistency ladder", 60) as out:
        doc, neg = load("corpus"), load("negative")
        L_TOP, L_POS, L_HIL = doc.logics["L_TOP_AND"], doc.logics["L_POS"], doc.logics["L_HIL"]
        L_HEY, L_BOT = doc.logics["L_HEY"], doc.logics["L_BOT"]
        for name in ("C2", "C3", "M4", "CUBE", "T1"):
            rep = check_pc(L_TOP, None, doc.algebras[name])
            out.require(rep.ok, rep.summary())
        M4L = doc.algebras["M4L"]
        homs = [(n,) + doc.hom(n) for n in ("id_M4L", "fL", "pL")]
        rep = check_pdi(L_POS, None, M4L, homs)
        out.require(rep.ok, rep.summary())
        sp = dual_space(L_POS, M4L)
        from dualis.priestley import dual_morphism
        rep = check_pdi_single_dual(sp, [dual_morphism(h, A1, A2, L_POS) for _, h, A1, A2 in homs])
        out.require(rep.ok, rep.summary())
        out.require(sp.sets[1] | sp.sets[2] == sp.sets[M4L.apply("or", 1, 2)], "union of a and b")
        for L, name in ((L_HIL, "H2"), (L_HEY, "C3H")):
            rep = check_uddt(L, None, doc.algebras[name])
            out.require(rep.ok, rep.summary())
        C3H = doc.algebras["C3H"]
        hey = dual_space(L_HEY, C3H)
        phi = hey.sets
        out.require(arrow(hey, phi[1], phi[0]) == 0 == phi[C3H.apply("imp", 1, 0)], "m→0 is empty")
        up_m = 1 << hey.labels.index("{m,1}")
        out.require(arrow(hey, phi[2], phi[1]) == up_m == phi[C3H.apply("imp", 2, 1)], "1→m is ↑m")
        rep = check_pie(L_BOT, None, doc.algebras["C3B"])
        out.require(rep.ok, rep.summary())

        # negative controls, each at its documented witness
        fails = check_pc(neg.logics["L_FAKE_IMP"], None, neg.algebras["H2"]).get("pc-transfer").failures
        out.require(bool(fails) and fails[0] == {"a": "0", "b": "0"}, "fake conjunction at (0,0)")
        fails = check_pdi(neg.logics["L_FAKE_AND"], None, neg.algebras["M4"]).get("pdi-transfer").failures
        out.require({"X": [], "a": "a", "b": "b"} in fails, "fake disjunction at X=∅, (a,b)")
        fails = check_pdi_single_dual(dual_space(L_HIL, doc.algebras["H5"])).get("union-closed").failures
        out.require(bool(fails) and (fails[0]["U"], fails[0]["V"]) == ("a", "b"),
                    "non-union-closed dual at (a,b)")
        rep = check_uddt(neg.logics["L_FAKE_AND"], None, neg.algebras["M4"])
        out.require(not rep.get("ddt-transfer").passed, "fake deduction-detachment")
        rep = check_pie(L_HIL, None, doc.algebras["H2"])
        out.require(not rep.get("pie-transfer").passed and rep.get("bottom-is-empty").passed,
                    "inconsistent element without constants")


def test_criterion_8_theorem_free():
    with criterion(8, "theorem-free branch", 5) as out:
        doc = load("theorem_free")
        fs = filter_system(doc.logics["L_AND"], doc.algebras["C2"])
        out.require(0 in fs.filters, "∅ is a filter")
        out.require(0 in fs.optimal, "∅ is optimal")
        out.require(frozenset() in O.optimal_filters(doc.logics["L_AND"], doc.algebras["C2"]),
                    "brute force: ∅ is optimal")
        code = quiet_main(["check", "theorem_free", "--suite", "full-duality"])
        out.require(code == 2, f"dualization exit {code}, expected 2")


def test_criterion_9_cli_round_trip(tmp_path=None):
    import tempfile
    with criterion(9, "workbench round trip", 10) as out:
        workdir = Path(tmp_path or tempfile.mkdtemp())
        for name in ("corpus", "m4"):
            report = workdir / f"{name}.json"
            dot = workdir / f"{name}.dot"
            code = quiet_main(["check", name, "--suite", "full-duality", "--json", str(report),
                         "--dot", f"dual:M4={dot}"])
            out.require(code == 0, f"{name}: exit {code}")
            data = json.loads(report.read_text())
            out.require(data["summary"]["failed_checks"] == 0, f"{name}: failures")
            text = dot.read_text()
            out.require(text.startswith("digraph") and text.rstrip().endswith("}"), f"{name}: DOT")
        for name in ("corpus", "m4", "theorem_free", "negative"):
            printed = print_document(load(name))
            out.require(print_document(parse_document(printed)) == printed, f"{name}: parse∘print")
        doc = load("corpus")
        for obj in ("M4", "dual:M4", "dual:H2", "dual:L_HEY/C3H"):
            json.loads(export_json(doc, obj))
            out.require(export_dot(doc, obj).count("{") == export_dot(doc, obj).count("}"), obj)


if __name__ == "__main__":
    failed = 0
    for test in (test_criterion_1_characterization_sweep, test_criterion_2_envelope,
                 test_criterion_3_two_routes, test_criterion_4_representation_reports,
                 test_criterion_5_space_axioms, test_criterion_6_category_laws,
                 test_criterion_7_property_ladder, test_criterion_8_theorem_free,
                 test_criterion_9_cli_round_trip):
        try:
            test()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
