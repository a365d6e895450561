"""Running named suites from a workbench document.

A suite names logic/algebra pairs, homomorphisms, hand-written spaces and the
kinds of checks to run on them. The result is one report per fixture plus a
summary, and an exit code: 0 when every check passes, 1 when some check fails,
2 when a gate stops the run (dualizing without theorems, a carrier over the
size cap) and 3 for documents that do not parse.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..config import ENV_VAR, ORDER_CAP, carrier_cap
from ..errors import CarrierTooLarge, GateError, HypothesisFailure, NotVerified
from ..logic import check_filters
from ..priestley import (SPriestleySpace, b_structures, check_dual_morphism, check_dual_space,
                         check_natural_isos, check_xi, dual_morphism, dual_space, verify_space)
from ..properties import (check_pc, check_pdi, check_pdi_single_dual, check_pie, check_uddt,
                          quotient_transfer_check)
from ..report import Report
from ..representation import check_base_independence, check_semilattice_isos, check_representation
from .document import WorkbenchDocument

EXIT_OK, EXIT_FAILED, EXIT_GATE, EXIT_PARSE = 0, 1, 2, 3
CHECK_KINDS = ("filters", "representation", "semilattice", "space", "morphisms", "category",
               "properties", "quotient")


@dataclass
class SuiteResult:
    suite: str
    reports: list[Report] = field(default_factory=list)
    gate: str | None = None

    @property
    def failures(self) -> int:
        return sum(len(r.failed_checks) for r in self.reports)

    @property
    def exit_code(self) -> int:
        if self.gate:
            return EXIT_GATE
        return EXIT_FAILED if self.failures else EXIT_OK

    def to_dict(self) -> dict:
        checks = sum(len(r.checks) for r in self.reports)
        summary = {"fixtures": len(self.reports), "checks": checks,
                   "instances": sum(r.instances for r in self.reports),
                   "failed_checks": self.failures, "exit_code": self.exit_code,
                   "status": ("gate" if self.gate else "fail" if self.failures else "pass")}
        if self.gate:
            summary["reason"] = self.gate
        return {"suite": self.suite, "fixtures": [r.to_dict() for r in self.reports],
                "summary": summary}


def space_from_decl(doc: WorkbenchDocument, name: str) -> SPriestleySpace:
    decl = doc.spaces[name]
    sets = tuple(m for _, m in decl.sets)
    return SPriestleySpace(doc.logics[decl.logic], len(decl.points), sets, decl.algebra,
                           decl.points, name)


def _hypothesis_report(subject: str, exc: Exception) -> Report:
    rep = Report(subject)
    failed = getattr(exc, "failed", None)
    rep.check("duality-hypotheses", "the algebra meets the hypotheses of the duality").record(
        False, reason=str(exc), failed=failed)
    return rep


def _homs(doc: WorkbenchDocument, names) -> list:
    return [(n,) + doc.hom(n) for n in names]


def _run_pair(doc, L, algebras, homs, checks, out: SuiteResult) -> None:
    reports = out.reports
    for A in algebras:
        if "filters" in checks:
            reports.append(check_filters(L, A))
        if "representation" in checks:
            reports.append(check_representation(L, A))
            reports.append(check_base_independence(L, A))
        if "semilattice" in checks:
            reports.append(check_semilattice_isos(L, A))
    if "space" in checks:
        for A in algebras:
            try:
                space = dual_space(L, A)
            except HypothesisFailure as exc:
                reports.append(_hypothesis_report(f"{L.name}/{A.name}: dual space", exc))
                continue
            reports.append(check_dual_space(L, A))
            reports.append(check_xi(space))
            reports.append(b_structures(space).report)
    if "morphisms" in checks:
        for name, h, A1, A2 in homs:
            reports.append(check_dual_morphism(h, A1, A2, L, name))
    if "category" in checks:
        reports.append(check_natural_isos(L, algebras, homs))
    if "properties" in checks:
        for A in algebras:
            if L.witness("pc"):
                reports.append(check_pc(L, None, A))
            if L.witness("pdi"):
                touching = [t for t in homs if A in (t[2], t[3])]
                reports.append(check_pdi(L, None, A, touching))
                if len(L.witness("pdi")) == 1:
                    morphisms = [dual_morphism(h, A1, A2, L) for _, h, A1, A2 in touching]
                    reports.append(check_pdi_single_dual(dual_space(L, A), morphisms))
            if L.witness("ddt"):
                reports.append(check_uddt(L, None, A))
            if L.witness("pie"):
                reports.append(check_pie(L, None, A))
    if "quotient" in checks:
        reports.append(quotient_transfer_check(L, algebras, homs))


def _run_space(doc, name, out: SuiteResult) -> None:
    space = space_from_decl(doc, name)
    rep = verify_space(space)
    out.reports.append(rep)
    if rep.ok:
        out.reports.append(check_xi(space))
        out.reports.append(b_structures(space).report)


def run_suite(doc: WorkbenchDocument, suite_name: str, max_size: int | None = None) -> SuiteResult:
    """Run a suite; gates end the run early with the reports gathered so far."""
    out = SuiteResult(suite_name)
    if suite_name not in doc.suites:
        out.gate = f"unknown suite {suite_name!r}"
        return out
    suite = doc.suites[suite_name]
    unknown = [c for c in suite.checks if c not in CHECK_KINDS]
    if unknown:
        out.gate = f"unknown check kind(s) {unknown}"
        return out
    cap = max_size if max_size is not None else carrier_cap(ORDER_CAP)
    homs_by_logic = {lg: names for lg, names in suite.homs}
    try:
        for lg, names in suite.pairs:
            L = doc.logics[lg]
            algebras = [doc.algebras[n] for n in names]
            big = [A.name for A in algebras if A.size > cap]
            if big:
                raise CarrierTooLarge(max(doc.algebras[n].size for n in big), cap,
                                      f"carrier of {', '.join(big)}")
            _run_pair(doc, L, algebras, _homs(doc, homs_by_logic.get(lg, ())), suite.checks, out)
        for name in suite.spaces:
            _run_space(doc, name, out)
    except GateError as exc:
        out.gate = exc.reason
    except CarrierTooLarge as exc:
        out.gate = f"{exc} (raise it with --max-size or {ENV_VAR})"
    except NotVerified as exc:
        out.gate = f"unverified structure: {exc}"
    return out
