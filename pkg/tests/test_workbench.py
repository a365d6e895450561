import json
from importlib import resources

import jsonschema
import pytest

from dualis.fixtures import load
from dualis.syntax import ParseError
from dualis.workbench.cli import main
from dualis.workbench.document import parse_document, print_document
from dualis.workbench.export import export_data, export_dot, export_json
from dualis.workbench.suites import run_suite

FIXTURES = ("corpus", "m4", "theorem_free", "negative")
SCHEMA = json.loads(resources.files("dualis.data").joinpath("report.schema.json").read_text())

HEADER = """algebra C2 {
  elements: 0 1;
  op and/2 { 0 0  0 1 };
}
"""


def parse_error(text):
    with pytest.raises(ParseError) as info:
        parse_document(text)
    return info.value


# parsing and printing

def test_m4_fixture_contents():
    doc = load("m4")
    assert "M4" in doc.algebras
    L = doc.logics["L_TOP_AND"]
    assert str(L.witness("pc")[0]) == "and(p,q)"


@pytest.mark.parametrize("name", FIXTURES)
def test_parse_print_round_trip(name):
    printed = print_document(load(name))
    again = parse_document(printed)
    assert print_document(again) == printed
    original = load(name)
    assert again.order == original.order
    assert again.algebras == original.algebras and again.logics == original.logics
    assert again.homs == original.homs and again.suites == original.suites


def test_arity_error_points_at_the_term():
    text = HEADER + "logic L {\n  connectives: and/2;\n  rule: p, q |- and(p);\n}\n"
    err = parse_error(text)
    assert err.line == 7
    assert "argument" in err.message


def test_unresolved_reference():
    err = parse_error(HEADER + "hom h : C2 -> C9 { 0 -> 0; 1 -> 1 }\n")
    assert "C9" in err.message


def test_non_homomorphism_rejected():
    err = parse_error(HEADER + "hom h : C2 -> C2 { 0 -> 1; 1 -> 0 }\n")
    assert "homomorphism" in err.message


def test_syntax_error_has_a_position():
    err = parse_error("algebra X {\n  elements 0 1;\n}\n")
    assert err.line == 2 and err.col >= 1


# suites

def test_m4_full_duality_passes():
    result = run_suite(load("m4"), "full-duality")
    assert result.exit_code == 0 and result.failures == 0


def test_corpus_suites_pass():
    doc = load("corpus")
    for suite in doc.suites:
        assert run_suite(doc, suite).exit_code == 0, suite


def test_theorem_free_gate():
    result = run_suite(load("theorem_free"), "full-duality")
    assert result.exit_code == 2
    assert result.to_dict()["summary"]["reason"].startswith("theorems required")
    assert run_suite(load("theorem_free"), "filters-only").exit_code == 0


def test_negative_suites_fail():
    doc = load("negative")
    assert run_suite(doc, "hand-written-dual").exit_code == 0
    broken = run_suite(doc, "corrupted-space")
    assert broken.exit_code == 1
    failed = [c["id"] for f in broken.to_dict()["fixtures"] for c in f["checks"] if c["failed"]]
    assert "carrier-in-family" in failed
    assert run_suite(doc, "fake-disjunction").exit_code == 1
    assert run_suite(doc, "fake-conjunction").exit_code == 1


def test_unknown_suite_is_a_gate():
    assert run_suite(load("m4"), "nope").exit_code == 2


def test_reports_validate_and_are_deterministic():
    for name, suite in (("m4", "full-duality"), ("negative", "corrupted-space"),
                        ("theorem_free", "full-duality")):
        first = run_suite(load(name), suite).to_dict()
        jsonschema.validate(first, SCHEMA)
        assert json.dumps(first) == json.dumps(run_suite(load(name), suite).to_dict())


# export

def test_dot_of_m4_poset():
    dot = export_dot(load("corpus"), "M4")
    assert dot.count("[label=") == 4
    assert dot.count("->") == 4
    assert "rankdir=BT" in dot


def test_dot_of_m4_dual():
    dot = export_dot(load("corpus"), "dual:M4")
    assert dot.count("doublecircle") == 2
    assert "->" not in dot


def test_json_of_h2_dual():
    data = json.loads(export_json(load("corpus"), "dual:H2"))
    assert len(data["points"]) == 1
    assert len(data["family"]) == 2
    assert data["operations"]["imp"]["table"] == ["1", "1", "0", "1"]


def test_export_unknown_object():
    with pytest.raises(KeyError):
        export_dot(load("corpus"), "NOPE")
    assert export_data(load("negative"), "DM4")["kind"] == "space"


# command line

def test_cli_check(tmp_path, capsys):
    out, dot = tmp_path / "r.json", tmp_path / "m4.dot"
    code = main(["check", "m4", "--suite", "full-duality", "--json", str(out), "--dot", f"M4={dot}"])
    assert code == 0
    jsonschema.validate(json.loads(out.read_text()), SCHEMA)
    assert dot.read_text().startswith("digraph")
    assert "0 failed, exit 0" in capsys.readouterr().out


def test_cli_exit_codes(tmp_path, capsys):
    assert main(["check", "theorem_free", "--suite", "full-duality"]) == 2
    assert main(["check", "negative", "--suite", "corrupted-space"]) == 1
    bad = tmp_path / "bad.duals"
    bad.write_text("logic X {\n  connectives: and/2;\n  rule: p, q |- and(p);\n}\n")
    assert main(["check", str(bad), "--suite", "x"]) == 3
    assert "bad.duals:3:" in capsys.readouterr().err
    assert main(["check", "corpus", "--suite", "full-duality", "--max-size", "3"]) == 2
    assert main(["check", "no-such-file", "--suite", "x"]) == 2


def test_cli_dualize_and_enumerate(tmp_path, capsys):
    out = tmp_path / "d.json"
    assert main(["dualize", "corpus", "--algebra", "C3H", "--json", str(out)]) == 0
    assert json.loads(out.read_text())["logic"] == "L_HEY"
    assert main(["enumerate", "--semilattices", "--max", "3", "--run", "envelope"]) == 0
    assert "9 meet-semilattices with top" in capsys.readouterr().out
