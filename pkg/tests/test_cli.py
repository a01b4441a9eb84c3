from __future__ import annotations

import json
from pathlib import Path

import pytest

from gcx.cli import main
from gcx.report import load_text

FIXTURES = Path(__file__).parent / "fixtures"
SU2 = str(FIXTURES / "su2.gcx")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_catalog_entry(capsys):
    code, out, _ = run(capsys, "classify", "su2_contact")
    assert code == 0
    tree = load_text(out)
    cls = tree["structures"][0]["classification"]
    assert cls["level"] == "GeneralizedContact" and cls["strong"] == "false"


def test_json_format_matches_text(capsys):
    _, text, _ = run(capsys, "classify", "h3_cosymplectic", "--param", "a=2", "--param", "b=-3")
    _, js, _ = run(capsys, "classify", "h3_cosymplectic", "--format", "json-like-tree", "--param", "a=2",
                   "--param", "b=-3")
    assert json.loads(js) == load_text(text)
    assert load_text(text)["structures"][0]["classification"]["level"] == "StrongGeneralizedContact"


def test_output_is_deterministic(capsys):
    first = run(capsys, "brackets", "su2_normal")
    assert run(capsys, "brackets", "su2_normal") == first


def test_document_with_expectations(capsys):
    code, out, _ = run(capsys, "classify", SU2)
    assert code == 0
    exp = load_text(out)["expectations"]
    assert [e["status"] for e in exp] == ["pass", "pass"]
    assert run(capsys, "validate", SU2)[0] == 0


def test_failed_expectation_exits_4(tmp_path, capsys):
    doc = tmp_path / "wrong.gcx"
    doc.write_text(FIXTURES.joinpath("su2.gcx").read_text().replace(
        "expect su2_contact level GeneralizedContact", "expect su2_contact level StrongGeneralizedContact"))
    code, out, err = run(capsys, "classify", str(doc))
    assert code == 4 and "mismatch" in err
    assert load_text(out)["expectations"][0]["status"] == "FAIL"


def test_parse_errors_exit_2(tmp_path, capsys):
    doc = tmp_path / "bad.gcx"
    doc.write_text("algebra g dim 3\nend\nstructure s on g kind cosymplectic\n  eta = e1\n  theta = e1^\nend\n")
    code, _, err = run(capsys, "classify", str(doc))
    assert code == 2 and "5:" in err


def test_empty_document_is_a_usage_error(tmp_path, capsys):
    doc = tmp_path / "empty.gcx"
    doc.write_text("# nothing here\n")
    code, _, err = run(capsys, "classify", str(doc))
    assert code == 2 and "usage" in err
    assert run(capsys, "classify")[0] == 2


def test_invalid_structure_exits_3(tmp_path, capsys):
    doc = tmp_path / "invalid.gcx"
    doc.write_text("algebra g dim 3\n  bracket X1 X2 = -X3\nend\n"
                   "structure s on g kind explicit\n  F = X3\n  eta = 2*e3\nend\n")
    code, out, _ = run(capsys, "validate", str(doc))
    assert code == 3
    assert load_text(out)["structures"][0]["valid"] == "false"


def test_precondition_errors_exit_5(capsys):
    assert run(capsys, "classify", "no_such_entry")[0] == 5
    assert run(capsys, "classify", "h3_family", "--param", "r=1")[0] == 5
    assert run(capsys, "extend", "kod4", "--omega", "e3^e4")[0] == 5
    assert run(capsys, "obstruction", "kodaira_gcs")[0] == 5


def test_extend_with_complex_lift(capsys):
    code, out, _ = run(capsys, "extend", "kod4", "--omega", "-(e1^e3-e2^e4)", "--lift", "complex_J")
    assert code == 0
    tree = load_text(out)
    assert tree["classification"]["level"] == "GeneralizedContact"
    assert tree["classification"]["strong"] == "false"
    assert tree["normal"] == "false"
    assert tree["type_components_of_d_eta"]["(1,1)"] == "0"


def test_extend_without_check_reports_jacobi(capsys):
    code, out, _ = run(capsys, "extend", "kod4", "--omega", "e3^e4", "--no-check")
    assert code == 3
    assert load_text(out)["jacobi_violations"]


def test_deform_on_the_family(capsys):
    code, out, _ = run(capsys, "deform", "h3_cosymplectic", "--t", "3/10+2/5*i")
    assert code == 0
    tree = load_text(out)
    assert tree["mc_residual_zero"] == "true" and tree["graph_closed"] == "true"
    assert len(tree["E10_t"]) == 2


def test_obstruction_and_darboux(capsys):
    code, out, _ = run(capsys, "obstruction", "su2_contact")
    assert code == 0 and load_text(out)["nonzero"] == "true"
    code, out, _ = run(capsys, "obstruction", "h3_cosymplectic_inf")
    assert code == 0 and load_text(out)["nonzero"] == "false"
    code, out, _ = run(capsys, "darboux", "--n", "1")
    assert code == 0 and load_text(out)["report"]["passed"] == "true"
    assert run(capsys, "darboux", "--n", "9")[0] == 5


def test_catalog_commands(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and len(load_text(out)["entries"]) >= 9
    code, out, _ = run(capsys, "catalog", "run", "h3_family", "--param", "r=2", "--param", "c=5/13",
                       "--param", "s=12/13")
    assert code == 0 and load_text(out)["passed"] == "1"


def test_timing_is_opt_in(capsys):
    _, out, _ = run(capsys, "classify", "su2_contact")
    assert "timing_ms" not in load_text(out)
    _, out, _ = run(capsys, "classify", "su2_contact", "--timing")
    assert "timing_ms" in load_text(out)


def test_argparse_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
