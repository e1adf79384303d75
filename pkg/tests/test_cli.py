from __future__ import annotations

import io
import json

import fusionring as fr
from fusionring.cli import run_command


def run(capsys, *argv):
    code = run_command(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out) if out else None, err


def test_fpdim_category_payload(capsys, tmp_path):
    path = tmp_path / "rep_f2_z3.json"
    path.write_text(fr.emit_entry(fr.get_builtin("rep_f2_z3")))
    code, doc, _ = run_json(capsys, "fpdim", str(path), "--category")
    assert code == 0
    assert doc["value"] == "3"
    assert doc["min_poly"] == [-3, 1]
    assert doc["algebraic_integer"] is True


def test_fpdim_element_payload(capsys):
    code, doc, _ = run_json(capsys, "fpdim", "rep_f2_z3", "--element", "v")
    assert code == 0
    assert doc["value"] == "2"
    assert doc["char_poly"] == [-2, -1, 1]
    assert doc["min_poly"] == [-2, 1]


def test_fpdim_all_elements(capsys):
    code, doc, _ = run_json(capsys, "fpdim", "rep_r_q8")
    assert code == 0
    values = {label: payload["value"] for label, payload in doc["elements"].items()}
    assert values == {"1": "1", "a": "1", "b": "1", "c": "1", "h": "4"}


def test_fpdim_irrational_interval(capsys):
    code, doc, _ = run_json(capsys, "fpdim", "fib", "--element", "x")
    assert code == 0
    assert doc["value"] is None
    assert doc["min_poly"] == [-1, -1, 1]
    assert doc["approx"].startswith("1.6180339887")


def test_center_gal7(capsys):
    code, doc, _ = run_json(capsys, "center", "gal7")
    assert code == 0
    assert doc["predicted"] == "1"
    assert doc["bound"] == "strict"
    assert doc["equality_iff_all_trivial"] is False
    assert doc["center_degree"] == 2


def test_center_requires_annotation(capsys):
    code, _, err = run(capsys, "center", "fib")
    assert code == 1
    assert "annotation" in err


def test_center_dz_flag(capsys):
    code, doc, _ = run_json(capsys, "center", "gal7", "--dz", "6")
    assert code == 0
    assert doc["predicted"] == "3"


def test_validate_pass(capsys):
    code, doc, _ = run_json(capsys, "validate", "rep_r_q8")
    assert code == 0
    assert doc["passed"] is True
    assert doc["violations"] == []


def test_validate_corrupted_file(capsys, tmp_path):
    doc = json.loads(fr.emit_entry(fr.get_builtin("rep_f2_z3")))
    doc["fusion"]["v|v"] = {"v": 1}  # unit dropped from v*v
    path = tmp_path / "corrupted.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run_json(capsys, "validate", str(path))
    assert code == 1
    assert out["passed"] is False
    assert any(v["rule"] == "duality" for v in out["violations"])


def test_validate_schema_error_exit_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"simples": []}')
    code, _, err = run(capsys, "validate", str(path))
    assert code == 2
    assert "error" in err


def test_regular_command(capsys):
    code, doc, _ = run_json(capsys, "regular", "rep_f2_z3")
    assert code == 0
    assert doc["coefficients"]["1"]["value"] == "1"
    assert doc["coefficients"]["v"]["value"] == "1"
    assert doc["eigenproperty_passed"] is True


def test_integrality_command(capsys):
    code, doc, _ = run_json(capsys, "integrality", "fib")
    assert code == 0
    assert doc["min_poly"] == [5, -5, 1]
    assert doc["algebraic_integer"] is True


def test_morita_command(capsys):
    code, doc, _ = run_json(capsys, "morita", "cc_bim", "vec_r")
    assert code == 0
    assert doc["equal"] is True
    assert doc["ratio_a"]["value"] == "1"
    code, doc, _ = run_json(capsys, "morita", "fib", "vec_r")
    assert code == 1
    assert doc["equal"] is False


def test_deligne_command(capsys):
    code, doc, _ = run_json(capsys, "deligne", "vec_c", "vec_c")
    assert code == 0
    assert doc["count"] == 2
    assert all(s["division_type"] == "C" for s in doc["simples"])


def test_deligne_needs_division_types(capsys):
    code, _, err = run(capsys, "deligne", "fib", "vec_c")
    assert code == 2
    assert "division" in err


def test_catalog_list(capsys):
    code, doc, _ = run_json(capsys, "catalog", "list")
    assert code == 0
    assert "rep_r_q8" in doc["builtins"] and "gal7" in doc["builtins"]


def test_catalog_emit_round_trip(capsys):
    code, out, _ = run(capsys, "catalog", "emit", "jj_bim")
    assert code == 0
    parsed = fr.parse_fusion_file(out)
    assert parsed.data == fr.get_builtin("jj_bim").data
    assert parsed.annotation == fr.get_builtin("jj_bim").annotation


def test_catalog_emit_unknown(capsys):
    code, _, err = run(capsys, "catalog", "emit", "nope")
    assert code == 2


def test_stdin_input(capsys, monkeypatch):
    text = fr.emit_entry(fr.get_builtin("rep_f2_z3"))
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    code, doc, _ = run_json(capsys, "fpdim", "-", "--category")
    assert code == 0
    assert doc["value"] == "3"


def test_unknown_input_is_usage_error(capsys):
    code, _, err = run(capsys, "fpdim", "no_such_thing.json", "--category")
    assert code == 2


def test_unknown_element_is_usage_error(capsys):
    code, _, err = run(capsys, "fpdim", "fib", "--element", "zz")
    assert code == 2


def test_nontransitive_refusal_and_waiver(capsys, tmp_path):
    doc = {
        "name": "idem",
        "simples": [{"label": "1", "dual": "1"}, {"label": "e", "dual": "e"}],
        "fusion": {"1|1": {"1": 1}, "1|e": {"e": 1}, "e|1": {"e": 1}, "e|e": {"e": 1}},
    }
    path = tmp_path / "idem.json"
    path.write_text(json.dumps(doc))
    # structural gate trips first: this data also fails the duality axiom
    code, _, err = run(capsys, "fpdim", str(path), "--category")
    assert code == 1


def test_output_determinism(capsys):
    outputs = []
    for _ in range(2):
        _, out, _ = run(capsys, "fpdim", "fib", "--element", "x", "--format", "json")
        outputs.append(out)
    assert outputs[0] == outputs[1]
    emits = []
    for _ in range(2):
        _, out, _ = run(capsys, "catalog", "emit", "rep_r_q8")
        emits.append(out)
    assert emits[0] == emits[1]


def test_precision_changes_only_intervals(capsys):
    _, low, _ = run_json(capsys, "fpdim", "fib", "--element", "x", "--precision", "32")
    _, high, _ = run_json(capsys, "fpdim", "fib", "--element", "x", "--precision", "96")
    assert low["min_poly"] == high["min_poly"]
    assert low["value"] == high["value"]
    assert low["interval"] != high["interval"]
    _, a, _ = run_json(capsys, "fpdim", "rep_f2_z3", "--category", "--precision", "32")
    _, b, _ = run_json(capsys, "fpdim", "rep_f2_z3", "--category", "--precision", "96")
    assert a == b  # exact rationals are untouched by precision


def test_text_format_renders(capsys):
    code, out, _ = run(capsys, "fpdim", "rep_f2_z3", "--category")
    assert code == 0
    assert "value: 3" in out


def test_fpdim_refuses_multifusion(capsys):
    code, _, err = run(capsys, "fpdim", "m2_vec", "--category")
    assert code == 1
    assert "unit" in err or "fusion" in err
