import json
import subprocess
import sys
from fractions import Fraction

import pytest

from orbihyp.cli import main, run
from orbihyp.cli.schemas import SchemaError
from orbihyp.cli.suite import CASES, load_golden


def invoke(capsys, argv, document=None, tmp_path=None, suffix=".json"):
    if document is not None:
        path = tmp_path / f"doc{suffix}"
        path.write_text(document if isinstance(document, str) else json.dumps(document))
        argv = argv + ["--input", str(path)]
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def margin(out, name):
    m = next(x for x in json.loads(out)["margins"] if x["name"] == name)
    return Fraction(m["num"], m["den"])


def test_plane_pair_pass(capsys, tmp_path):
    code, out, _ = invoke(capsys, ["planepair"], {"d": [5, 5], "m": [70, 71]}, tmp_path)
    assert code == 0
    assert margin(out, "margin") == Fraction(1, 994)
    assert {"num": 1, "den": 994} == {k: v for k, v in json.loads(out)["margins"][0].items() if k != "name"}


def test_plane_pair_fail_exit_code(capsys, tmp_path):
    code, out, _ = invoke(capsys, ["planepair"], {"d": [5, 5], "m": [70, 70]}, tmp_path)
    assert code == 1 and margin(out, "margin") == 0


def test_nochka_classical(capsys, tmp_path):
    code, out, _ = invoke(capsys, ["nochka"], {"n": 2, "q": 5, "m": ["inf"] * 5}, tmp_path)
    assert code == 0
    assert margin(out, "l=1") == 1 and margin(out, "l=2") == 2


def test_schema_error_names_the_field(capsys, tmp_path):
    code, out, err = invoke(capsys, ["planepair"], {"d": [5, 5], "m": [70, 0]}, tmp_path)
    assert code == 2
    assert "/payload/m/1" in err
    assert json.loads(out)["exit_code"] == 2


def test_unparseable_input(capsys, tmp_path):
    code, _, err = invoke(capsys, ["planepair"], "{not json", tmp_path)
    assert code == 2 and "neither JSON nor TOML" in err


def test_domain_error(capsys, tmp_path):
    doc = {"n": 2, "op": "distance", "p": 0}
    code, _, err = invoke(capsys, ["metric"], doc, tmp_path)
    assert code == 3 and "domain error" in err
    doc = {"genus": 0, "curve_degree": 1, "ambient_dim": 2, "components": [{"d": 2, "m": 3}], "contacts": [[1]]}
    assert invoke(capsys, ["pullback"], doc, tmp_path)[0] == 3


def test_missing_golden(capsys, tmp_path):
    code, _, err = invoke(capsys, ["paper-suite", "--golden", str(tmp_path / "absent.json")])
    assert code == 4 and "golden file missing" in err


def test_toml_input(capsys, tmp_path):
    code, out, _ = invoke(capsys, ["planepair"], 'd = [5, 5]\nm = [70, 71]\n', tmp_path, ".toml")
    assert code == 0 and margin(out, "margin") == Fraction(1, 994)
    code, out, _ = invoke(capsys, ["planepair"], 'd = [5, 5]\nm = ["inf", "inf"]\n', tmp_path, ".toml")
    assert margin(out, "margin") == Fraction(1, 7)


def test_full_document_and_text_format(capsys, tmp_path):
    doc = {"kind": "curve-classify", "payload": {"g": 0, "marks": [2, 3, 7]}, "options": {"format": "text"}}
    code, out, _ = invoke(capsys, ["classify"], doc, tmp_path)
    assert code == 0 and out.startswith("curve-classify: PASS")
    code, _, err = invoke(capsys, ["nochka"], doc, tmp_path)
    assert code == 2 and "does not match" in err


def test_output_is_byte_identical(capsys, tmp_path):
    doc = {"coordinates": [[1], [0, 0, 0, 1]], "H": [0, 1], "r_max": 100}
    first = invoke(capsys, ["nevanlinna"], doc, tmp_path)[1]
    second = invoke(capsys, ["nevanlinna"], doc, tmp_path)[1]
    assert first == second
    body = json.loads(first)
    assert abs(body["floats"]["defect"] - 2 / 3) < 1e-3
    assert list(body) == sorted(body)


def test_tolerance_flag(capsys, tmp_path):
    doc = {"n": 2, "op": "oracle", "p": 0.01, "q": 0.25, "resolution": 128}
    code, out, _ = invoke(capsys, ["metric", "--tolerance", "0.5"], doc, tmp_path)
    assert code == 0 and json.loads(out)["details"]["tolerance"] == 0.5


def test_infinite_float_is_a_string(capsys, tmp_path):
    code, out, _ = invoke(capsys, ["metric"], {"n": 3, "op": "density", "z": 0}, tmp_path)
    assert code == 0
    body = json.loads(out)
    assert body["floats"]["density"] == "inf" and "cone-point" in body["flags"]


def test_sweep_keeps_order(capsys, tmp_path):
    docs = [{"kind": "plane-pair", "payload": {"d": [5, 5], "m": [70, m]}} for m in (71, 70, 72, 69)]
    docs.append({"kind": "nochka", "payload": {"n": 2, "m": [0]}})
    code, out, _ = invoke(capsys, ["sweep", "--jobs", "2"], {"documents": docs}, tmp_path)
    body = json.loads(out)
    assert [e["index"] for e in body] == list(range(5))
    assert [e.get("verdict") for e in body[:4]] == [True, False, True, False]
    assert body[4]["exit_code"] == 2
    assert code == 2
    serial = invoke(capsys, ["sweep", "--jobs", "1"], {"documents": docs}, tmp_path)[1]
    assert serial == out


def test_paper_suite_passes(capsys):
    code, out, _ = invoke(capsys, ["paper-suite"])
    assert code == 0
    assert f"{len(CASES)}/{len(CASES)} cases match" in out


def test_paper_suite_json(capsys):
    code, out, _ = invoke(capsys, ["paper-suite", "--json"])
    body = json.loads(out)
    assert code == 0 and len(body) == len(CASES) and all(r["ok"] for r in body)


def test_perturbed_golden_names_the_mismatch(capsys, tmp_path):
    golden = load_golden()
    golden["plane-pair/5-5-70-71"]["margins"]["margin"] = "1/995"
    golden["metric/distance-n2"]["floats"]["distance"] += 1e-6
    path = tmp_path / "golden.json"
    path.write_text(json.dumps({"version": 1, "cases": golden}))
    code, out, _ = invoke(capsys, ["paper-suite", "--golden", str(path)])
    assert code == 1
    assert "MISMATCH  plane-pair/5-5-70-71" in out
    assert "margin margin: expected 1/995, got 1/994" in out
    assert "MISMATCH  metric/distance-n2" in out


def test_golden_values_equal_literals():
    golden = load_golden()
    assert golden["plane-pair/5-5-70-71"]["margins"]["margin"] == "1/994"
    assert golden["plane-pair/5-5-70-71"]["margins"]["jet_criterion"] == "1/142"
    assert golden["plane-pair/5-5-70-70"]["margins"]["margin"] == "0"
    assert golden["curve/2-2-3"]["margins"]["degree"] == "-1/3"
    assert golden["curve/3-3-5-tangency-2"]["margins"]["degree"] == "2/15"
    assert golden["curve/3-3-5-tangency-2"]["details"]["induced_classical"] == [3, 3, 5]
    assert golden["curve/3-3-5-tangency-2"]["details"]["induced_non_classical"] == [2, 2, 3]
    assert golden["curve/2-3-7"]["margins"]["area_over_pi"] == "1/21"
    assert golden["curve/2-3-6"]["details"]["class"] == "euclidean"
    assert golden["nochka/classical-n2-q5"]["margins"] == {"l=1": "1", "l=2": "2"}
    for n in range(2, 7):
        assert all(Fraction(v) > 0 for v in golden[f"nochka/classical-n{n}-q{2 * n + 1}"]["margins"].values())


def test_run_rejects_unknown_kind():
    with pytest.raises(SchemaError):
        run({"kind": "nope", "payload": {}})


def test_module_entry_point(tmp_path):
    path = tmp_path / "doc.json"
    path.write_text(json.dumps({"d": [5, 5], "m": [70, 71]}))
    res = subprocess.run([sys.executable, "-m", "orbihyp", "planepair", "--input", str(path), "--format", "text"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "PASS" in res.stdout
