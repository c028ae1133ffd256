import json

import pytest

from satake_gl2.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_compute_examples(capsys):
    assert run(capsys, "compute", "s-set", "--lam", "2", "--mu", "0") == (0, '{"set":[-2,0,2]}\n')
    code, out = run(capsys, "compute", "stalk", "--k", "1", "--coweight", "1", "0",
                    "--m", "0", "--l", "-2")
    assert json.loads(out) == {"kind": "point", "shift": 2}
    code, out = run(capsys, "compute", "hom", "--source", "0", "0", "--target", "0", "2")
    assert json.loads(out)["is_zero"] is True


def test_compute_other_commands(capsys):
    code, out = run(capsys, "compute", "module", "--lam", "1", "--mu", "1")
    doc = json.loads(out)
    assert doc["basis_degrees"] == [1, -1]
    assert doc["annihilator"] == [[0, 2, 1, 1], [1, 1, -2, 1]]
    code, out = run(capsys, "compute", "invariants", "--N", "2", "--dmax", "6")
    assert json.loads(out)["total"] == 2
    code, out = run(capsys, "compute", "orbit", "--k", "2", "--coweight", "1", "0")
    assert json.loads(out)["dim"] == 3
    code, out = run(capsys, "compute", "character", "--lam", "1", "--mu", "1")
    assert json.loads(out) == {"terms": [[-1, 1, 1], [1, 1, 1]]}


def test_usage_errors(capsys, tmp_path):
    assert main(["compute", "s-set", "--lam", "1", "--mu", "0"]) == 2
    assert main(["compute", "nonsense"]) == 2
    assert main(["verify", "unknown-suite", "--out", str(tmp_path / "x.json")]) == 2
    assert main(["verify", "koszul", "--out", str(tmp_path / "missing" / "x.json")]) == 2
    assert main(["verify", "stalks", "--primes", "4", "--out", str(tmp_path / "s.json")]) == 2


def test_verify_annihilators_json(tmp_path):
    out = tmp_path / "ann.json"
    assert main(["verify", "annihilators", "--lam-max", "6", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["summary"]["failed"] == 0
    assert doc["summary"]["cases"] == len(doc["records"])


def test_verify_hom_small(tmp_path):
    out = tmp_path / "hom.json"
    assert main(["verify", "hom-agreement", "--lam-max", "2", "--mu-bound", "2",
                 "--out", str(out)]) == 0


def test_env_output_dir_and_csv(tmp_path, monkeypatch):
    monkeypatch.setenv("SATAKE_GL2_OUTPUT_DIR", str(tmp_path))
    assert main(["verify", "koszul", "--format", "csv"]) == 0
    lines = (tmp_path / "koszul.csv").read_text().splitlines()
    assert lines[0] == "suite,case_id,inputs,expected,computed,pass"
    assert len(lines) == 5 and all(l.endswith("true") for l in lines[1:])


def test_reports_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "orbits", "--k-max", "2", "--out", str(a)]) == 0
    assert main(["verify", "orbits", "--k-max", "2", "--out", str(b), "--jobs", "2"]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_failure_exit_code(tmp_path, monkeypatch):
    from satake_gl2 import suites
    monkeypatch.setattr(suites, "case_bijection", lambda bound: suites._record("x", {}, 1, 2))
    assert main(["verify", "orbits", "--k-max", "1", "--out", str(tmp_path / "o.json")]) == 1
