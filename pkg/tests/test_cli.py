import io
import json

import pytest

from e6sp4 import presets
from e6sp4.cli import main

W16_DOC = {"group": "E6m14", "series": "discrete", "weight": ["1", "0", "0", "0", "0", "1"]}


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_roots(capsys):
    assert run(capsys, "roots", "E6-bourbaki")[:2] == (0, "72 roots\n")
    assert run(capsys, "roots", "A1")[1] == "2 roots\n"


def test_roots_list(capsys):
    code, out, _ = run(capsys, "roots", "C2", "--list")
    lines = out.splitlines()
    assert lines[0] == "8 roots"
    assert len(lines) == 9
    assert {l.split("length2=")[1] for l in lines[1:]} == {"2", "4"}


def test_unknown_preset(capsys):
    code, _, err = run(capsys, "roots", "nosuch")
    assert code == 2 and "nosuch" in err


def test_weyl(capsys):
    assert run(capsys, "weyl", "C2")[1] == "order 8\n"
    assert run(capsys, "weyl", "E6-bourbaki", "--subset", "2,3,4,5")[1] == "order 192\n"
    assert run(capsys, "weyl", "C2", "--subset", "3")[0] == 2


def test_project_and_compensate(capsys):
    code, out, _ = run(capsys, "project", "--weight", "1,0,0,0,0,1")
    assert json.loads(out) == {"lattice": "P(Sp4)", "coords": ["1", "1"]}
    code, out, _ = run(capsys, "compensate", "--weight", "0,2,0,0,1,0")
    assert json.loads(out) == {"compensation": "5"}
    assert run(capsys, "project", "--weight", "1,2")[0] == 2
    assert run(capsys, "project", "--weight", "1,0.5,0,0,0,0")[0] == 2


def test_classify_file(capsys, tmp_path):
    f = tmp_path / "d.json"
    f.write_text(json.dumps(W16_DOC))
    code, out, _ = run(capsys, "classify", str(f))
    doc = json.loads(out)
    assert code == 0
    assert doc["descriptor"] == {"group": "Sp4", "series": "discrete", "weight": ["1", "1"]}
    assert doc["scale"] is None


def test_classify_stdin(capsys, monkeypatch):
    d = {"group": "E6m14", "series": "complementary", "weight": ["0", "0", "1", "0", "0", "0"], "t": "1/2"}
    code, out, _ = run(capsys, "classify", "--kappa", "one", stdin=json.dumps(d), monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["scale"]["exponent"] == "-1"
    code, out, _ = run(capsys, "classify", "-", "--kappa", "inverse-gap", stdin=json.dumps(d), monkeypatch=monkeypatch)
    assert json.loads(out)["scale"]["exponent"] == "-2"


def test_classify_errors(capsys, monkeypatch):
    d = {"group": "E6m14", "series": "complementary", "weight": ["0"] * 6, "t": "3/2"}
    code, _, err = run(capsys, "classify", stdin=json.dumps(d), monkeypatch=monkeypatch)
    assert code == 2 and "$.t" in err and "(0,1)" in err
    code, _, err = run(capsys, "classify", stdin="{not json", monkeypatch=monkeypatch)
    assert code == 2
    code, _, err = run(capsys, "classify", "--kappa", "custom", stdin=json.dumps(W16_DOC), monkeypatch=monkeypatch)
    assert code == 2 and "kappa" in err
    code, _, err = run(capsys, "classify", "/nonexistent/file.json")
    assert code == 2


def test_classify_strict(capsys, monkeypatch):
    d = {"group": "E6m14", "series": "discrete", "weight": ["1", "0", "0", "0", "0", "0"]}
    assert run(capsys, "classify", stdin=json.dumps(d), monkeypatch=monkeypatch)[0] == 0
    assert run(capsys, "classify", "--strict", stdin=json.dumps(d), monkeypatch=monkeypatch)[0] == 2


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "--series", "discrete", "--bound", "2", "--support", "1,6")
    doc = json.loads(out)
    assert code == 0
    assert doc["family_size"] == 9 and not doc["collisions_kernel"] and not doc["collisions_unexplained"]

    doc = json.loads(run(capsys, "scan", "--series", "discrete", "--bound", "1", "--support", "1,3")[1])
    assert len(doc["collisions_kernel"]) == 2 and not doc["collisions_unexplained"]

    doc = json.loads(run(capsys, "scan", "--bound", "0")[1])
    assert doc["family_size"] == 3 and doc["image_count"] == 3 and not doc["collisions_kernel"]


def test_scan_usage_errors(capsys):
    assert run(capsys, "scan", "--bound", "-1")[0] == 2
    assert run(capsys, "scan", "--bound", "50", "--support", "1,2,3,4,5,6")[0] == 2
    assert run(capsys, "scan", "--bound", "3", "--cap", "10")[0] == 2
    assert run(capsys, "scan", "--series", "weird")[0] == 2
    assert run(capsys, "scan", "--support", "0,7")[0] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--format", "json")
    doc = json.loads(out)
    assert code == 1
    assert len(doc["records"]) >= 16
    code2, out2, _ = run(capsys, "verify", "--format", "json")
    assert out2 == out
    code, out, _ = run(capsys, "verify", "--format", "markdown")
    assert code == 1 and out.startswith("# Claim ledger")
    assert run(capsys, "verify", "--preset", "nosuch")[0] == 2
    assert run(capsys, "verify", "--format", "pdf")[0] == 2


def test_exit_codes_exhaustive(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_preset_override(capsys, tmp_path, monkeypatch):
    f = tmp_path / "extra.yaml"
    f.write_text(
        "B3:\n"
        "  matrix: [[2, -1, 0], [-1, 2, -1], [0, -2, 2]]\n"
        "  labels: [compact, compact, compact]\n"
        "  lengths: [4, 4, 2]\n"
    )
    monkeypatch.delenv(presets.ENV_VAR, raising=False)
    assert run(capsys, "--presets", str(f), "roots", "B3")[1] == "18 roots\n"
    monkeypatch.setenv(presets.ENV_VAR, str(f))
    assert run(capsys, "weyl", "B3")[1] == "order 48\n"


def test_bad_preset_file(capsys, tmp_path, monkeypatch):
    f = tmp_path / "bad.yaml"
    f.write_text("X:\n  matrix: [[2, 1], [1, 2]]\n  labels: [compact, compact]\n  lengths: [2, 2]\n")
    monkeypatch.setenv(presets.ENV_VAR, str(f))
    assert run(capsys, "roots", "A1")[0] == 2
