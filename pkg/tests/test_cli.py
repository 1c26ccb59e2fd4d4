import json
import shutil
import subprocess
import sys

import pytest

from leglab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


@pytest.fixture
def entry(corpus_dir):
    return lambda name: str(corpus_dir / f"{name}.json")


def test_invariants(capsys, entry):
    code, out = run_json(capsys, "invariants", entry("unknot_eye"))
    assert code == 0
    assert (out["tb"], out["r"]) == (-1, 0)
    _, out = run_json(capsys, "invariants", entry("k10_139"))
    assert (out["tb"], out["r"]) == (6, 1)
    _, out = run_json(capsys, "invariants", entry("m10_145"))
    assert (out["tb"], out["r"]) == (2, 1)


def test_reversed_orientation_flag(capsys, entry):
    _, out = run_json(capsys, "--orientation", "reversed", "invariants", entry("k10_139"))
    assert out["r"] == -1
    _, out = run_json(capsys, "invariants", "--orientation", "reversed", entry("k10_139"))
    assert out["r"] == -1


def test_pd(capsys, entry):
    code, out = run_json(capsys, "pd", entry("trefoil_right"))
    assert code == 0
    assert out["crossings"] == 3 and out["writhe"] == 3
    assert out["pd"].startswith("PD[")


def test_polys(capsys, entry):
    _, out = run_json(capsys, "polys", entry("trefoil_left"))
    assert out["kauffman_bound"] == -6
    assert out["homfly_bound"] == -5


def test_polys_cap(capsys, entry):
    code, out = run_json(capsys, "--crossing-cap", "10", "polys", entry("m10_145"))
    assert code == 2
    assert out["error"] == "crossing-cap"


def test_tau(capsys, entry):
    _, out = run_json(capsys, "tau", entry("k10_139"), "--unknotting", "4")
    assert out["tau"] == 4 and out["determined"]
    _, out = run_json(capsys, "tau", entry("m10_145"), "--unknotting", "2")
    assert out["tau"] == 2
    _, out = run_json(capsys, "tau", entry("unknot_eye"), "--unknotting", "0")
    assert (out["lower"], out["upper"], out["tau"]) == (0, 0, 0)


def test_tau_needs_a_bound(capsys, tmp_path):
    p = tmp_path / "eye.json"
    p.write_text(json.dumps({"name": "eye", "events": "L1 R1"}))
    code, out = run_json(capsys, "tau", str(p))
    assert code == 2 and out["error"] == "usage"
    code, out = run_json(capsys, "tau", str(p), "--unknotting", "0")
    assert code == 0 and out["tau"] == 0


def test_missing_file(capsys, tmp_path):
    code, out = run_json(capsys, "tau", str(tmp_path / "missing.json"), "--unknotting", "1")
    assert code == 2 and out["error"] == "io-error"


def test_bounds(capsys, entry):
    _, out = run_json(capsys, "bounds", entry("trefoil_right"))
    by = {b["name"]: b for b in out["bounds"]}
    assert by["tau"]["value"] == 1 and by["tau"]["slack"] == 0
    assert by["homfly"]["value"] == 1
    assert out["parity_ok"] is True


def test_tau_bound_violation(capsys, entry):
    code, out = run_json(capsys, "tau", entry("k10_139"), "--unknotting", "3")
    assert code == 2 and out["error"] == "bound-violation"


def test_bounds_table_format(capsys, entry):
    code, out = run(capsys, "--format", "table", "bounds", entry("trefoil_left"))
    assert code == 0
    assert "kauffman" in out and "tb(K) can never be positive" in out


def test_verify_unknotting(capsys, entry):
    _, out = run_json(capsys, "verify-unknotting", entry("k10_139"))
    assert out["result"] in ("pass", "inconclusive")
    assert out["switches"] == [0, 1, 2, 8]
    _, out = run_json(capsys, "verify-unknotting", "--pd", "PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]")
    assert out["result"] == "fail"
    _, out = run_json(capsys, "verify-unknotting", "--pd", "PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]", "--switch", "0")
    assert out["result"] == "pass"
    code, out = run_json(capsys, "verify-unknotting", "--pd", "PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]", "--switch", "9")
    assert code == 2 and out["error"] == "invalid-pd"


def test_invalid_front(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"name": "bad", "events": "L1 R1 L1 R1"}))
    code, out = run_json(capsys, "invariants", str(p))
    assert code == 2 and out["error"] == "multi-component"
    p.write_text(json.dumps({"name": "bad", "events": "L1"}))
    code, out = run_json(capsys, "invariants", str(p))
    assert code == 2 and out["error"] == "malformed-front"
    p.write_text(json.dumps({"name": "bad", "events": "L1 Q1 R1"}))
    code, out = run_json(capsys, "invariants", str(p))
    assert code == 2 and out["error"] == "malformed-front"
    p.write_text("{not json")
    code, out = run_json(capsys, "invariants", str(p))
    assert code == 2 and out["error"] == "parse-error"


def test_corpus_check(capsys):
    code, out = run_json(capsys, "corpus-check")
    assert code == 0 and out["ok"] is True
    code, out = run(capsys, "--format", "table", "corpus-check")
    assert code == 0 and "11/11 entries pass" in out


def test_corpus_check_corrupted(capsys, corpus_dir, tmp_path):
    dest = tmp_path / "c"
    shutil.copytree(corpus_dir, dest)
    p = dest / "torus_2_5.json"
    data = json.loads(p.read_text())
    data["expected"]["tb"] = 99
    p.write_text(json.dumps(data))
    code, out = run(capsys, "--format", "table", "corpus-check", str(dest))
    assert code == 1
    assert "mismatch tb: expected 99, got 3" in out


def test_corpus_check_empty(capsys, tmp_path):
    code, out = run_json(capsys, "corpus-check", str(tmp_path))
    assert code == 2 and "no entries" in out["message"]


def test_console_script_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "leglab.cli", "--format", "table", "corpus-check"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0, res.stdout + res.stderr
