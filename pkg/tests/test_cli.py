import json
import subprocess
import sys

import pytest

from lassokit.automaton import isomorphic
from lassokit.cli import EXIT_CAP, EXIT_INPUT, EXIT_OK, execute, main
from lassokit.corpus import a2_saturated, reference_a1, reference_a2
from lassokit.functors import alg
from lassokit.serialize import load, save


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, obj in (("A1", reference_a1()), ("A2", reference_a2()), ("A2sat", a2_saturated()),
                      ("G1", alg(reference_a1()))):
        p = tmp_path / f"{name}.json"
        save(obj, p)
        paths[name] = str(p)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def payload(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK
    return json.loads(out)


def test_accept(files, capsys):
    assert payload(capsys, "accept", files["A1"], "--spoke", "", "--loop", "ba") is True
    assert payload(capsys, "accept", files["A1"], "--spoke", "b", "--loop", "ab") is False
    assert payload(capsys, "accept", files["G1"], "--loop", "ba") is True


def test_malformed_input(tmp_path, files, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    code, _, err = run(capsys, "accept", str(bad), "--loop", "a")
    assert code == EXIT_INPUT and "invalid JSON" in err
    code, _, _ = run(capsys, "accept", files["A1"], "--loop", "c")
    assert code == EXIT_INPUT
    code, _, _ = run(capsys, "accept", str(tmp_path / "missing.json"), "--loop", "a")
    assert code == EXIT_INPUT
    assert run(capsys, "check", "omega", files["A1"], "--bounds", "x")[0] == EXIT_INPUT
    assert run(capsys, "check", "wilke", files["A1"])[0] == EXIT_INPUT


def test_transform_rev(files, capsys):
    doc = json.loads(run(capsys, "transform", "rev", files["A1"])[1])
    assert (len(doc["xStates"]), len(doc["yStates"])) == (4, 2)


def test_transform_to_algebra(files, capsys):
    doc = json.loads(run(capsys, "transform", "to-algebra", files["A1"])[1])
    assert doc["plus"] == ["a", "b"]


def test_transform_minimize_is_isomorphic(files, tmp_path, capsys):
    out = tmp_path / "m.json"
    assert run(capsys, "transform", "minimize", files["A1"], "--out", str(out))[0] == EXIT_OK
    assert isomorphic(load(out), reference_a1())


def test_transform_other_kinds(files, capsys):
    for kind, src in (("reach", "A2"), ("complement", "A1"), ("complement", "G1"),
                      ("to-automaton", "G1"), ("syntactic", "A2")):
        code, out, _ = run(capsys, "transform", kind, files[src])
        assert code == EXIT_OK and json.loads(out)
    assert run(capsys, "transform", "to-automaton", files["A1"])[0] == EXIT_INPUT


def test_transform_is_byte_deterministic(files, capsys):
    first = run(capsys, "transform", "syntactic", files["A2"])[1]
    second = run(capsys, "transform", "syntactic", files["A2"])[1]
    assert first == second


def test_dot_output(files, capsys):
    code, out, _ = run(capsys, "transform", "reach", files["A1"], "--dot")
    assert code == EXIT_OK and out.startswith("digraph")
    assert run(capsys, "transform", "to-algebra", files["A1"], "--dot")[0] == EXIT_INPUT


def test_size_cap(files, capsys):
    code, out, err = run(capsys, "--cap", "2", "transform", "rev", files["A1"])
    assert code == EXIT_CAP
    assert json.loads(out) == {"what": "rev", "estimate": "4", "cap": 2}


def test_size_cap_from_environment(files, capsys, monkeypatch):
    monkeypatch.setenv("LASSOKIT_CAP", "2")
    assert run(capsys, "transform", "rev", files["A1"])[0] == EXIT_CAP


def test_check_omega(files, capsys):
    doc = payload(capsys, "check", "omega", files["A1"])
    assert (doc["circular"], doc["coherent"]) == (True, False)
    assert doc["witness"]["condition"] == "coherence"


def test_check_omega_algebraic(files, capsys):
    assert payload(capsys, "check", "omega-algebraic", files["A2sat"])["is_omega"] is True
    assert payload(capsys, "check", "omega-algebraic", files["A2"])["is_omega"] is False
    assert payload(capsys, "check", "omega-algebraic", files["A1"])["is_omega"] is False


def test_check_saturation(files, capsys):
    doc = payload(capsys, "check", "saturation", files["A1"], "--bounds", "2,2")
    assert doc["witness"] == [{"spoke": "", "loop": "ba"}, {"spoke": "b", "loop": "ab"}]
    assert payload(capsys, "check", "saturation", files["A2sat"])["saturated"] is True


def test_check_wilke_and_omega_rev(files, capsys):
    assert payload(capsys, "check", "wilke", files["G1"])["circularity"] is True
    assert "rev_circular" in payload(capsys, "check", "omega-rev", files["A2"])


def test_compare(files, capsys):
    doc = payload(capsys, "compare", files["A1"], files["G1"], "--bounds", "2,2")
    assert doc["relation"] == "reverse-equal"
    assert payload(capsys, "compare", files["A1"], files["A1"])["relation"] == "equal"
    doc = payload(capsys, "compare", files["A1"], files["A2"])
    assert doc["relation"] == "differing"
    assert doc["first_difference"] == {"spoke": "", "loop": "b", "first": True, "second": False}


def test_probe_adjunction(files, capsys, tmp_path):
    doc = payload(capsys, "probe-adjunction", files["G1"], files["A1"])
    assert doc["consistent"] and doc["hom_alg_side"] and doc["hom_aut_side"]
    doc = payload(capsys, "probe-adjunction", files["G1"], files["A2"])
    assert doc["consistent"] and not doc["hom_alg_side"] and not doc["hom_aut_side"]


def test_probe_auto_reach_notice(tmp_path, files, capsys):
    doc = json.loads(open(files["A1"], encoding="utf-8").read())
    doc["yStates"].append("junk")
    doc["xi"]["junk"] = {"a": "junk", "b": "junk"}
    p = tmp_path / "junk.json"
    p.write_text(json.dumps(doc), encoding="utf-8")
    code, out, err = run(capsys, "probe-adjunction", files["G1"], str(p))
    assert code == EXIT_OK and "not reachable" in err
    assert json.loads(out)["consistent"]


def test_selftest_emits_tap(capsys):
    code, out, _ = run(capsys, "selftest")
    lines = out.strip().splitlines()
    assert lines[0] == "1..10"
    assert len(lines) == 11
    assert all(l.startswith(("ok ", "not ok ")) for l in lines[1:])
    assert (code == 1) == any(l.startswith("not ok") for l in lines[1:])


def test_execute_returns_structured_result(files):
    res = execute(["check", "omega", files["A1"]])
    assert res.status == "ok" and res.code == EXIT_OK and res.payload["circular"]


def test_console_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "lassokit.cli", "accept", files["A1"], "--loop", "b"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "true"
