import json
import subprocess
import sys

from tvpi import cli
from tvpi.commands import EXIT_EXCEEDED, EXIT_INPUT, EXIT_OK, EXIT_VALIDATION, golden_path


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def write(tmp_path, obj, name="doc.json"):
    p = tmp_path / name
    p.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
    return str(p)


def test_local_pi1_e8(capsys):
    code, out = run(capsys, "local-pi1", "duval:E8", "--format", "json")
    assert code == EXIT_OK
    rep = json.loads(out)
    assert rep["group"]["order"] == {"kind": "finite", "value": 120}
    assert len(rep["group"]["simplified"]["generators"]) == 2


def test_pi1_rank2_example_requires_bypass(capsys):
    code, out = run(capsys, "pi1", "example:trivial-rank2")
    assert code == EXIT_VALIDATION
    assert "NotSemiample" in out
    code, out = run(capsys, "pi1", "example:trivial-rank2", "--allow-improper")
    assert code == EXIT_OK
    assert "order: trivial" in out
    assert "cross-check passed" in out
    assert "bypassed" in out


def test_validate_not_big(capsys, tmp_path):
    doc = {
        "kind": "ppdivisor",
        "rank_k": 1,
        "tail": [[1]],
        "coefficients": [{"point": "0", "points": [["1/2"]]}, {"point": "inf", "points": [["-1/2"]]}],
    }
    code, out = run(capsys, "validate", write(tmp_path, doc))
    assert code == EXIT_VALIDATION
    assert "NotBig" in out


def test_validate_platonic_line(capsys):
    code, out = run(capsys, "validate", "example:logterminal-(2,3,5)")
    assert code == EXIT_OK
    assert "platonic triple (2, 3, 5): True" in out
    assert "Pass" in out


def test_input_errors(capsys, tmp_path):
    assert run(capsys, "validate", str(tmp_path / "missing.json"))[0] == EXIT_INPUT
    assert run(capsys, "validate", write(tmp_path, "{not json"))[0] == EXIT_INPUT
    assert run(capsys, "toric", "duval:E8")[0] == EXIT_INPUT
    assert run(capsys, "validate", "duval:Z9")[0] == EXIT_INPUT
    assert run(capsys, "validate")[0] == EXIT_INPUT


def test_enumeration_exceeded(capsys, tmp_path):
    doc = {"kind": "presentation", "generators": ["a", "b"], "relators": ["a^2", "b^3", "a b a b a b a b a b"]}
    code, out = run(capsys, "analyze", write(tmp_path, doc), "--max-cosets", "20")
    assert code == EXIT_EXCEEDED
    assert "unknown" in out


def test_toric_and_gap_export(capsys, tmp_path):
    doc = {"kind": "fan", "rank": 2, "cones": [[[0, 1]], [[2, -1]]]}
    code, out = run(capsys, "toric", write(tmp_path, doc), "--export", "gap")
    assert code == EXIT_OK
    assert "fundamental group: Z/2" in out
    assert "FreeGroup(" in out


def test_cstar_from_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO('{"kind":"cstar_bundle","points":[{"e":1,"m":2},{"e":1,"m":3},{"e":-1,"m":2}]}'))
    code, out = run(capsys, "cstar", "-")
    assert code == EXIT_OK
    assert "finite of order 12" in out  # D5


def test_local_faces_flag(capsys):
    code, out = run(capsys, "local-pi1", "example:trivial-rank2", "--faces", "all", "--allow-improper")
    assert code == EXIT_OK
    assert "faces mode: all" in out
    assert "exceeds the ray lattice" in out


def test_json_output_is_deterministic(capsys):
    a = run(capsys, "local-pi1", "duval:D6", "--format", "json")[1]
    b = run(capsys, "local-pi1", "duval:D6", "--format", "json")[1]
    assert a == b


def test_corpus_matches_golden(capsys):
    code, out = run(capsys, "corpus")
    assert code == EXIT_OK
    assert "MISMATCH" not in out
    golden = json.loads(golden_path().read_text())
    assert golden["duval:E8 local-pi1"]["group"]["order"]["value"] == 120


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "tvpi", "local-pi1", "duval:A3"], capture_output=True, text=True)
    assert r.returncode == 0
    assert "finite of order 4" in r.stdout
