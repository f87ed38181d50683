"""Black-box CLI contract: exit codes, formats, determinism."""

import json
import subprocess
import sys
from pathlib import Path

CLI = [sys.executable, "-m", "poissonlie"]


def run_cli(*args, **kwargs):
    return subprocess.run(
        CLI + list(args), capture_output=True, text=True, **kwargs
    )


def show(name: str, tmp_path: Path) -> Path:
    out = run_cli("catalog", "show", name)
    assert out.returncode == 0, out.stderr
    path = tmp_path / f"{name}.json"
    path.write_text(out.stdout)
    return path


def test_check_satisfied_exit_zero(tmp_path):
    path = show("dim3-abelian", tmp_path)
    result = run_cli("check", str(path))
    assert result.returncode == 0
    assert "status:    satisfied" in result.stdout


def test_check_violated_exit_one(tmp_path):
    path = show("dim3-family-a1", tmp_path)
    result = run_cli("check", str(path))
    assert result.returncode == 1
    assert "violated" in result.stdout
    # the witness names the offending contraction
    assert "d(i_xi(e2) mu) != 0" in result.stdout


def test_check_undecidable_exit_three(tmp_path):
    path = show("dim4-nonunimodular", tmp_path)
    result = run_cli("check", str(path))
    assert result.returncode == 3
    assert "necessary-only-passed" in result.stdout


def test_check_invalid_input_exit_two(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "metric": [["1", "1/0"], ["0", "1"]]}')
    result = run_cli("check", str(bad))
    assert result.returncode == 2
    assert "malformed-rational" in result.stderr
    assert result.stdout == ""


def test_check_non_bialgebra_exit_two(tmp_path):
    # valid document, but the cocycle fails the cocycle condition
    doc = {
        "dim": 3,
        "structure_constants": [[1, 2, 3, "1"], [1, 3, 2, "-1"]],
        "metric": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
        "cocycle": [[2, 1, 3, "1"]],
    }
    path = tmp_path / "noncocycle.json"
    path.write_text(json.dumps(doc))
    result = run_cli("check", str(path))
    assert result.returncode == 2


def test_check_machine_format_roundtrips(tmp_path):
    path = show("dim3-heisenberg", tmp_path)
    result = run_cli("check", str(path), "--format", "machine")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["schema"] == 1
    assert payload["report"]["status"] == "satisfied"
    assert payload["report"]["kappa"] == ["0", "0", "0"]
    assert json.loads(json.dumps(payload)) == payload


def test_check_is_deterministic(tmp_path):
    path = show("dim4-unimodular-d", tmp_path)
    a = run_cli("check", str(path), "--format", "machine")
    b = run_cli("check", str(path), "--format", "machine")
    assert a.stdout == b.stdout and a.returncode == b.returncode


def test_milnor_command(tmp_path):
    path = show("dim3-abelian", tmp_path)
    result = run_cli("milnor", str(path))
    assert result.returncode == 0
    assert "milnor:          yes" in result.stdout
    path2 = show("dim3-heisenberg", tmp_path)
    result2 = run_cli("milnor", str(path2))
    # the Heisenberg base algebra itself is never flat
    assert result2.returncode == 1


def test_classify_command_matches_solution_dimensions():
    result = run_cli("classify", "--dim", "3", "--flags", "cocycle,flat")
    assert result.returncode == 0
    assert "solution space dimension: 2" in result.stdout
    result = run_cli(
        "classify", "--dim", "3", "--flags", "cocycle,flat,volume,unimodular",
        "--format", "machine",
    )
    payload = json.loads(result.stdout)
    assert payload["dimension"] == 1
    result = run_cli("classify", "--dim", "4", "--quadratics", "--format", "machine")
    payload = json.loads(result.stdout)
    assert payload["dimension"] == 5
    assert len(payload["quadratic_constraints"]) == 4


def test_catalog_list_and_verify():
    result = run_cli("catalog", "list")
    assert result.returncode == 0
    assert "dim3-heisenberg" in result.stdout
    result = run_cli("catalog", "verify", "dim3-heisenberg")
    assert result.returncode == 0
    assert "PASS" in result.stdout
    result = run_cli("catalog", "verify", "no-such-entry")
    assert result.returncode == 2


def test_numcheck_command():
    result = run_cli("numcheck", "dim4-nonunimodular", "--points", "25")
    assert result.returncode == 0
    assert "PASS" in result.stdout
    result = run_cli("numcheck", "unknown-model")
    assert result.returncode == 2


def test_numcheck_machine_format():
    result = run_cli(
        "numcheck", "dim3-heisenberg", "--points", "10", "--format", "machine"
    )
    payload = json.loads(result.stdout)
    assert payload["schema"] == 1
    assert payload["passed"] is True
    assert payload["volume"]["max_residual"] < 1e-5
    assert payload["multiplicativity"]["max_deviation"] < 1e-5
