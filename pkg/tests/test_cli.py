from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from homflygauss.cli import main

from conftest import LEFT_TREFOIL_PD, SPEC_TREFOIL


@pytest.fixture
def trefoil_file(tmp_path):
    path = tmp_path / "trefoil.txt"
    path.write_text(SPEC_TREFOIL)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_homfly_both(capsys, trefoil_file):
    code, out, _ = run(capsys, "homfly", trefoil_file, "--method", "both")
    assert code == 0
    assert out == "+2*a^2*z^0 +1*a^2*z^2 -1*a^4*z^0\n"


def test_homfly_json_and_skein(capsys, trefoil_file):
    code, out, _ = run(capsys, "homfly", trefoil_file, "--format", "json")
    assert code == 0
    assert json.loads(out)["polynomial"] == {"terms": [[2, 0, 2], [2, 2, 1], [4, 0, -1]]}
    code, out, _ = run(capsys, "homfly", trefoil_file, "--method", "skein")
    assert out.strip() == "+2*a^2*z^0 +1*a^2*z^2 -1*a^4*z^0"


def test_homfly_unlink_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("\n\n"))
    code, out, _ = run(capsys, "homfly", "-")
    assert code == 0
    assert out == "-1*a^-1*z^-1 +1*a^1*z^-1\n"


def test_homfly_pd_input(capsys, tmp_path):
    path = tmp_path / "t.json"
    path.write_text(json.dumps({"crossings": LEFT_TREFOIL_PD, "components": [{"base_edge": 2}]}))
    code, out, _ = run(capsys, "homfly", str(path), "--input-format", "pd")
    assert code == 0 and out.startswith("+2*a^2*z^0")


def test_parse_error_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("U1- O2-\nO1- Q2-\n")
    code, _, err = run(capsys, "homfly", str(path))
    assert code == 2
    assert "line 2, column 5" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "homfly", "/nonexistent/diagram.txt")
    assert code == 2


def test_pkl_values(capsys, trefoil_file):
    assert run(capsys, "pkl", trefoil_file, "--k", "1", "--l", "2", "--verify")[:2] == (0, "2\n")
    assert run(capsys, "pkl", trefoil_file, "--k", "3", "--l", "0")[:2] == (0, "-8\n")


def test_pkl_table(capsys, trefoil_file):
    code, out, _ = run(capsys, "pkl", trefoil_file, "--max-degree", "2", "--verify")
    assert code == 0
    lines = out.splitlines()
    assert "p_{0,0} = 1" in lines and "p_{0,2} = 1" in lines and "p_{2,0} = -4" in lines
    code, out, _ = run(capsys, "pkl", trefoil_file, "--max-degree", "2", "--format", "json")
    values = {(v["k"], v["l"]): v["value"] for v in json.loads(out)["values"]}
    assert values[(0, 2)] == "1"


def test_pkl_argument_errors(capsys, trefoil_file):
    assert run(capsys, "pkl", trefoil_file, "--k", "1")[0] == 2
    assert run(capsys, "pkl", trefoil_file, "--k", "3", "--l", "0", "--verify", "--cutoff", "1")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["pkl", trefoil_file, "--k", "-1", "--l", "0"])
    assert info.value.code == 2


def test_verification_failure_exit_code(capsys, trefoil_file, monkeypatch):
    import homflygauss.cli as cli

    monkeypatch.setattr(cli, "skein_homfly", lambda g: cli.homfly_descending(g) + 1)
    code, _, err = run(capsys, "homfly", trefoil_file, "--method", "both")
    assert code == 3
    assert "verification failed" in err


def test_gen_akl(capsys):
    code, out, _ = run(capsys, "gen-akl", "--k", "0", "--l", "2", "--unsigned", "--format", "json")
    assert code == 0
    assert json.loads(out)["terms"] == [{"coeff": 1, "diagram": "U1+ O2+ O1+ U2+\n", "signed": False}]
    code, out, _ = run(capsys, "gen-akl", "--k", "1", "--l", "2", "--unsigned")
    assert len(out.splitlines()) == 7
    code, out, _ = run(capsys, "gen-akl", "--k", "1", "--l", "0")
    assert out == "0\n"


def test_fuzz_is_deterministic(capsys, trefoil_file):
    first = run(capsys, "fuzz", trefoil_file, "--seed", "5", "--iters", "30")
    second = run(capsys, "fuzz", trefoil_file, "--seed", "5", "--iters", "30")
    assert first[0] == 0 and first == second
    assert "0 failures" in first[1]
    code, out, _ = run(capsys, "fuzz", "--seed", "1", "--iters", "20", "--format", "json")
    assert code == 0 and json.loads(out)["seed"] == 1


def test_module_entry_point(trefoil_file):
    proc = subprocess.run(
        [sys.executable, "-m", "homflygauss", "homfly", trefoil_file],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "+2*a^2*z^0 +1*a^2*z^2 -1*a^4*z^0"
