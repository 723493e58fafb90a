from __future__ import annotations

import json
import subprocess
import sys

import pytest

from catkit.cli import run
from catkit.sparse import SparseMat


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gaussian(capsys):
    assert call(capsys, "gaussian", "2", "1", "2")[:2] == (0, "3\n")
    assert call(capsys, "gaussian", "2", "1")[1] == "v^2 + 1\n"
    assert call(capsys, "gaussian", "2", "5", "2")[0] == 2


def test_invariant_matches_oracle(capsys):
    code, out, _ = call(capsys, "invariant", "--strands", "2", "--word", "[1,1,1]",
                        "--operator", "jones")
    assert code == 0
    assert out == "v^-2 + v^-6 - v^-8\n"
    assert call(capsys, "invariant", "--strands", "2", "--word", "[1,1,1]", "--oracle")[1] == out


def test_invariant_from_braid_file(capsys, tmp_path):
    f = tmp_path / "fig8.json"
    f.write_text(json.dumps({"strands": 3, "word": [1, -2, 1, -2]}))
    code, out, _ = call(capsys, "invariant", "--braid", str(f))
    assert code == 0 and out == "v^4 - v^2 + 1 - v^-2 + v^-4\n"


def test_ybe_check_identity_file(capsys, tmp_path):
    f = tmp_path / "identity2.json"
    f.write_text(json.dumps(SparseMat.identity(4).to_json()))
    assert call(capsys, "ybe-check", "--file", str(f))[:2] == (0, "PASS\n")


def test_ybe_check_failure_exit_code(capsys, tmp_path):
    f = tmp_path / "bad.json"
    R = SparseMat.from_dense([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 1]])
    f.write_text(json.dumps(R.to_json()))
    assert call(capsys, "ybe-check", "--file", str(f))[:2] == (1, "FAIL\n")


def test_hecke_check(capsys):
    assert call(capsys, "hecke-check")[:2] == (0, "PASS\n")
    assert call(capsys, "hecke-check", "--case", "distinct", "--s", "1")[0] == 1


def test_braid_summary(capsys):
    code, out, _ = call(capsys, "braid", "--strands", "3", "--word", "[1,2]")
    assert code == 0
    assert "permutation: [3, 1, 2]" in out and "components: 1" in out


def test_hall_product(capsys):
    data = json.dumps({"f": {"1": 1}, "g": {"1": 1}})
    assert call(capsys, "hall-product", data)[1] == "2: v^3 + v\n"


def test_green_conv(capsys):
    code, out, _ = call(capsys, "green-conv", "--q", "2", "--check-commutative")
    assert code == 0
    assert out.splitlines()[0] == "class 0 (order 1, size 1): 3"
    assert out.endswith("commutative: PASS\n")


def test_species(capsys):
    assert call(capsys, "species", "--outer", "E", "--inner", "E+")[1] == "1 1 2 5 15 52 203\n"
    assert call(capsys, "species", "--outer", "nope")[0] == 2


def test_mackey_check(capsys, tmp_path):
    f = tmp_path / "c2.json"
    f.write_text(json.dumps({"table": [[0, 1], [1, 0]]}))
    code, out, _ = call(capsys, "mackey-check", "--group", str(f))
    assert code == 0 and "FAIL" not in out


def test_burnside(capsys):
    code, out, _ = call(capsys, "burnside", "--named", "C2", "--x", '{"orbits": [[]]}',
                        "--y", '{"orbits": [[]]}', "--check")
    assert code == 0
    assert out == "2*[G/{0}]\ndirect decomposition: PASS\n"


def test_duoid_check(capsys):
    assert call(capsys, "duoid-check", "--named", "arrow",
                "--duoid", '{"kind": "codiscrete", "k": 2}')[0] == 0
    code, out, _ = call(capsys, "duoid-check", "--named", "Z2",
                        "--duoid", '{"kind": "broken_interchange"}')
    assert code == 1 and "2-category: FAIL" in out


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["invariant", "--braid", "/no/such/file.json"],
    ["hall-product", "{not json"],
    ["invariant", "--strands", "2", "--word", "[3]"],
    ["burnside", "--named", "C2", "--x", '{"nothing": 1}', "--y", '{"orbits": [[]]}'],
])
def test_usage_and_input_errors(capsys, argv):
    assert call(capsys, *argv)[0] == 2


def test_output_is_deterministic(capsys):
    a = call(capsys, "mackey-check", "--named", "S3")
    b = call(capsys, "mackey-check", "--named", "S3")
    assert a == b


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "catkit.cli", "gaussian", "4", "2", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "35\n"
