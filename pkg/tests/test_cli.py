import json
import subprocess
import sys

import pytest

from triquad.cli import EXIT_DOMAIN, EXIT_GUARD, EXIT_OK, EXIT_USAGE, run
from triquad.matrix import is_solution, parse_matrix_document
from triquad.quad import idempotent_spec
from triquad.ring import FiniteRing


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    assert call(capsys, "count", "--n", "3", "--q", "2") == (EXIT_OK, "26\n", "")
    code, out, _ = call(capsys, "count", "--n", "2", "--q", "3", "--splits")
    assert out.splitlines() == ["8", "0 2 1 1 1", "1 1 2 3 6", "2 0 1 1 1"]


def test_count_table(capsys, tmp_path):
    code, out, _ = call(capsys, "count-table", "--n", "1..2", "--q", "2,3")
    assert out == "n,q,total\n1,2,2\n1,3,2\n2,2,6\n2,3,8\n"
    path = tmp_path / "t.csv"
    code, out, _ = call(capsys, "count-table", "--n", "2", "--q", "2", "--csv", str(path))
    assert code == EXIT_OK and out == ""
    assert path.read_text() == "n,q,total\n2,2,6\n"


def test_brute_count(capsys):
    assert call(capsys, "brute-count", "--ring", "zmod:6", "--roots", "3,4", "--n", "2")[1] == "14\n"
    code, out, _ = call(capsys, "brute-count", "--ring", "zmod:6", "--roots", "0,1", "--n", "1", "--no-diagonal-filter")
    assert out == "4\n"


def test_guard_exit(capsys):
    code, out, err = call(capsys, "brute-count", "--ring", "zmod:6", "--roots", "0,1", "--n", "4")
    assert code == EXIT_GUARD and out == "" and err.startswith("error: guard:")
    code, out, _ = call(capsys, "enumerate", "--ring", "zmod:5", "--roots", "1,4", "--n", "3", "--ceiling", "5")
    assert code == EXIT_GUARD and out == ""


def test_domain_errors(capsys):
    code, out, err = call(capsys, "brute-count", "--ring", "zmod:6", "--roots", "0,3", "--n", "2")
    assert code == EXIT_DOMAIN and out == ""
    assert err.count("\n") == 1 and err.startswith("error: difference-not-unit:")
    code, _, err = call(capsys, "count-table", "--n", "1", "--q", "2", "--csv", "/nonexistent/dir/x.csv")
    assert code == EXIT_DOMAIN
    assert call(capsys, "random", "--ring", "quaternion:4", "--roots", "idempotent", "--n", "2", "--seed", "1")[0] == EXIT_DOMAIN


def test_usage_errors(capsys):
    assert call(capsys, "frobnicate")[0] == EXIT_USAGE
    assert call(capsys, "count", "--n", "x", "--q", "2")[0] == EXIT_USAGE
    assert call(capsys)[0] == EXIT_USAGE


def test_enumerate(capsys, tmp_path):
    path = tmp_path / "sols.jsonl"
    code, out, _ = call(capsys, "enumerate", "--ring", "zmod:2", "--roots", "0,1", "--n", "3", "--out", str(path))
    assert code == EXIT_OK
    lines = path.read_text().splitlines()
    assert len(lines) == 26 and len(set(lines)) == 26
    spec = idempotent_spec(FiniteRing("zmod", 2))
    assert all(is_solution(parse_matrix_document(line), spec) for line in lines)


def test_construct(capsys, tmp_path):
    free = tmp_path / "free.json"
    free.write_text(json.dumps({"1,2": [2], "2,3": [3]}))
    code, out, _ = call(capsys, "construct", "--ring", "zmod:5", "--roots", "0,1", "--pattern", "ABA", "--free", str(free))
    assert code == EXIT_OK
    assert json.loads(out) == {"ring": "zmod:5", "n": 3, "rows": [[[0], [2], [1]], [[1], [3]], [[0]]]}

    free.write_text(json.dumps({"1,2": [2]}))
    code, out, err = call(capsys, "construct", "--ring", "zmod:5", "--roots", "0,1", "--pattern", "ABA", "--free", str(free))
    assert code == EXIT_DOMAIN and out == "" and "missing" in err

    args = ["construct", "--ring", "quaternion:3", "--roots", "involution", "--pattern", "ABBA", "--random", "--seed", "9"]
    first = call(capsys, *args)
    assert first[0] == EXIT_OK and first == call(capsys, *args)


def test_random_and_truncate_deterministic(capsys):
    args = ["random", "--ring", "gaussian:3", "--roots", "[0,1],[0,2]", "--n", "6", "--seed", "42"]
    assert call(capsys, *args) == call(capsys, *args)
    targs = ["truncate", "--ring", "zmod:5", "--roots", "involution", "--pattern-rule", "AAB", "--seed", "3", "--n", "9"]
    code, out, _ = call(capsys, *targs)
    assert code == EXIT_OK and (code, out, "") == call(capsys, *targs)
    doc = parse_matrix_document(out)
    assert doc.n == 9 and [x.coords[0] for x in doc.diagonal_entries] == [1, 1, 4] * 3


def _doc(tmp_path, rows):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"ring": "zmod:5", "n": len(rows), "rows": rows}))
    return str(path)


def test_verify(capsys, tmp_path):
    mixed = _doc(tmp_path, [[[0], [3]], [[1]]])
    assert call(capsys, "verify", "--doc", mixed, "--roots", "0,1") == (EXIT_OK, "solution: true\n", "")
    same = _doc(tmp_path, [[[1], [2]], [[1]]])
    code, out, _ = call(capsys, "verify", "--doc", same, "--roots", "0,1")
    assert code == EXIT_OK and out == "solution: false\nresidual: (1,2)\n"
    bad = _doc(tmp_path, [[[1], [2]], [[1], [1]]])
    code, out, err = call(capsys, "verify", "--doc", bad, "--roots", "0,1")
    assert code == EXIT_DOMAIN and out == "" and "row 2" in err
    assert call(capsys, "verify", "--doc", mixed, "--roots", "0,1", "--ring", "zmod:7")[0] == EXIT_DOMAIN


def test_selfcheck(capsys):
    code, out, _ = call(capsys, "selfcheck")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines and all(line.startswith("ok ") for line in lines)
    for kind in ("zmod", "gaussian", "quaternion"):
        assert any(f" {kind}:" in line for line in lines)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "triquad.cli", "count", "--n", "10", "--q", "2"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "16011372546\n"
