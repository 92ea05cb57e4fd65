import io
import json

import pytest

from tabkey import cli
from tabkey import verify as V
from tabkey.tableau import parse_tableau
from tabkey.verify import FIVE_COLUMN

CENTER = "0 1 0\n1 -1 1\n0 1 0\n"


def run(monkeypatch, capsys, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_leftkey_text(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["leftkey"], FIVE_COLUMN)
    assert code == 0
    assert out == "n=6: 5,2,1 | 5,2,1 | 5,2 | 5,2 | 5"


@pytest.mark.parametrize("command", ["leftkey", "rightkey"])
def test_methods_agree(monkeypatch, capsys, command):
    _, a, _ = run(monkeypatch, capsys, [command, "--method", "elimination"], FIVE_COLUMN)
    _, b, _ = run(monkeypatch, capsys, [command, "--method", "classical"], FIVE_COLUMN)
    assert a == b


def test_rightkey(monkeypatch, capsys):
    _, out, _ = run(monkeypatch, capsys, ["rightkey"], "n=5: 4,2,1 | 5,2 | 5")
    assert out == "n=5: 5,2,1 | 5,2 | 5"


def test_convert_round_trip(monkeypatch, capsys):
    _, matrix, _ = run(monkeypatch, capsys, ["convert"], FIVE_COLUMN)
    _, back, _ = run(monkeypatch, capsys, ["convert"], matrix)
    assert parse_tableau(back) == parse_tableau(FIVE_COLUMN)
    _, compact, _ = run(monkeypatch, capsys, ["convert", "--format", "compact"], FIVE_COLUMN)
    _, back, _ = run(monkeypatch, capsys, ["convert"], compact)
    assert back == FIVE_COLUMN


def test_json_io(monkeypatch, capsys):
    _, out, _ = run(monkeypatch, capsys, ["convert", "--format", "json"], FIVE_COLUMN)
    data = json.loads(out)
    assert data["rows"] == 5 and data["cols"] == 6
    _, back, _ = run(monkeypatch, capsys, ["convert"], out)
    assert back == FIVE_COLUMN


def test_leftkey_on_matrix_returns_matrix(monkeypatch, capsys):
    _, matrix, _ = run(monkeypatch, capsys, ["convert"], FIVE_COLUMN)
    _, out, _ = run(monkeypatch, capsys, ["leftkey"], matrix)
    assert out.splitlines()[0] == "0 0 0 0 1 0"


def test_pseudokey_and_complement(monkeypatch, capsys):
    _, out, _ = run(monkeypatch, capsys, ["pseudokey"], FIVE_COLUMN)
    assert out == "n=6: 5,2,1 | 5,2,1 | 5,1 | 5,1 | 5"
    _, out, _ = run(monkeypatch, capsys, ["pseudokey", "--format", "compact"],
                    "0 1 0\n1 -1 1\n0 1 0")
    assert out == "+..\n..+\n.+."
    _, out, _ = run(monkeypatch, capsys, ["complement"], FIVE_COLUMN)
    assert out == "n=6: 5,4,3,2,1 | 5,3,2,1 | 6,3,2,1 | 6,3,1 | 6,4,3"


def test_asm_triangle_round_trip(monkeypatch, capsys):
    code, tri, _ = run(monkeypatch, capsys, ["asm2mt"], CENTER)
    assert code == 0 and tri == "n=3: 3,2,1 | 3,1 | 2"
    _, back, _ = run(monkeypatch, capsys, ["mt2asm"], tri)
    assert back == CENTER.strip()
    _, drawn, _ = run(monkeypatch, capsys, ["asm2mt", "--render"], CENTER)
    assert drawn.startswith("# non-canonical")


def test_keyasm(monkeypatch, capsys):
    _, out, _ = run(monkeypatch, capsys, ["keyasm", "--permutation"], CENTER)
    assert out == "1 3 2"
    _, a, _ = run(monkeypatch, capsys, ["keyasm"], CENTER)
    _, b, _ = run(monkeypatch, capsys, ["keyasm", "--method", "classical"], CENTER)
    assert a == b == "1 0 0\n0 0 1\n0 1 0"


def test_lattice_commands(monkeypatch, capsys):
    pair = "n=3: 3,2,1 | 2,1 | 1\nn=3: 3,2,1 | 3,2 | 3\n"
    _, meet, _ = run(monkeypatch, capsys, ["meet"], pair)
    _, join, _ = run(monkeypatch, capsys, ["join"], pair)
    assert meet == "n=3: 3,2,1 | 2,1 | 1"
    assert join == "n=3: 3,2,1 | 3,2 | 3"
    _, leq, _ = run(monkeypatch, capsys, ["leq"], pair)
    assert leq == "true"
    _, leq, _ = run(monkeypatch, capsys, ["leq"], "\n".join(reversed(pair.split("\n")[:2])))
    assert leq == "false"
    _, out, _ = run(monkeypatch, capsys, ["join"], CENTER + "\n1 0 0\n0 1 0\n0 0 1\n")
    assert out == CENTER.strip()


def test_census(monkeypatch, capsys):
    _, out, _ = run(monkeypatch, capsys, ["census", "--size", "4", "--jobs", "1"])
    assert json.loads(out) == {"n": 4, "total": 42,
                               "by_minus_ones": {"0": 24, "1": 16, "2": 2}}
    _, out, _ = run(monkeypatch, capsys, ["census", "--size", "3", "--format", "csv"])
    assert out.splitlines() == ["n,k,count", "3,0,6", "3,1,1"]


def test_patterns132(monkeypatch, capsys):
    _, out, _ = run(monkeypatch, capsys, ["patterns132", "--size", "5"])
    assert json.loads(out) == {"n": 5, "closed_form": 200, "brute_force": 200,
                               "asms_with_one_minus_one": 200}


def test_in_file(monkeypatch, capsys, tmp_path):
    path = tmp_path / "t.txt"
    path.write_text(FIVE_COLUMN)
    code, out, _ = run(monkeypatch, capsys, ["leftkey", "--in", str(path)])
    assert code == 0 and out.startswith("n=6: 5,2,1")


@pytest.mark.parametrize("argv, stdin", [
    (["leftkey"], "n=5: 4,x,1"),
    (["leftkey"], ""),
    (["leftkey"], "{not json"),
    (["meet"], "n=3: 3,2,1 | 2,1 | 1"),
])
def test_parse_errors_exit_2(monkeypatch, capsys, argv, stdin):
    code, _, err = run(monkeypatch, capsys, argv, stdin)
    assert code == cli.EXIT_PARSE
    assert "parse error" in err


@pytest.mark.parametrize("argv, stdin", [
    (["leftkey"], "n=5: 1,2 | 3"),
    (["keyasm"], "1 0\n0 0\n"),
    (["asm2mt"], "1 -1\n0 1\n"),
    (["mt2asm"], "n=3: 3,2,1 | 2,1 | 3"),
])
def test_invalid_input_exit_3(monkeypatch, capsys, argv, stdin):
    code, _, err = run(monkeypatch, capsys, argv, stdin)
    assert code == cli.EXIT_INVALID
    assert "invalid input" in err


def test_verify_passes(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["verify", "--max-size", "4",
                                             "--tableau-alphabet", "3", "--jobs", "1"])
    assert code == 0
    assert out.splitlines()[-1].split()[0] == f"{len(out.splitlines()) - 1}/{len(out.splitlines()) - 1}"


def test_verify_failure_exit_4(monkeypatch, capsys):
    real = V.run_all

    def broken(**kwargs):
        return real(**kwargs) + [V.CheckResult("forced", False, 1, "injected")]

    monkeypatch.setattr(V, "run_all", broken)
    code, out, _ = run(monkeypatch, capsys, ["verify", "--max-size", "3",
                                             "--tableau-alphabet", "2", "--jobs", "1"])
    assert code == cli.EXIT_VERIFY
    assert "[FAIL] forced" in out
