import json
import subprocess
import sys

import pytest

from conftest import GOLDEN
from permquot.automata import Dfa, minimize
from permquot.cli import main
from permquot.spectrum import cycle_automaton
from permquot.textfmt import format_dfa, parse_dfa, read_dfa, write_dfa
from permquot.witnesses import quotient_divisor, quotient_source


@pytest.fixture
def files(tmp_path):
    def put(name, dfa):
        path = tmp_path / name
        write_dfa(dfa, path)
        return str(path)

    return put


def test_witness_source_matches_golden(capsys):
    assert main(["witness", "source", "--m", "2", "--alpha", "3"]) == 0
    assert capsys.readouterr().out == (GOLDEN / "source_m2_alpha3.txt").read_text()


def test_witness_cycle_zero(capsys):
    assert main(["witness", "cycle", "--t", "0"]) == 0
    dfa = parse_dfa(capsys.readouterr().out)
    assert dfa.state_count == 1 and not dfa.finals


def test_witness_divisor_to_file(tmp_path):
    out = tmp_path / "b.txt"
    assert main(["witness", "divisor", "--n", "1", "--alpha", "2", "--out", str(out)]) == 0
    assert read_dfa(out).state_count == 6


@pytest.mark.parametrize(
    "argv",
    [
        ["witness", "source", "--m", "3", "--alpha", "2"],
        ["witness", "source", "--m", "1"],
        ["witness", "cycle", "--t", "-1"],
        ["verify-theorem", "--m", "0", "--n", "1", "--alpha-max", "3"],
        ["verify-theorem", "--m", "1", "--n", "1"],
        ["unary-bruteforce", "--m", "1", "--n", "1", "--cycle-bound", "1"],
        ["zero-scan", "--state-bound", "0"],
    ],
)
def test_usage_errors(argv, capsys):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["witness", "bogus"])
    assert info.value.code == 2


def test_quotient_witness(files, capsys):
    a = files("a.txt", quotient_source(2, 3))
    b = files("b.txt", quotient_divisor(2, 3))
    assert main(["quotient", a, b]) == 0
    out = capsys.readouterr().out
    # stdout stays a valid automaton file, summary in comments
    dfa = parse_dfa(out)
    assert dfa.finals == {1, 2, 3}
    assert "# asc: 3" in out
    assert "# |F~|: 3" in out
    assert "# A permutation automaton: yes" in out
    assert "# |G_B|: 6" in out


def test_quotient_machine_and_out(files, tmp_path, capsys):
    a = files("a.txt", quotient_source(2, 3))
    b = files("b.txt", quotient_divisor(2, 3))
    out = tmp_path / "q.txt"
    assert main(["quotient", a, b, "--out", str(out), "--format", "machine"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["asc"] == 3
    assert data["saturated_finals"] == [1, 2, 3]
    assert read_dfa(out).finals == {1, 2, 3}
    assert parse_dfa(data["automaton"]) == read_dfa(out)


def test_quotient_text_with_out(files, tmp_path, capsys):
    a = files("a.txt", quotient_source(1, 1))
    b = files("b.txt", quotient_divisor(1, 1))
    out = tmp_path / "q.txt"
    assert main(["quotient", a, b, "--out", str(out)]) == 0
    assert "asc: 1" in capsys.readouterr().out
    assert format_dfa(read_dfa(out)) == (GOLDEN / "quotient_m1_n1_alpha1.txt").read_text()


def test_quotient_empty_and_unary(files, capsys):
    empty = files("e.txt", Dfa(1, ("a", "b", "c"), {x: (1,) for x in "abc"}, 1, frozenset()))
    b = files("b.txt", quotient_divisor(1, 2))
    assert main(["quotient", empty, b]) == 0
    assert "# asc: 0" in capsys.readouterr().out
    k = files("k.txt", cycle_automaton(2, (0,)))
    l = files("l.txt", cycle_automaton(2, (1,)))
    assert main(["quotient", k, l]) == 0
    assert parse_dfa(capsys.readouterr().out).finals == {2}


def test_quotient_errors(files, tmp_path, capsys):
    a = files("a.txt", quotient_source(1, 1))
    u = files("u.txt", cycle_automaton(2, (0,)))
    assert main(["quotient", a, u]) == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("alphabet: a\n")
    assert main(["quotient", str(bad), a]) == 2
    assert main(["quotient", str(tmp_path / "missing.txt"), a]) == 2


def test_asc_minimize_equiv(files, tmp_path, capsys):
    src = files("a.txt", quotient_source(2, 3))
    assert main(["asc", src]) == 0
    assert capsys.readouterr().out.strip() == "2"
    empty = files("e.txt", Dfa(2, ("a",), {"a": (2, 1)}, 1, frozenset()))
    assert main(["asc", empty]) == 0
    assert capsys.readouterr().out.strip() == "0"

    out = tmp_path / "min.txt"
    assert main(["minimize", src, "--out", str(out)]) == 0
    assert read_dfa(out) == minimize(quotient_source(2, 3))
    assert main(["equiv", src, str(out)]) == 0
    assert capsys.readouterr().out.strip() == "equal"

    q = files("q.txt", quotient_source(2, 3).with_finals({1, 2, 3}))
    assert main(["equiv", src, q]) == 1
    assert "different" in capsys.readouterr().out


def test_verify_theorem_text(capsys):
    assert main(["verify-theorem", "--m", "1", "--n", "1", "--alpha-max", "4"]) == 0
    out = capsys.readouterr().out
    assert "attained: 1 2 3 4" in out
    assert "status: PASS" in out


def test_verify_theorem_machine(capsys):
    argv = ["verify-theorem", "--m", "2", "--n", "2", "--alpha-max", "6", "--format", "machine"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    data = json.loads(first)
    assert data["attained"] == [1, 2, 3, 4, 5, 6]
    assert data["records"][0]["classes"] == ["unary-search"]
    assert main(argv) == 0
    assert capsys.readouterr().out == first


def test_verify_theorem_partial_exits_1(capsys):
    argv = ["verify-theorem", "--m", "2", "--n", "2", "--alpha-max", "4", "--cycle-bound", "3"]
    assert main(argv) == 1
    assert "status: FAIL" in capsys.readouterr().out


def test_unary_and_zero_scan(capsys):
    assert main(["unary-bruteforce", "--m", "1", "--n", "2"]) == 0
    assert "complete" in capsys.readouterr().out
    assert main(["unary-bruteforce", "--m", "2", "--n", "2", "--cycle-bound", "4"]) == 0
    assert "partial: missing 2 4" in capsys.readouterr().out
    assert main(["zero-scan", "--state-bound", "3", "--format", "machine"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["ok"] and data["pairs_checked"] > 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "permquot.cli", "witness", "cycle", "--t", "2"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert parse_dfa(proc.stdout).finals == {1, 2}
