import json
import subprocess
import sys

import pytest

from opstree.cli import InputError, main, parse_sequences


@pytest.fixture
def seqfile(tmp_path):
    def write(text, name="seq.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_sequences():
    lines = ["# header", "", "1 2,3", "  -4 ,, 5  ", "#  5 5"]
    assert parse_sequences(lines) == [[1, 2, 3], [-4, 5]]
    with pytest.raises(InputError, match=":2:"):
        parse_sequences(["1 2", "3 x"])
    with pytest.raises(InputError, match="64-bit"):
        parse_sequences([str(2 ** 63)])
    assert parse_sequences([str(-2 ** 63)]) == [[-2 ** 63]]


def test_code(capsys, seqfile):
    path = seqfile("5 2 7 5 1 4 9 4 5\n7\n10,10,10\n")
    code, out, _ = run(capsys, "code", path)
    assert code == 0
    assert out.splitlines() == [
        "(0,0) (0,0) (2,0) (1,1) (0,0) (2,0) (6,0) (2,1) (4,2)",
        "3 1 4 3 0 2 5 2 3",
        "(0,0)",
        "0",
        "(0,0) (0,1) (0,2)",
        "0 0 0",
    ]


def test_code_parse_error(capsys, seqfile):
    code, _, err = run(capsys, "code", seqfile("1 2\n1 two\n"))
    assert code == 2 and ":2:" in err


def test_match(capsys, seqfile):
    text = seqfile("6 8 2 0 7 9 3 1 4 5\n", "text.txt")
    pats = seqfile("1 2 3\n1 3 2\n", "pats.txt")
    code, out, _ = run(capsys, "match", text, pats)
    assert code == 0
    assert out.splitlines() == ["4 8", ""]
    code, out, _ = run(capsys, "match", text, pats, "--json")
    assert json.loads(out) == [
        {"pattern_index": 1, "positions": [4, 8]},
        {"pattern_index": 2, "positions": []},
    ]


def test_match_negative_and_self(capsys, seqfile):
    text = seqfile("6 8 2 0 7 9 3 1 4 5\n", "text.txt")
    code, out, _ = run(capsys, "match", text, seqfile("1 2 3 4 5 6 7 8 9 10 11\n", "p.txt"))
    assert code == 1 and out == "\n"
    code, out, _ = run(capsys, "match", text, text)
    assert code == 0 and out == "1\n"


def test_match_requires_single_text(capsys, seqfile):
    code, _, err = run(capsys, "match", seqfile("1 2\n3 4\n", "t.txt"), seqfile("1\n", "p.txt"))
    assert code == 2 and "exactly one" in err


def test_squares(capsys, seqfile):
    path = seqfile("1 2 1 2\n")
    code, out, _ = run(capsys, "squares", path, "--all")
    assert code == 0
    assert out.splitlines() == ["1 2", "2 2", "3 2", "1 4"]
    code, out, _ = run(capsys, "squares", path, "--length", "2")
    assert (code, out) == (0, "yes\n")
    code, out, _ = run(capsys, "squares", seqfile("1 2 3 2\n", "b.txt"), "--length", "4")
    assert (code, out) == (1, "no\n")
    code, out, _ = run(capsys, "squares", path, "--length", "40")
    assert (code, out) == (1, "no\n")


def test_squares_odd_length(capsys, seqfile):
    with pytest.raises(SystemExit) as exc:
        main(["squares", seqfile("1 2 1 2\n"), "--length", "3"])
    assert exc.value.code == 2


def test_stats(capsys, seqfile):
    code, out, _ = run(capsys, "stats", seqfile("7\n"))
    assert code == 0
    assert "n=1 nodes=1 leaves=1" in out
    code, out, _ = run(capsys, "stats", seqfile("6 8 2 0 7 9 3 1 4 5\n", "f.txt"))
    assert "leaves=10" in out


def test_stats_random_node_bound(capsys, seqfile, rng):
    text = " ".join(str(rng.randint(0, 10**6)) for _ in range(1000))
    code, out, _ = run(capsys, "stats", seqfile(text + "\n"))
    fields = dict(tok.split("=") for tok in out.split())
    assert int(fields["nodes"]) + int(fields["leaves"]) <= 2000


def test_index_then_match(capsys, seqfile, tmp_path):
    text = seqfile("6 8 2 0 7 9 3 1 4 5\n", "text.txt")
    idx = str(tmp_path / "tree.json")
    assert run(capsys, "index", text, "-o", idx)[0] == 0
    code, out, _ = run(capsys, "match", "--index", idx, seqfile("1 2 3\n", "p.txt"))
    assert (code, out) == (0, "4 8\n")
    code, _, err = run(capsys, "match", "--index", text, seqfile("1\n", "q.txt"))
    assert code == 2 and "bad index" in err


def test_stdin_and_module_entry(seqfile):
    proc = subprocess.run([sys.executable, "-m", "opstree", "code", "-"], input="3 1 2\n",
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "(0,0) (0,0) (1,0)\n2 0 1\n"


def test_output_deterministic(capsys, seqfile):
    path = seqfile("3 1 4 1 5 9 2 6 5 3 5 8 9 7 9\n")
    first = run(capsys, "squares", path, "--all")
    second = run(capsys, "squares", path, "--all")
    assert first == second
