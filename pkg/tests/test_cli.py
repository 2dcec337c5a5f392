import csv
import io
import json
from pathlib import Path

import pytest

from src.cli import parse_link_file, parse_matrix_file, parse_word, run, serialize_link_file
from src.errors import LinkFileError
from src.links import hopf_link

ROOT = Path(__file__).resolve().parent.parent
TESTDATA = ROOT / "testdata"


@pytest.fixture(autouse=True)
def _repo_root(monkeypatch):
    monkeypatch.chdir(ROOT)
    for name in ("MILNOR_OUTPUT_FORMAT", "MILNOR_DEFAULT_CAP", "MILNOR_WORKERS", "MILNOR_TESTDATA_DIR"):
        monkeypatch.delenv(name, raising=False)


def invoke(*argv):
    out = io.StringIO()
    status = run(list(argv), out=out)
    return status, out.getvalue()


# =============================================================================
# Link files
# =============================================================================

def test_parse_hopf_text():
    link = parse_link_file("components 2\nvalid_to 4\nlongitude 1 = m2\nlongitude 2 = m1")
    assert link.longitudes == hopf_link().longitudes
    assert link.valid_to == 4


def test_valid_to_is_optional():
    link = parse_link_file("components 2\nlongitude 1 = e\nlongitude 2 = e\n")
    assert link.valid_to is None


def test_bracket_expands_to_commutator():
    word = parse_word("[m2, m3]", 3)
    assert str(word) == "m2 m3 m2^-1 m3^-1"
    assert str(parse_word("m1 m1^-1 e", 3)) == "e"


@pytest.mark.parametrize(
    "text,message,line,column",
    [
        ("components 3\nlongitude 1 = m9\n", "m9 out of range", 2, 15),
        ("components 2\nlongitude 1 = m2\n", "missing longitude 2", 3, 1),
        ("components 2\nlongitude 1 = m2\nlongitude 1 = m1\n", "duplicate longitude 1", 3, 11),
        ("components 2\nlongitude 1 = m2 x\n", "unknown token 'x'", 2, 18),
        ("longitude 1 = m2\n", "'components' must come before", 1, 1),
        ("components 2\nlongitude 1 = [m2, m1\n", "expected ']'", 2, 22),
        ("components 2\nlongitude 1 = \n", "empty word", 2, 1),
        ("components two\n", "positive integer", 1, 12),
        ("components 2\nframing 1 = 0\n", "unknown token 'framing'", 2, 1),
    ],
)
def test_link_file_errors(text, message, line, column):
    with pytest.raises(LinkFileError) as exc:
        parse_link_file(text)
    assert message in str(exc.value)
    assert (exc.value.line, exc.value.column) == (line, column)


@pytest.mark.parametrize("path", sorted(TESTDATA.glob("*.mlnk")), ids=lambda p: p.name)
def test_serialization_round_trip(path):
    link = parse_link_file(path.read_text(encoding="utf-8"))
    assert parse_link_file(serialize_link_file(link)) == link


def test_matrix_file():
    matrix = parse_matrix_file((TESTDATA / "lens_5_2.mat").read_text(encoding="utf-8"))
    assert matrix.entries == ((3, 1), (1, 2))
    with pytest.raises(LinkFileError) as exc:
        parse_matrix_file("1 2\n2 x\n")
    assert (exc.value.line, exc.value.column) == (2, 3)
    with pytest.raises(LinkFileError):
        parse_matrix_file("1 2\n2\n")


# =============================================================================
# Commands
# =============================================================================

def test_table1_matches_golden_file():
    status, out = invoke("table1", "--limit", "52")
    assert status == 0
    assert out == (TESTDATA / "table1_52.txt").read_text(encoding="utf-8")


def test_table1_formats_carry_the_same_numbers():
    _, text = invoke("table1", "--limit", "20")
    _, csv_out = invoke("table1", "--limit", "20", "--format", "csv")
    _, jsonl = invoke("table1", "--limit", "20", "--format", "json-lines")

    rows = list(csv.DictReader(io.StringIO(csv_out)))
    records = [json.loads(line) for line in jsonl.splitlines()]
    assert csv_out.splitlines()[0] == "n,representatives"
    assert [(r["n"], r["representatives"]) for r in rows] == [("5", "2"), ("8", "3"), ("13", "2 5"), ("16", "3"), ("17", "3 5"), ("20", "3")]
    assert [(r["n"], r["representatives"]) for r in records] == [(5, [2]), (8, [3]), (13, [2, 5]), (16, [3]), (17, [3, 5]), (20, [3])]
    assert text.splitlines()[2] == "13: 2, 5"


def test_mu_degree_of_borromean():
    status, out = invoke("mu", str(TESTDATA / "borromean.mlnk"), "--cap", "4")
    assert status == 0
    assert out == "degree = 2 (exact), witness mu(231)=1\n"


def test_mu_defaults_to_valid_to():
    status, out = invoke("mu", str(TESTDATA / "h3.mlnk"))
    assert status == 0
    assert out == "degree = 3 (exact), witness mu(2341)=1\n"


def test_mu_single_invariant():
    assert invoke("mu", str(TESTDATA / "borromean.mlnk"), "--invariant", "321") == (0, "mu(321) = -1\n")


def test_mu_strict_failure_exits_one(capsys):
    status, out = invoke("mu", str(TESTDATA / "hopf.mlnk"), "--invariant", "112")
    assert status == 1
    assert out == ""
    assert "not first-nonvanishing" in capsys.readouterr().err
    assert invoke("mu", str(TESTDATA / "hopf.mlnk"), "--invariant", "112", "--no-strict") == (0, "mu(112) = 0\n")


def test_mu_missing_file_exits_one():
    status, _ = invoke("mu", str(TESTDATA / "nope.mlnk"))
    assert status == 1


def test_bare_names_resolve_in_testdata_dir():
    assert invoke("mu", "borromean.mlnk", "--cap", "4") == (0, "degree = 2 (exact), witness mu(231)=1\n")
    status, out = invoke("linkform", "matrix", "lens_5_2.mat")
    assert status == 0
    assert out.startswith("nullity 0, torsion [5]")


def test_hopf_command():
    assert invoke("hopf", "--d", "3") == (0, "degree = 3 (exact), witness mu(2341)=1\n")
    status, out = invoke("hopf", "--d", "2", "--surgery-framings", "5,5,5")
    assert status == 0
    assert out == "p = 5, b_p = 3, o_hat = 1: degree <= 2 (floor 2)\n"
    status, _ = invoke("hopf", "--d", "1", "--surgery-framings", "7,7")
    assert status == 1


def test_linkform_cyclic():
    status, out = invoke("linkform", "cyclic", "2", "5")
    assert status == 0
    assert out == "(2/5) ~ (2/5): not semisimple, degree verdict degree_one\n"
    assert invoke("linkform", "cyclic", "1", "40", "--split", "5,8") == (0, "(1/40) = (2/5) + (5/8)\n")
    assert invoke("linkform", "cyclic", "3", "10", "--verdict") == (0, "(3/10): unknown\n")
    assert invoke("linkform", "cyclic", "2", "4")[0] == 1


def test_linkform_matrix():
    status, out = invoke("linkform", "matrix", str(TESTDATA / "lens_5_2.mat"))
    assert status == 0
    assert out == "nullity 0, torsion [5], linking form (2/5), degree verdict degree_one\n"


def test_counts_commands():
    assert invoke("counts", "--witt", "2", "7") == (0, "N_7^2 = 18\n")
    assert invoke("counts", "--milnor", "2", "6") == (0, "M_6^2 = 0\n")
    status, out = invoke("counts", "--verify-grid", "10", "20")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "lemma_b on 2..10 x 2..20: ok; exceptions (2,2) (2,4) (2,6)"
    assert all("ok" in line for line in lines)


def test_qbound_commands():
    status, out = invoke("qbound", "--bp", "3", "--ohat", "1")
    assert (status, out) == (0, "p = 5, b_p = 3, o_hat = 1: degree <= 2 (floor 2)\n")
    status, out = invoke("qbound", "--plan", "7", "2")
    assert status == 0
    assert out == "b = 7, degree 2: 2 x M(0,0,0) # M(0,5,5) (b_5 = 9, o_hat = 3, bound 2)\n"
    assert invoke("qbound", "--plan", "2", "inf") == (0, "b = 2, degree infinite: 2 x S1xS2\n")
    assert invoke("qbound", "--bp", "2", "--ohat", "2")[0] == 1
    assert invoke("qbound")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["counts"],
        ["hopf"],
        ["table1", "--format", "yaml"],
        ["mu", "x.mlnk", "--invariant", "2a1"],
        ["qbound", "--plan", "2", "x"],
        ["qbound", "--plan", "inf", "2"],
        ["qbound", "--bp", "3", "--ohat", "x"],
        ["qbound", "--bp", "3", "--ohat", "1/0"],
    ],
)
def test_usage_errors_exit_two(argv):
    assert invoke(*argv)[0] == 2


def test_help_exits_zero():
    assert invoke("--help")[0] == 0
