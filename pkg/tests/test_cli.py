import io
import json
import subprocess
import sys

import pytest

from conftest import GOLDEN_DIR
from kepler_consonance.cli import RECORD_FIELDS, IntervalParseError, parse_interval, render, run
from kepler_consonance.consonance import enumerate_intervals
from kepler_consonance.interval import MAX_INT, Interval


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestParseInterval:
    @pytest.mark.parametrize(
        "text, expected",
        [("5/8", (5, 8)), ("3:2", (3, 4)), ("3/2", (3, 4)), ("3", (3, 4)), ("1", (1, 2)), ("12:6", (1, 2))],
    )
    def test_valid(self, text, expected):
        sigma = parse_interval(text)
        assert (sigma.m, sigma.n) == expected

    @pytest.mark.parametrize("text", ["0/5", "5/0", "", "a/b", "-3/4", "3/4/5", "1.5", "3 / x", str(MAX_INT + 1)])
    def test_invalid(self, text):
        with pytest.raises(IntervalParseError) as info:
            parse_interval(text)
        assert repr(text) in str(info.value)

    def test_round_trip(self):
        for sigma in enumerate_intervals(100):
            assert parse_interval(render(sigma)) == sigma


class TestClassify:
    def test_golden_table(self):
        code, out, _ = cli("classify", "5/8", "--format", "table")
        assert code == 0
        assert out == (GOLDEN_DIR / "classify_5_8.table.txt").read_text(encoding="utf-8")

    def test_golden_jsonl(self):
        code, out, _ = cli("classify", "5/8", "--format", "jsonl")
        assert code == 0
        assert out == (GOLDEN_DIR / "classify_5_8.jsonl").read_text(encoding="utf-8")

    def test_record_fields(self):
        _, out, _ = cli("--format", "jsonl", "classify", "3/2")
        rec = json.loads(out)
        assert tuple(rec) == RECORD_FIELDS
        assert rec["input"] == "3/2" and rec["canonical"] == "3/4"
        assert rec["second_sequence"] == [4, 3, 2]
        assert parse_interval(rec["canonical"]) == Interval(3, 4)

    def test_default_is_table(self):
        _, out, _ = cli("classify", "16/17")
        assert out.splitlines()[0].split() == list(RECORD_FIELDS)
        assert out.splitlines()[1].split()[-1] == "gaussian"

    def test_parse_error_exit_2(self):
        code, out, err = cli("classify", "0/5")
        assert code == 2 and out == ""
        assert "'0/5'" in err


def test_seq():
    code, out, _ = cli("seq", "5/8")
    assert code == 0
    lines = out.splitlines()
    assert [l.split()[1:] for l in lines[1:]] == [["5/8", "8"], ["3/5", "5"], ["2/3", "3"], ["1/2", "2"]]
    _, out, _ = cli("seq", "5/6", "--format", "jsonl")
    assert [json.loads(l)["n"] for l in out.splitlines()] == [6, 5, 2]


class TestEnumerate:
    def test_all_records_sorted(self):
        code, out, _ = cli("enumerate", "--max-n", "8", "--format", "jsonl")
        assert code == 0
        recs = [json.loads(l) for l in out.splitlines()]
        assert len(recs) == len(enumerate_intervals(8))
        values = [parse_interval(r["canonical"]) for r in recs]
        assert values == sorted(values)

    def test_only_consonant(self):
        _, out, _ = cli("enumerate", "--max-n", "17", "--only", "consonant", "--format", "jsonl")
        got = {json.loads(l)["canonical"]: json.loads(l)["class"] for l in out.splitlines()}
        assert got == {
            "1/2": "euclidean", "3/5": "euclidean", "5/8": "euclidean", "2/3": "euclidean",
            "12/17": "gaussian", "3/4": "euclidean", "4/5": "euclidean", "5/6": "euclidean",
            "16/17": "gaussian",
        }

    def test_bad_max_n(self):
        assert cli("enumerate", "--max-n", "x")[0] == 2
        assert cli("enumerate", "--max-n", "1")[0] == 1
        assert cli("enumerate")[0] == 2


class TestPolygon:
    @pytest.mark.parametrize("n, name", [(7, "non-constructible"), (15, "euclidean"), (17, "gauss-wantzel")])
    def test_classes(self, n, name):
        code, out, _ = cli("polygon", str(n))
        assert code == 0
        assert out.splitlines()[1].split() == [str(n), name]

    def test_jsonl(self):
        _, out, _ = cli("polygon", "7", "--format", "jsonl")
        assert json.loads(out) == {"n": 7, "class": "non-constructible"}

    def test_domain_error(self):
        code, out, err = cli("polygon", "1")
        assert code == 1 and out == "" and err.startswith("error:")


class TestVerifyTheorem:
    def test_table(self):
        code, out, _ = cli("verify-theorem")
        assert code == 0
        assert out == (GOLDEN_DIR / "verify_theorem.table.txt").read_text(encoding="utf-8")
        assert "euclidean consonants: 1/2, 3/5, 5/8, 2/3, 3/4, 4/5, 5/6" in out

    def test_jsonl(self):
        code, out, _ = cli("verify-theorem", "--format", "jsonl")
        assert code == 0
        recs = [json.loads(l) for l in out.splitlines()]
        summary = recs[-1]
        assert summary == {
            "euclidean_consonants": ["1/2", "3/5", "5/8", "2/3", "3/4", "4/5", "5/6"],
            "ok": True,
        }
        assert {r["candidate"]: r["class"] for r in recs[:-1]}["15/16"] == "dissonant"


class TestFermat:
    def test_sequence(self):
        code, out, _ = cli("fermat", "17", "--format", "jsonl")
        assert code == 0
        assert [json.loads(l) for l in out.splitlines()] == [
            {"step": 0, "interval": "16/17", "n": 17},
            {"step": 1, "interval": "1/2", "n": 2},
        ]

    def test_not_fermat(self):
        code, _, err = cli("fermat", "7")
        assert code == 1 and "7" in err


@pytest.mark.parametrize(
    "argv", [["bogus"], [], ["classify"], ["classify", "5/8", "--format", "xml"], ["polygon", "7", "--nope"]]
)
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv) == 2
    assert "usage" in capsys.readouterr().err


def test_global_format_before_subcommand():
    _, out, _ = cli("--format", "jsonl", "polygon", "17")
    assert json.loads(out)["class"] == "gauss-wantzel"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "kepler_consonance", "verify-theorem"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "ok: true" in proc.stdout
