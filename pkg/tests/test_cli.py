import json
import shutil
import subprocess
import sys

import pytest

from conftest import CORPUS_DIR, GOLDEN, REFERENCE, ROOT
from sumforge import cli
from sumforge.rouge import rouge_n
from sumforge.termstats import ngram_multiset
from sumforge.textprep import tokenize


@pytest.fixture
def run(capsys, monkeypatch):
    monkeypatch.delenv(cli.STOPWORDS_ENV, raising=False)

    def _run(*argv):
        code = cli.main([str(a) for a in argv])
        out, err = capsys.readouterr()
        return code, out, err
    return _run


def write(path, text):
    path.write_text(text, encoding="utf-8")
    return path


def assert_error_line(err, code):
    lines = err.splitlines()
    assert len(lines) == 1
    rec = json.loads(lines[0])
    assert rec["exit_code"] == code and rec["error"] and rec["message"]


class TestExitCodes:
    def test_missing_input(self, run, tmp_path):
        code, out, err = run("summarize", "--algo", "lexrank", "--input", tmp_path / "missing")
        assert code == 3 and out == ""
        assert_error_line(err, 3)

    def test_zero_budget(self, run):
        code, _, err = run("summarize", "--algo", "lsa", "-k", "0", "--input", CORPUS_DIR)
        assert code == 2
        assert_error_line(err, 2)

    @pytest.mark.parametrize("argv", [
        ["summarize", "--algo", "nope", "--input", "x"],
        ["summarize", "--input", "x"],
        ["bench", "--input", "x"],
        ["summarize", "--algo", "lexrank", "--input", "x", "--damping", "1.5"],
        ["summarize", "--algo", "luhn", "--input", "x", "--f-min", "0"],
        ["summarize", "--algo", "klsum", "--input", "x", "--epsilon", "0"],
    ])
    def test_config_errors(self, run, argv):
        code, _, err = run(*argv)
        assert code == 2
        assert_error_line(err, 2)

    def test_bad_rouge_order(self, run, tmp_path):
        f = write(tmp_path / "a.txt", "weld.")
        code, _, err = run("evaluate", "--candidate", f, "--reference", f, "--n", "4")
        assert code == 2

    def test_punctuation_reference(self, run, tmp_path):
        cand = write(tmp_path / "c.txt", "weld steel.")
        ref = write(tmp_path / "r.txt", "... ;; !!\n")
        code, _, err = run("evaluate", "--candidate", cand, "--reference", ref)
        assert code == 4
        assert_error_line(err, 4)

    def test_empty_file(self, run, tmp_path):
        f = write(tmp_path / "e.txt", "  \n")
        code, _, err = run("summarize", "--algo", "luhn", "--input", f)
        assert code == 4

    def test_not_utf8(self, run, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_bytes(b"\xff\xfe weld")
        code, _, _ = run("freq", "--input", f)
        assert code == 3


class TestEvaluate:
    def test_hand_example(self, run, tmp_path):
        cand = write(tmp_path / "c.txt", "a b c")
        ref = write(tmp_path / "r.txt", "a b d")
        code, out, _ = run("evaluate", "--candidate", cand, "--reference", ref, "--n", "1")
        rec = json.loads(out)
        assert code == 0
        assert [round(rec[m], 4) for m in ("recall", "precision", "f1")] == [0.6667] * 3
        assert (rec["overlap"], rec["model_total"], rec["reference_total"]) == (2, 3, 3)

    def test_identity(self, run):
        code, out, _ = run("evaluate", "--candidate", REFERENCE, "--reference", REFERENCE, "--format", "tsv")
        header, row = out.splitlines()
        assert header.split("\t") == ["n", "recall", "precision", "f1", "overlap", "model_total",
                                      "reference_total"]
        assert row.split("\t")[1:4] == ["1.000000"] * 3

    def test_remove_stopwords(self, run, tmp_path):
        cand = write(tmp_path / "c.txt", "the weld")
        ref = write(tmp_path / "r.txt", "the steel")
        assert json.loads(run("evaluate", "--candidate", cand, "--reference", ref)[1])["overlap"] == 1
        out = run("evaluate", "--candidate", cand, "--reference", ref, "--remove-stopwords")[1]
        assert json.loads(out)["overlap"] == 0


class TestFreq:
    def test_unfiltered(self, run, tmp_path):
        f = write(tmp_path / "t.txt", "a a b")
        code, out, _ = run("freq", "--input", f, "--top", "2")
        assert code == 0
        assert [(r["word"], r["count"]) for r in json.loads(out)["rows"]] == [("a", 2), ("b", 1)]

    def test_filtered(self, run, tmp_path):
        f = write(tmp_path / "t.txt", "a a b")
        sw = write(tmp_path / "stop.txt", "# custom\na\n")
        out = run("freq", "--input", f, "--top", "2", "--filtered", "--stopwords", sw)[1]
        assert [(r["word"], r["count"]) for r in json.loads(out)["rows"]] == [("b", 1)]

    def test_raw_keeps_punctuation(self, run, tmp_path):
        f = write(tmp_path / "t.txt", "Weld, weld.")
        rows = json.loads(run("freq", "--input", f)[1])["rows"]
        assert {r["word"] for r in rows} >= {"weld", ","}

    def test_env_var_and_flag(self, run, tmp_path, monkeypatch):
        f = write(tmp_path / "t.txt", "a a b c")
        env_sw = write(tmp_path / "env.txt", "a\n")
        flag_sw = write(tmp_path / "flag.txt", "b\n")
        monkeypatch.setenv(cli.STOPWORDS_ENV, str(env_sw))
        words = lambda out: [r["word"] for r in json.loads(out)["rows"]]
        assert words(run("freq", "--input", f, "--filtered")[1]) == ["b", "c"]
        assert words(run("freq", "--input", f, "--filtered", "--stopwords", flag_sw)[1]) == ["a", "c"]

    def test_missing_stopword_file(self, run, tmp_path):
        f = write(tmp_path / "t.txt", "a")
        code, _, _ = run("freq", "--input", f, "--filtered", "--stopwords", tmp_path / "none.txt")
        assert code == 3

    def test_golden(self, run, monkeypatch):
        monkeypatch.chdir(ROOT)
        out = run("freq", "--input", "data/corpus", "--filtered")[1]
        assert out == (GOLDEN / "freq_filtered_top20.json").read_text(encoding="utf-8")
        out = run("freq", "--input", "data/corpus", "--filtered", "--format", "tsv")[1]
        assert out == (GOLDEN / "freq_filtered_top20.tsv").read_text(encoding="utf-8")


class TestSummarize:
    def test_luhn_eleven(self, run):
        code, out, _ = run("summarize", "--algo", "luhn", "--input", CORPUS_DIR, "--concat", "-k", "11")
        rec = json.loads(out)
        assert code == 0 and rec["k"] == 11 and len(rec["indices"]) == 11
        assert rec["params"]["f_min"] == 2 and rec["params"]["gap_limit"] == 4
        assert rec["params"]["stopwords"] == "default"

    def test_defaults_echoed(self, run):
        p = json.loads(run("summarize", "--algo", "klsum", "--input", CORPUS_DIR, "--concat")[1])["params"]
        assert (p["k"], p["damping"], p["f_min"], p["gap_limit"], p["word_budget"], p["epsilon"]) == \
            (11, 0.15, 2, 4, 250, 1e-6)

    def test_per_file_records(self, run):
        out = json.loads(run("summarize", "--algo", "lexrank", "--input", CORPUS_DIR, "-k", "2")[1])
        assert len(out) == 20
        assert out[0]["document"] == "a01_aluminum_steel_butt"

    def test_tsv_and_text(self, run, tmp_path):
        f = write(tmp_path / "d.txt", "Weld steel tool.\nThe weld zone is fine.\nSteel tool wear.")
        out = run("summarize", "--algo", "luhn", "--input", f, "-k", "2", "--format", "tsv")[1]
        lines = out.split("\n")
        assert lines[0] == "document\tindex\tscore\ttext" and lines[-1] == ""
        for line in lines[1:-1]:
            doc, idx, score, _ = line.split("\t")
            assert doc == "d" and len(score.split(".")[1]) == 6
        text = run("summarize", "--algo", "luhn", "--input", f, "-k", "1", "--format", "text")[1]
        assert text.endswith("\n") and "\t" not in text

    def test_console_script(self, tmp_path):
        exe = shutil.which("sumforge")
        argv = [exe] if exe else [sys.executable, "-m", "sumforge.cli"]
        proc = subprocess.run(argv + ["summarize", "--algo", "lsa", "--input", str(tmp_path / "nope")],
                              capture_output=True, text=True, cwd=ROOT)
        assert proc.returncode == 3 and proc.stdout == ""
        assert json.loads(proc.stderr)["exit_code"] == 3


class TestBench:
    def test_source_as_reference(self, run, tmp_path):
        src = tmp_path / "src.txt"
        src.write_text("\n\n".join(p.read_text(encoding="utf-8") for p in sorted(CORPUS_DIR.glob("*.txt"))),
                       encoding="utf-8")
        rows = json.loads(run("bench", "--input", src, "--reference", src)[1])["rows"]
        assert [r["algorithm"] for r in rows] == ["lexrank", "lsa", "luhn", "klsum"]
        assert all(r["precision"] == 1.0 for r in rows)

    def test_toy_table(self, run, tmp_path):
        sentences = ["Friction stir welding joins aluminum plates.",
                     "The rotating tool heats aluminum plates.",
                     "Grain refinement raises hardness.",
                     "Welding speed controls heat input."]
        doc = write(tmp_path / "toy.txt", " ".join(sentences))
        ref = write(tmp_path / "ref.txt", sentences[1])
        out = json.loads(run("bench", "--input", doc, "--reference", ref, "-k", "1")[1])
        ref_seq = [tokenize(sentences[1])]
        for row in out["rows"]:
            algo_out = json.loads(run("summarize", "--algo", row["algorithm"], "--input", doc, "-k", "1")[1])
            cand = [tokenize(sentences[i]) for i in algo_out["indices"]]
            expected = rouge_n(ngram_multiset(cand, 1), ngram_multiset(ref_seq, 1))
            assert row["recall"] == pytest.approx(expected.recall, abs=1e-12)
            assert row["precision"] == pytest.approx(expected.precision, abs=1e-12)
            assert row["f1"] == pytest.approx(expected.f1, abs=1e-12)

    def test_workers_identical(self, run):
        base = run("bench", "--input", CORPUS_DIR, "--reference", REFERENCE)[1]
        assert run("bench", "--input", CORPUS_DIR, "--reference", REFERENCE, "--workers", "4")[1] == base

    def test_no_concat_multi_doc(self, run):
        code, _, _ = run("bench", "--input", CORPUS_DIR, "--reference", REFERENCE, "--no-concat")
        assert code == 2

    def test_tsv_rounding(self):
        assert cli.fmt6(0.5) == "0.500000"
        assert cli.fmt6(2 / 3) == "0.666667"
        assert cli.fmt6(0.0000005) == "0.000000"
        assert cli.fmt6(0.0000015) == "0.000002"
        assert cli.fmt6(1.0) == "1.000000"
