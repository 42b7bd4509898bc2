"""Regenerate the golden CLI outputs under tests/golden.

Run from the repository root so that recorded paths stay relative::

    python3 scripts/regen_golden.py
"""
import contextlib
import io
import os
import sys
from pathlib import Path

from sumforge import cli

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = Path("tests/golden")
CORPUS = "data/corpus"
REFERENCE = "data/reference/proxy_reference.txt"

# (output file, argv)
CASES = [
    *[(f"summarize_{a}.json", ["summarize", "--algo", a, "--input", CORPUS, "--concat"]) for a in cli.ALGORITHMS],
    ("bench.json", ["bench", "--input", CORPUS, "--reference", REFERENCE]),
    ("bench.tsv", ["bench", "--input", CORPUS, "--reference", REFERENCE, "--format", "tsv"]),
    ("freq_filtered_top20.json", ["freq", "--input", CORPUS, "--filtered"]),
    ("freq_filtered_top20.tsv", ["freq", "--input", CORPUS, "--filtered", "--format", "tsv"]),
]


def run(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli.main(argv)
    if code:
        raise SystemExit(f"sumforge {' '.join(argv)} exited with {code}")
    return buf.getvalue()


def main():
    os.chdir(ROOT)
    os.environ.pop(cli.STOPWORDS_ENV, None)
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name, argv in CASES:
        (GOLDEN / name).write_text(run(argv), encoding="utf-8")
        print(f"wrote {GOLDEN / name}", file=sys.stderr)


if __name__ == "__main__":
    main()
