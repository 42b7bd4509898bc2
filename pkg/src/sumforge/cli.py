"""Command-line interface: ``sumforge summarize|evaluate|freq|bench``.

Exit codes: 0 success, 2 bad configuration, 3 I/O error, 4 empty or
degenerate input. Failures print one JSON line on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Sequence

from . import __version__
from .corpus import load_corpus, load_document
from .errors import InvalidParameter, SumforgeError
from .pipeline import Params, bench, summarize
from .rouge import RougeScore, evaluate_summary
from .summary import ALGORITHMS, Summary
from .textprep import frequency_distribution, load_stopwords, raw_tokens, remove_stopwords, split_sentences

STOPWORDS_ENV = "SUMFORGE_STOPWORDS"
FORMATS = ("json", "tsv", "text")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def fmt6(x: float) -> str:
    """Six decimal places, ties rounded half-to-even on the shortest repr."""
    return str(Decimal(repr(float(x))).quantize(Decimal("0.000001"), rounding=ROUND_HALF_EVEN))


def _tsv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    lines = ["\t".join(header)]
    lines += ["\t".join(str(c) for c in row) for row in rows]
    return "\n".join(lines) + "\n"


def _one_line(text: str) -> str:
    return " ".join(text.split())


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


def _stopwords(args):
    path = args.stopwords or os.environ.get(STOPWORDS_ENV)
    return load_stopwords(path), (path or "default")


def _params(args) -> Params:
    return Params(
        k=args.k, mode=args.mode, threshold=args.threshold, damping=args.damping,
        tol=args.tol, max_iter=args.max_iter, f_min=args.f_min, gap_limit=args.gap_limit,
        positional_boost=args.positional_boost, word_budget=args.word_budget, epsilon=args.epsilon,
    ).validate()


def _check_n(n: int) -> int:
    if n not in (1, 2, 3):
        raise InvalidParameter(f"ROUGE order n must be 1, 2 or 3, got {n}")
    return n


def _summary_record(doc_id: str, s: Summary, params: dict) -> dict:
    return {
        "document": doc_id,
        "algorithm": s.algorithm,
        "k": params["k"],
        "indices": list(s.sentence_indices),
        "text": s.text,
        "params": params,
    }


def cmd_summarize(args) -> str:
    params = _params(args)
    stop, stop_src = _stopwords(args)
    corpus = load_corpus(args.input, concat=args.concat)
    echo = {**params.as_dict(), "algorithm": args.algo, "stopwords": stop_src}
    results = [(d.id, summarize(d, args.algo, params, stop)) for d in corpus]

    if args.format == "json":
        records = [_summary_record(doc_id, s, echo) for doc_id, s in results]
        return _dump(records[0] if len(records) == 1 else records)
    if args.format == "tsv":
        rows = []
        for doc_id, s in results:
            for i, sc, text in zip(s.sentence_indices, s.scores or [None] * len(s), s.sentences):
                rows.append([doc_id, i, "" if sc is None else fmt6(sc), _one_line(text)])
        return _tsv(["document", "index", "score", "text"], rows)
    return "\n\n".join(s.text for _, s in results) + "\n"


def _score_rows(score: RougeScore):
    return [score.n, fmt6(score.recall), fmt6(score.precision), fmt6(score.f1),
            score.overlap, score.model_total, score.reference_total]


def cmd_evaluate(args) -> str:
    n = _check_n(args.n)
    eval_stop = _stopwords(args)[0] if args.remove_stopwords else None
    candidate = load_document(args.candidate)
    reference = load_document(args.reference)
    score = evaluate_summary(candidate.raw_text, reference.raw_text, n, eval_stop)
    if args.format == "json":
        return _dump(score.as_dict())
    if args.format == "tsv":
        return _tsv(["n", "recall", "precision", "f1", "overlap", "model_total", "reference_total"],
                    [_score_rows(score)])
    return (f"ROUGE-{n}  recall {score.recall:.4f}  precision {score.precision:.4f}  "
            f"f1 {score.f1:.4f}\n")


def cmd_freq(args) -> str:
    if args.top < 1:
        raise InvalidParameter(f"--top must be >= 1, got {args.top}")
    corpus = load_corpus(args.input, concat=False)
    if args.filtered:
        stop, _ = _stopwords(args)
        tokens = [t for d in corpus for s in split_sentences(d, stop) for t in s.content_tokens]
    else:
        tokens = [w for d in corpus for w in raw_tokens(d.raw_text)]
    table = frequency_distribution(tokens)
    rows = table.most_common(args.top)
    if args.format == "json":
        return _dump({"filtered": args.filtered, "total": table.total, "vocabulary": len(table),
                      "rows": [{"word": w, "count": c} for w, c in rows]})
    if args.format == "tsv":
        return _tsv(["word", "count"], rows)
    width = max((len(w) for w, _ in rows), default=0)
    return "".join(f"{w:<{width}}  {c}\n" for w, c in rows)


def cmd_bench(args) -> str:
    n = _check_n(args.n)
    if args.workers < 1:
        raise InvalidParameter(f"--workers must be >= 1, got {args.workers}")
    params = _params(args)
    stop, stop_src = _stopwords(args)
    corpus = load_corpus(args.input, concat=args.concat)
    if len(corpus) != 1:
        raise InvalidParameter("bench needs a single document; pass --concat or a single file")
    reference = load_document(args.reference)
    eval_stop = stop if args.remove_stopwords else None
    rows = bench(corpus.documents[0], reference.raw_text, n, params, stop, eval_stop, args.workers)
    echo = {**params.as_dict(), "n": n, "stopwords": stop_src,
            "eval_stopwords_removed": args.remove_stopwords}

    if args.format == "json":
        return _dump({
            "rows": [{"algorithm": r.algorithm, "recall": r.score.recall,
                      "precision": r.score.precision, "f1": r.score.f1,
                      "sentences": len(r.summary)} for r in rows],
            "params": echo,
        })
    if args.format == "tsv":
        return _tsv(["algorithm", "recall", "precision", "f1"],
                    [[r.algorithm, fmt6(r.score.recall), fmt6(r.score.precision), fmt6(r.score.f1)]
                     for r in rows])
    out = [f"{'algorithm':<10}{'recall':>10}{'precision':>11}{'f1':>8}"]
    for r in rows:
        out.append(f"{r.algorithm:<10}{r.score.recall:>10.3f}{r.score.precision:>11.3f}{r.score.f1:>8.3f}")
    return "\n".join(out) + "\n"


def _add_common(p):
    p.add_argument("--stopwords", metavar="PATH",
                   help=f"stopword file (default: bundled English list; env {STOPWORDS_ENV})")
    p.add_argument("--format", choices=FORMATS, default="json", help="output format (default: json)")


def _add_algo_params(p):
    d = Params()
    p.add_argument("-k", type=int, default=d.k, help="sentence budget (default: %(default)s)")
    g = p.add_argument_group("lexrank")
    g.add_argument("--mode", choices=("continuous", "threshold"), default=d.mode,
                   help="similarity graph mode (default: %(default)s)")
    g.add_argument("--threshold", type=float, default=d.threshold,
                   help="edge threshold in threshold mode (default: %(default)s)")
    g.add_argument("--damping", type=float, default=d.damping, help="teleport weight (default: %(default)s)")
    g.add_argument("--tol", type=float, default=d.tol, help="power-iteration tolerance (default: %(default)s)")
    g.add_argument("--max-iter", type=int, default=d.max_iter, help="power-iteration cap (default: %(default)s)")
    g = p.add_argument_group("luhn")
    g.add_argument("--f-min", type=int, default=d.f_min,
                   help="minimum frequency of a significant word (default: %(default)s)")
    g.add_argument("--gap-limit", type=int, default=d.gap_limit,
                   help="max non-significant tokens bridged inside a cluster (default: %(default)s)")
    g.add_argument("--positional-boost", action="store_true", help="weight earlier sentences up")
    g = p.add_argument_group("klsum")
    g.add_argument("-L", "--word-budget", type=int, default=d.word_budget,
                   help="summary content-token budget (default: %(default)s)")
    g.add_argument("--epsilon", type=float, default=d.epsilon,
                   help="distribution smoothing (default: %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sumforge", description="Extractive summarization and ROUGE-N evaluation.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("summarize", help="summarize a text file or directory")
    p.add_argument("--algo", choices=ALGORITHMS, required=True)
    p.add_argument("--input", required=True, help="a .txt file or a directory of them")
    p.add_argument("--concat", action="store_true", help="join all files into one document")
    _add_algo_params(p)
    _add_common(p)
    p.set_defaults(func=cmd_summarize)

    p = sub.add_parser("evaluate", help="ROUGE-N of a candidate file against a reference file")
    p.add_argument("--candidate", required=True)
    p.add_argument("--reference", required=True)
    p.add_argument("--n", type=int, default=1, help="n-gram order 1-3 (default: %(default)s)")
    p.add_argument("--remove-stopwords", action="store_true", help="drop stopwords before scoring")
    _add_common(p)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("freq", help="word frequency table")
    p.add_argument("--input", required=True)
    p.add_argument("--top", type=int, default=20, help="rows to print (default: %(default)s)")
    p.add_argument("--filtered", action="store_true", help="remove punctuation and stopwords first")
    _add_common(p)
    p.set_defaults(func=cmd_freq)

    p = sub.add_parser("bench", help="run all four summarizers and score them")
    p.add_argument("--input", required=True)
    p.add_argument("--reference", required=True, help="reference summary file")
    p.add_argument("--concat", action=argparse.BooleanOptionalAction, default=True,
                   help="join a directory into one document (default: on)")
    p.add_argument("--n", type=int, default=1, help="n-gram order 1-3 (default: %(default)s)")
    p.add_argument("--remove-stopwords", action="store_true", help="drop stopwords before scoring")
    p.add_argument("--workers", type=int, default=1, help="run algorithms concurrently")
    _add_algo_params(p)
    _add_common(p)
    p.set_defaults(func=cmd_bench)
    return parser


def _fail(kind: str, code: int, message: str) -> int:
    sys.stderr.write(json.dumps({"error": kind, "exit_code": code, "message": message}) + "\n")
    return code


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        return _fail("UsageError", 2, str(exc))
    try:
        out = args.func(args)
    except SumforgeError as exc:
        return _fail(type(exc).__name__, exc.exit_code, str(exc))
    except OSError as exc:
        return _fail("IOError", 3, str(exc))
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
