"""End-to-end helpers: prepare a document once, run any summarizer on it."""

from __future__ import annotations

from dataclasses import dataclass, field, asdict
from typing import Iterable

from . import klsum, lexrank, luhn
from .corpus import Document
from .errors import InvalidParameter
from .lsa import summarize_lsa
from .rouge import RougeScore, evaluate_summary
from .summary import ALGORITHMS, DEFAULT_K, Summary, check_budget
from .termstats import compute_idf
from .textprep import load_stopwords, prepare_document


@dataclass(frozen=True)
class Params:
    """Algorithm settings shared by ``summarize`` and ``bench``."""

    k: int = DEFAULT_K
    mode: str = "continuous"
    threshold: float = lexrank.DEFAULT_THRESHOLD
    damping: float = lexrank.DEFAULT_DAMPING
    tol: float = lexrank.DEFAULT_TOL
    max_iter: int = lexrank.DEFAULT_MAX_ITER
    f_min: int = luhn.DEFAULT_F_MIN
    gap_limit: int = luhn.DEFAULT_GAP_LIMIT
    positional_boost: bool = False
    word_budget: int = klsum.DEFAULT_WORD_BUDGET
    epsilon: float = klsum.DEFAULT_EPSILON

    def validate(self) -> "Params":
        check_budget(self.k)
        lexrank._validate(self.mode, self.threshold, self.damping, self.tol, self.max_iter)
        luhn._check_count("f_min", self.f_min, 1)
        luhn._check_count("gap_limit", self.gap_limit, 0)
        klsum.KlConfig(self.word_budget, self.epsilon)
        return self

    def as_dict(self) -> dict:
        return asdict(self)


def prepare(document: Document, stopwords: Iterable[str] | None = None) -> Document:
    stop = load_stopwords() if stopwords is None else frozenset(stopwords)
    return document if document.is_prepared else prepare_document(document, stop)


def summarize(document: Document, algorithm: str, params: Params = Params(),
              stopwords: Iterable[str] | None = None) -> Summary:
    """Prepare ``document`` (if needed) and summarize it with ``algorithm``."""
    if algorithm not in ALGORITHMS:
        raise InvalidParameter(f"unknown algorithm {algorithm!r}; choose from {ALGORITHMS}")
    params.validate()
    stop = load_stopwords() if stopwords is None else frozenset(stopwords)
    doc = prepare(document, stop)
    if algorithm == "lexrank":
        return lexrank.summarize_lexrank(doc, compute_idf(doc.sentences), params.k, params.mode,
                                         params.threshold, params.damping, params.tol, params.max_iter)
    if algorithm == "lsa":
        return summarize_lsa(doc, compute_idf(doc.sentences), params.k)
    if algorithm == "luhn":
        return luhn.summarize_luhn(doc, stop, params.k, params.f_min, params.gap_limit,
                                   params.positional_boost)
    return klsum.summarize_klsum(doc, klsum.KlConfig(params.word_budget, params.epsilon), params.k)


@dataclass
class BenchRow:
    algorithm: str
    summary: Summary
    score: RougeScore = field(repr=False)


def bench(document: Document, reference_text: str, n: int = 1, params: Params = Params(),
          stopwords: Iterable[str] | None = None, eval_stopwords: Iterable[str] | None = None,
          workers: int = 1) -> list[BenchRow]:
    """Run all four summarizers on one document and score each against the reference.

    Rows always come back in the order lexrank, lsa, luhn, klsum.
    """
    stop = load_stopwords() if stopwords is None else frozenset(stopwords)
    doc = prepare(document, stop)
    params.validate()

    def run(algo: str) -> BenchRow:
        s = summarize(doc, algo, params, stop)
        return BenchRow(algo, s, evaluate_summary(s, reference_text, n, eval_stopwords))

    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run, ALGORITHMS))
    return [run(a) for a in ALGORITHMS]
