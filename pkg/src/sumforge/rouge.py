"""ROUGE-N with clipped n-gram overlap."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyReference, NoSentences, OrderMismatch
from .summary import Summary
from .termstats import NGramMultiset, ngram_multiset
from .textprep import remove_stopwords, split_sentences, tokenize


@dataclass(frozen=True)
class RougeScore:
    n: int
    recall: float
    precision: float
    f1: float
    overlap: int
    model_total: int
    reference_total: int

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "recall": self.recall,
            "precision": self.precision,
            "f1": self.f1,
            "overlap": self.overlap,
            "model_total": self.model_total,
            "reference_total": self.reference_total,
        }


def f1_score(precision: float, recall: float) -> float:
    if precision + recall == 0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def rouge_n(candidate: NGramMultiset, reference: NGramMultiset) -> RougeScore:
    """Recall, precision and F1 of ``candidate`` against ``reference``.

    Each gram is credited at most ``min(candidate count, reference count)``
    times.

    Raises:
        OrderMismatch: the two multisets use different n.
        EmptyReference: the reference holds no n-grams.
    """
    if candidate.n != reference.n:
        raise OrderMismatch(f"candidate is {candidate.n}-gram, reference is {reference.n}-gram")
    if reference.total == 0:
        raise EmptyReference(f"reference contains no {reference.n}-grams")
    overlap = sum((candidate.counts & reference.counts).values())
    recall = overlap / reference.total
    precision = overlap / candidate.total if candidate.total else 0.0
    return RougeScore(n=reference.n, recall=recall, precision=precision,
                      f1=f1_score(precision, recall), overlap=overlap,
                      model_total=candidate.total, reference_total=reference.total)


def text_token_sequences(text: str, stopwords: Iterable[str] | None = None) -> list[list[str]]:
    """Per-sentence token lists for evaluation (empty list for token-less text)."""
    try:
        sentences = split_sentences(text)
    except NoSentences:
        return []
    stop = frozenset(stopwords or ())
    return [[t.surface for t in remove_stopwords(s.tokens, stop)] for s in sentences]


def evaluate_summary(summary: Summary | str, reference_text: str, n: int = 1,
                     stopwords: Iterable[str] | None = None) -> RougeScore:
    """Score a summary against reference text.

    Both sides go through the same tokenizer; stopwords are kept unless a
    stopword set is passed.
    """
    stop = frozenset(stopwords or ())
    if isinstance(summary, Summary):
        cand_seqs = [[t.surface for t in remove_stopwords(tokenize(s), stop)] for s in summary.sentences]
    else:
        cand_seqs = text_token_sequences(summary, stop)
    ref = ngram_multiset(text_token_sequences(reference_text, stop), n)
    if ref.total == 0:
        raise EmptyReference(f"reference text yields no {n}-grams")
    return rouge_n(ngram_multiset(cand_seqs, n), ref)
