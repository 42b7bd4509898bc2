"""Term statistics: idf, tf-idf sentence vectors, unigram distributions, n-grams."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyInput, EmptySentence, EmptyVocabulary, InvalidOrder, InvalidParameter
from .textprep import Sentence, Token


def _surface(t: Token | str) -> str:
    return t if isinstance(t, str) else t.surface


@dataclass(frozen=True)
class IdfTable:
    """Inverse document frequencies, one idf "document" per sentence.

    Unknown words are treated as maximally informative and get the largest
    idf stored in the table.
    """

    idf: dict[str, float]
    n_units: int

    @property
    def max_idf(self) -> float:
        if self.idf:
            return max(self.idf.values())
        return math.log(self.n_units + 1) + 1.0

    def __getitem__(self, word: str) -> float:
        value = self.idf.get(word)
        return self.max_idf if value is None else value

    def __contains__(self, word: str) -> bool:
        return word in self.idf


@dataclass(frozen=True)
class SentenceVector:
    weights: dict[str, float]
    norm: float


@dataclass(frozen=True)
class UnigramDistribution:
    probs: dict[str, float]
    vocabulary: frozenset[str]

    def __getitem__(self, word: str) -> float:
        return self.probs.get(word, 0.0)


@dataclass(frozen=True)
class NGramMultiset:
    n: int
    counts: Counter
    total: int


def compute_idf(sentences: Sequence[Sentence]) -> IdfTable:
    """Smoothed idf ``ln((N + 1) / (df + 1)) + 1`` over sentence content tokens."""
    if not sentences:
        raise EmptyInput("compute_idf needs at least one sentence")
    df: Counter = Counter()
    for s in sentences:
        df.update({t.surface for t in s.content_tokens})
    n = len(sentences)
    idf = {w: math.log((n + 1) / (d + 1)) + 1.0 for w, d in df.items()}
    return IdfTable(idf=idf, n_units=n)


def sentence_vector(sentence: Sentence | Sequence[Token | str], idf: IdfTable) -> SentenceVector:
    """tf x idf weights of the sentence's content tokens."""
    tokens = sentence.content_tokens if isinstance(sentence, Sentence) else sentence
    tf = Counter(_surface(t) for t in tokens)
    if not tf:
        raise EmptySentence("sentence has no content tokens")
    weights = {w: c * idf[w] for w, c in tf.items()}
    norm = math.sqrt(sum(v * v for v in weights.values()))
    return SentenceVector(weights=weights, norm=norm)


def weight_matrix(sentences: Sequence[Sentence], idf: IdfTable) -> tuple[list[str], np.ndarray]:
    """Dense term x sentence matrix of tf x idf weights.

    Terms are sorted alphabetically; only terms occurring in some sentence
    get a row. Sentences without content tokens produce zero columns.
    """
    tfs = [Counter(t.surface for t in s.content_tokens) for s in sentences]
    terms = sorted(set().union(*tfs)) if tfs else []
    row = {w: i for i, w in enumerate(terms)}
    A = np.zeros((len(terms), len(sentences)))
    for j, tf in enumerate(tfs):
        for w, c in tf.items():
            A[row[w], j] = c * idf[w]
    return terms, A


def unigram_distribution(tokens: Iterable[Token | str], smoothing_epsilon: float,
                         vocabulary: Iterable[str]) -> UnigramDistribution:
    """Additively smoothed unigram probabilities over ``vocabulary``.

    ``p(w) = (count(w) + eps) / (total + eps * |V|)``; tokens outside the
    vocabulary are ignored. With ``eps == 0`` the support shrinks to the
    observed words.
    """
    vocab = frozenset(vocabulary)
    if not vocab:
        raise EmptyVocabulary("vocabulary is empty")
    if smoothing_epsilon < 0 or not math.isfinite(smoothing_epsilon):
        raise InvalidParameter(f"smoothing epsilon must be >= 0, got {smoothing_epsilon}")
    counts = Counter(w for w in map(_surface, tokens) if w in vocab)
    total = sum(counts.values())
    denom = total + smoothing_epsilon * len(vocab)
    if denom <= 0:
        raise EmptyInput("no in-vocabulary tokens and no smoothing")
    if smoothing_epsilon > 0:
        probs = {w: (counts.get(w, 0) + smoothing_epsilon) / denom for w in vocab}
    else:
        probs = {w: c / denom for w, c in counts.items()}
    return UnigramDistribution(probs=probs, vocabulary=frozenset(probs))


def ngram_multiset(token_sequences: Iterable[Sequence[Token | str]], n: int) -> NGramMultiset:
    """Contiguous n-grams of each sequence; grams never span two sequences."""
    if n < 1:
        raise InvalidOrder(f"n-gram order must be >= 1, got {n}")
    counts: Counter = Counter()
    for seq in token_sequences:
        words = [_surface(t) for t in seq]
        counts.update(tuple(words[i:i + n]) for i in range(len(words) - n + 1))
    return NGramMultiset(n=n, counts=counts, total=sum(counts.values()))
