"""Luhn's significant-word cluster summarizer."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .corpus import Document
from .errors import InvalidParameter, NoSentences
from .summary import DEFAULT_K, Summary, check_budget, make_summary, select_top_k
from .textprep import FrequencyTable, Sentence, frequency_distribution

DEFAULT_F_MIN = 2
DEFAULT_GAP_LIMIT = 4


@dataclass(frozen=True)
class SignificantWordSet:
    words: frozenset[str]
    f_min: int

    def __contains__(self, word: str) -> bool:
        return word in self.words


@dataclass(frozen=True)
class LuhnCluster:
    start: int
    end: int
    n_significant: int

    @property
    def span(self) -> int:
        return self.end - self.start + 1

    @property
    def score(self) -> float:
        return self.n_significant ** 2 / self.span


def _check_count(name: str, value, minimum: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise InvalidParameter(f"{name} must be an integer >= {minimum}, got {value!r}")


def significant_words(freq: FrequencyTable, stopwords: Iterable[str], f_min: int = DEFAULT_F_MIN) -> SignificantWordSet:
    _check_count("f_min", f_min, 1)
    stop = frozenset(stopwords)
    words = frozenset(w for w, c in freq.counts.items() if c >= f_min and w not in stop)
    return SignificantWordSet(words=words, f_min=f_min)


def clusters(mask: Sequence[bool], gap_limit: int = DEFAULT_GAP_LIMIT) -> list[LuhnCluster]:
    """Maximal clusters: significant positions linked by gaps of at most ``gap_limit``."""
    _check_count("gap_limit", gap_limit, 0)
    positions = [i for i, m in enumerate(mask) if m]
    found: list[LuhnCluster] = []
    if not positions:
        return found
    start = prev = positions[0]
    count = 1
    for p in positions[1:]:
        if p - prev - 1 > gap_limit:
            found.append(LuhnCluster(start, prev, count))
            start, count = p, 0
        count += 1
        prev = p
    found.append(LuhnCluster(start, prev, count))
    return found


def best_window(mask: Sequence[bool], gap_limit: int = DEFAULT_GAP_LIMIT) -> LuhnCluster | None:
    """Highest-scoring window (endpoints significant, gaps within limit).

    A sub-window of a maximal cluster can outscore the whole cluster when a
    long sparse tail dilutes it, so every window inside each cluster is
    considered.
    """
    best = None
    for c in clusters(mask, gap_limit):
        positions = [i for i in range(c.start, c.end + 1) if mask[i]]
        for a in range(len(positions)):
            for b in range(a, len(positions)):
                w = LuhnCluster(positions[a], positions[b], b - a + 1)
                if best is None or w.score > best.score:
                    best = w
    return best


def significance_mask(sentence: Sentence, sig: SignificantWordSet) -> list[bool]:
    return [t.surface in sig.words for t in sentence.tokens]


def luhn_score(sentence: Sentence | Sequence[bool], sig: SignificantWordSet | None = None,
               gap_limit: int = DEFAULT_GAP_LIMIT) -> float:
    """Density score ``(significant count)**2 / span`` of the best window; 0 if none.

    Accepts either a sentence plus significant-word set, or a bare boolean
    mask over the sentence's tokens.
    """
    mask = significance_mask(sentence, sig) if isinstance(sentence, Sentence) else list(sentence)
    w = best_window(mask, gap_limit)
    return 0.0 if w is None else w.score


def summarize_luhn(document: Document, stopwords: Iterable[str] = frozenset(), k: int = DEFAULT_K,
                   f_min: int = DEFAULT_F_MIN, gap_limit: int = DEFAULT_GAP_LIMIT,
                   positional_boost: bool = False) -> Summary:
    """Top-``k`` sentences by Luhn score.

    Significance comes from the document-wide frequency of content tokens.
    ``positional_boost`` multiplies each score by ``1 / (1 + index / n)``.
    """
    check_budget(k)
    _check_count("f_min", f_min, 1)
    _check_count("gap_limit", gap_limit, 0)
    sentences = document.sentences
    if not sentences:
        raise NoSentences(f"document {document.id!r} has no sentences")
    stop = frozenset(stopwords)
    freq = frequency_distribution(t for s in sentences for t in s.content_tokens)
    sig = significant_words(freq, stop, f_min)
    n = len(sentences)
    scores = []
    for s in sentences:
        score = luhn_score(s, sig, gap_limit)
        if positional_boost:
            score *= 1.0 / (1.0 + s.index / n)
        scores.append(score)
    picked = select_top_k(scores, k)
    params = {"k": k, "f_min": f_min, "gap_limit": gap_limit, "positional_boost": positional_boost}
    return make_summary("luhn", document, picked, [scores[i] for i in picked], params)
