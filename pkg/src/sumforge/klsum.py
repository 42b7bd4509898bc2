"""Greedy KL-divergence summarizer."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .corpus import Document
from .errors import InvalidParameter, NoSentences, SupportMismatch
from .summary import Summary, check_budget, make_summary
from .termstats import UnigramDistribution

DEFAULT_WORD_BUDGET = 250
DEFAULT_EPSILON = 1e-6
#: An added sentence must lower the divergence by more than this to be accepted.
ACCEPT_MARGIN = 1e-12


@dataclass(frozen=True)
class KlConfig:
    """Greedy search settings; divergence is always KL(document || summary)."""

    word_budget: int = DEFAULT_WORD_BUDGET
    epsilon: float = DEFAULT_EPSILON

    def __post_init__(self):
        if isinstance(self.word_budget, bool) or not isinstance(self.word_budget, int) or self.word_budget < 1:
            raise InvalidParameter(f"word budget L must be an integer >= 1, got {self.word_budget!r}")
        if not (self.epsilon > 0 and math.isfinite(self.epsilon)):
            raise InvalidParameter(f"epsilon must be > 0, got {self.epsilon}")


@dataclass(frozen=True)
class KlTrace:
    """Greedy run record.

    ``empty_divergence`` is KL against the smoothed (uniform) empty summary
    and is informational only; ``steps`` lists ``(sentence index,
    divergence after adding it)`` in acceptance order.
    """

    empty_divergence: float
    steps: list[tuple[int, float]] = field(default_factory=list)

    @property
    def indices(self) -> list[int]:
        return [i for i, _ in self.steps]

    @property
    def divergences(self) -> list[float]:
        return [d for _, d in self.steps]


def kl_divergence(P: UnigramDistribution, Q: UnigramDistribution) -> float:
    """``sum_w P(w) ln(P(w) / Q(w))`` over the shared support."""
    if P.vocabulary != Q.vocabulary:
        raise SupportMismatch("distributions must share the same support")
    total = 0.0
    for w in sorted(P.vocabulary):
        p = P.probs[w]
        q = Q.probs[w]
        if p != q:
            total += p * math.log(p / q)
    return max(total, 0.0)


def _kl_rows(p: np.ndarray, log_p: np.ndarray, Q: np.ndarray) -> np.ndarray:
    """KL(p || each row of Q)."""
    return np.maximum((p * (log_p - np.log(Q))).sum(axis=-1), 0.0)


def greedy_kl(document: Document, config: KlConfig = KlConfig(), k: int | None = None) -> KlTrace:
    """Run the greedy selection and return the accepted steps in order.

    Each round evaluates every remaining sentence that still fits the word
    budget, takes the one giving the lowest divergence (lower index on
    ties), and stops once that no longer beats the current divergence.

    The first sentence is always accepted. With light smoothing, a one
    sentence summary starves most document words of probability and can sit
    further from the document than the uniform empty summary does, so the
    empty summary is not used as the baseline.
    """
    if k is not None:
        check_budget(k)
    sentences = document.sentences
    if not sentences or not any(s.content_tokens for s in sentences):
        raise NoSentences(f"document {document.id!r} has no content-bearing sentences")

    vocab = sorted({t.surface for s in sentences for t in s.content_tokens})
    col = {w: j for j, w in enumerate(vocab)}
    V = len(vocab)
    eps = config.epsilon
    counts = np.zeros((len(sentences), V))
    for i, s in enumerate(sentences):
        for t in s.content_tokens:
            counts[i, col[t.surface]] += 1
    lengths = counts.sum(axis=1)

    doc_counts = counts.sum(axis=0)
    p = (doc_counts + eps) / (doc_counts.sum() + eps * V)
    log_p = np.log(p)

    summary_counts = np.zeros(V)
    trace = KlTrace(empty_divergence=float(_kl_rows(p, log_p, np.full((1, V), 1.0 / V))[0]))
    current = math.inf
    remaining = [i for i in range(len(sentences)) if lengths[i] > 0]
    used = 0
    cap = len(remaining) if k is None else k

    while remaining and len(trace.steps) < cap:
        fits = [i for i in remaining if used + lengths[i] <= config.word_budget]
        if not fits:
            break
        cand = summary_counts + counts[fits]
        Q = (cand + eps) / (cand.sum(axis=1, keepdims=True) + eps * V)
        div = _kl_rows(p, log_p, Q)
        j = int(np.argmin(div))
        if not div[j] < current - ACCEPT_MARGIN:
            break
        best = fits[j]
        current = float(div[j])
        trace.steps.append((best, current))
        summary_counts += counts[best]
        used += lengths[best]
        remaining.remove(best)
    return trace


def summarize_klsum(document: Document, config: KlConfig = KlConfig(), k: int | None = None) -> Summary:
    trace = greedy_kl(document, config, k)
    params = {"k": k, "word_budget": config.word_budget, "epsilon": config.epsilon}
    return make_summary("klsum", document, trace.indices, [d for _, d in trace.steps], params)
