"""The :class:`Summary` value every summarizer returns, plus top-k selection."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .corpus import Document
from .errors import EmptyScores, InvalidParameter

ALGORITHMS = ("lexrank", "lsa", "luhn", "klsum")

#: Sentence budget used throughout when none is given.
DEFAULT_K = 11


@dataclass(frozen=True)
class Summary:
    """An ordered, extractive selection of source sentences.

    ``sentence_indices`` are strictly increasing; ``sentences`` holds the
    selected sentences' original text in the same order, and ``text`` joins
    them with single spaces.
    """

    algorithm: str
    sentence_indices: tuple[int, ...]
    sentences: tuple[str, ...]
    scores: tuple[float, ...] | None = None
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        idx = self.sentence_indices
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise ValueError("sentence indices must be strictly increasing")
        if len(self.sentences) != len(idx):
            raise ValueError("one sentence text per index required")
        if self.scores is not None and len(self.scores) != len(idx):
            raise ValueError("scores must align with indices")

    @property
    def text(self) -> str:
        return " ".join(self.sentences)

    def __len__(self) -> int:
        return len(self.sentence_indices)


def check_budget(k: int) -> int:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InvalidParameter(f"sentence budget k must be an integer >= 1, got {k!r}")
    return k


def select_top_k(scores: Sequence[float], k: int) -> list[int]:
    """Indices of the ``k`` largest scores (ties -> lower index), ascending."""
    check_budget(k)
    if len(scores) == 0:
        raise EmptyScores("no scores to select from")
    ranked = sorted(range(len(scores)), key=lambda i: (-scores[i], i))
    return sorted(ranked[:k])


def make_summary(algorithm: str, document: Document, indices: Sequence[int],
                 scores: Sequence[float] | None = None, params: dict | None = None) -> Summary:
    order = sorted(range(len(indices)), key=lambda i: indices[i])
    idx = tuple(int(indices[i]) for i in order)
    sc = None if scores is None else tuple(float(scores[i]) for i in order)
    return Summary(
        algorithm=algorithm,
        sentence_indices=idx,
        sentences=tuple(document.sentences[i].text for i in idx),
        scores=sc,
        params=dict(params or {}),
    )
