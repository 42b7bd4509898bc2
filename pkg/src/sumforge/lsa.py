"""Latent semantic analysis summarizer (topic-wise sentence selection)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corpus import Document
from .errors import NoSentences, NumericalFailure
from .summary import DEFAULT_K, Summary, check_budget, make_summary
from .termstats import IdfTable, compute_idf, weight_matrix

#: Topics whose singular value falls below this fraction of the largest are skipped.
RELATIVE_RANK_FLOOR = 1e-9


@dataclass(frozen=True)
class TermSentenceMatrix:
    terms: tuple[str, ...]
    entries: np.ndarray

    @property
    def n_sentences(self) -> int:
        return self.entries.shape[1]


@dataclass(frozen=True)
class SvdFactors:
    U: np.ndarray
    S: np.ndarray
    Vt: np.ndarray


def build_term_sentence_matrix(sentences, idf: IdfTable) -> TermSentenceMatrix:
    if not sentences or not any(s.content_tokens for s in sentences):
        raise NoSentences("no sentence has content tokens")
    terms, A = weight_matrix(sentences, idf)
    return TermSentenceMatrix(terms=tuple(terms), entries=A)


def svd(matrix: TermSentenceMatrix | np.ndarray) -> SvdFactors:
    """Thin SVD ``A = U diag(S) Vt`` with ``r = min(m, n)``.

    Signs are fixed so that, in every row of ``Vt``, the entry of largest
    magnitude (lowest index on ties) is nonnegative; the matching column of
    ``U`` is flipped along with it.
    """
    A = matrix.entries if isinstance(matrix, TermSentenceMatrix) else np.asarray(matrix, float)
    if A.ndim != 2 or 0 in A.shape:
        raise NoSentences(f"cannot decompose a matrix of shape {A.shape}")
    try:
        U, S, Vt = np.linalg.svd(A, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"SVD did not converge: {exc}") from None
    pivot = np.argmax(np.abs(Vt), axis=1)
    signs = np.where(Vt[np.arange(Vt.shape[0]), pivot] < 0, -1.0, 1.0)
    return SvdFactors(U=U * signs, S=S, Vt=Vt * signs[:, None])


def _topic_order(S: np.ndarray) -> list[int]:
    if S.size == 0 or S[0] <= 0:
        return []
    return [t for t in range(S.size) if S[t] >= RELATIVE_RANK_FLOOR * S[0]]


def summarize_lsa(document: Document, idf: IdfTable | None = None, k: int = DEFAULT_K) -> Summary:
    """Pick, topic by topic, the unselected sentence with the largest ``|Vt[t, s]|``.

    Topics are visited in order of decreasing singular value and cycled if
    the budget outlasts them. Ties go to the lower sentence index.
    """
    check_budget(k)
    sentences = document.sentences
    if not sentences:
        raise NoSentences(f"document {document.id!r} has no sentences")
    if idf is None:
        idf = compute_idf(sentences)
    factors = svd(build_term_sentence_matrix(sentences, idf))
    topics = _topic_order(factors.S)

    candidates = {i for i, s in enumerate(sentences) if s.content_tokens}
    budget = min(k, len(candidates))
    picked: list[int] = []
    scores: list[float] = []
    t = 0
    while len(picked) < budget:
        row = np.abs(factors.Vt[topics[t % len(topics)]])
        best = min(candidates, key=lambda s: (-row[s], s))
        picked.append(best)
        scores.append(float(row[best]))
        candidates.discard(best)
        t += 1
    return make_summary("lsa", document, picked, scores, {"k": k})
