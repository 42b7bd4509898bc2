"""LexRank: sentence centrality over an idf-modified-cosine similarity graph."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .corpus import Document
from .errors import EmptyVector, InvalidParameter, NoSentences
from .summary import DEFAULT_K, Summary, check_budget, make_summary, select_top_k
from .termstats import IdfTable, SentenceVector, compute_idf, weight_matrix

MODES = ("continuous", "threshold")
DEFAULT_DAMPING = 0.15
DEFAULT_THRESHOLD = 0.1
DEFAULT_TOL = 1e-6
DEFAULT_MAX_ITER = 200


@dataclass(frozen=True)
class SimilarityMatrix:
    n: int
    values: np.ndarray


@dataclass(frozen=True)
class CentralityScores:
    scores: np.ndarray
    iterations: int
    converged: bool


def idf_modified_cosine(x: SentenceVector, y: SentenceVector) -> float:
    """Cosine of two tf-idf vectors; the numerator carries idf squared."""
    if not x.weights or not y.weights or x.norm == 0 or y.norm == 0:
        raise EmptyVector("idf-modified-cosine needs two non-empty vectors")
    if len(y.weights) < len(x.weights):
        x, y = y, x
    num = sum(wx * y.weights[w] for w, wx in x.weights.items() if w in y.weights)
    return min(1.0, num / (x.norm * y.norm))


def build_similarity_matrix(sentences, idf: IdfTable) -> SimilarityMatrix:
    """Pairwise idf-modified-cosine matrix with a unit diagonal.

    Sentences without content tokens are similar to nothing but themselves.
    """
    if not sentences:
        raise NoSentences("no sentences to compare")
    _, A = weight_matrix(sentences, idf)
    norms = np.linalg.norm(A, axis=0)
    if not np.any(norms > 0):
        raise NoSentences("no sentence has content tokens")
    unit = np.divide(A, norms, out=np.zeros_like(A), where=norms > 0)
    M = unit.T @ unit
    M = np.clip((M + M.T) / 2.0, 0.0, 1.0)
    np.fill_diagonal(M, 1.0)
    return SimilarityMatrix(n=len(sentences), values=M)


def _validate(mode, threshold, damping, tol, max_iter):
    if mode not in MODES:
        raise InvalidParameter(f"mode must be one of {MODES}, got {mode!r}")
    if not (0.0 <= damping < 1.0):
        raise InvalidParameter(f"damping must be in [0, 1), got {damping}")
    if not (tol > 0 and math.isfinite(tol)):
        raise InvalidParameter(f"tol must be > 0, got {tol}")
    if isinstance(max_iter, bool) or not isinstance(max_iter, int) or max_iter < 1:
        raise InvalidParameter(f"max_iter must be an integer >= 1, got {max_iter!r}")
    if mode == "threshold" and not (0.0 <= threshold < 1.0):
        raise InvalidParameter(f"threshold must be in [0, 1), got {threshold}")


def transition_matrix(values: np.ndarray, mode: str = "continuous",
                      threshold: float = DEFAULT_THRESHOLD) -> np.ndarray:
    """Row-stochastic matrix of the (optionally binarized) similarity graph.

    All-zero rows become uniform rows.
    """
    W = np.array(values, dtype=float)
    n = W.shape[0]
    if mode == "threshold":
        diag = np.diag(W).copy()
        W = (W >= threshold).astype(float)
        np.fill_diagonal(W, diag)
    rows = W.sum(axis=1, keepdims=True)
    B = np.divide(W, rows, out=np.full_like(W, 1.0 / n), where=rows > 0)
    return B


def lexrank_centrality(matrix: SimilarityMatrix | np.ndarray, mode: str = "continuous",
                       threshold: float = DEFAULT_THRESHOLD, damping: float = DEFAULT_DAMPING,
                       tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> CentralityScores:
    """Power iteration ``p <- d*u + (1-d) * B^T p`` from the uniform vector.

    Stops when the max-norm change drops below ``tol``; hitting ``max_iter``
    is reported through ``converged=False`` rather than raised.
    """
    _validate(mode, threshold, damping, tol, max_iter)
    values = matrix.values if isinstance(matrix, SimilarityMatrix) else np.asarray(matrix, float)
    n = values.shape[0]
    if n == 0:
        raise NoSentences("empty similarity matrix")
    Bt = transition_matrix(values, mode, threshold).T
    u = np.full(n, 1.0 / n)
    p = u.copy()
    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        nxt = damping * u + (1.0 - damping) * (Bt @ p)
        nxt /= nxt.sum()
        delta = np.max(np.abs(nxt - p))
        p = nxt
        if delta < tol:
            converged = True
            break
    return CentralityScores(scores=p, iterations=it, converged=converged)


def summarize_lexrank(document: Document, idf: IdfTable | None = None, k: int = DEFAULT_K,
                      mode: str = "continuous", threshold: float = DEFAULT_THRESHOLD,
                      damping: float = DEFAULT_DAMPING, tol: float = DEFAULT_TOL,
                      max_iter: int = DEFAULT_MAX_ITER) -> Summary:
    check_budget(k)
    _validate(mode, threshold, damping, tol, max_iter)
    sentences = document.sentences
    if not sentences:
        raise NoSentences(f"document {document.id!r} has no sentences")
    if idf is None:
        idf = compute_idf(sentences)
    centrality = lexrank_centrality(build_similarity_matrix(sentences, idf),
                                    mode, threshold, damping, tol, max_iter)
    selectable = [i for i, s in enumerate(sentences) if s.content_tokens]
    picked = [selectable[j] for j in select_top_k([centrality.scores[i] for i in selectable], k)]
    params = {"k": k, "mode": mode, "damping": damping, "tol": tol, "max_iter": max_iter}
    if mode == "threshold":
        params["threshold"] = threshold
    return make_summary("lexrank", document, picked,
                        [centrality.scores[i] for i in picked], params)
