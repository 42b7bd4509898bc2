"""Extractive summarization (LexRank, LSA, Luhn, KL-Sum) and ROUGE-N scoring."""

__version__ = "0.1.0"

from .corpus import Corpus, Document, load_corpus, load_document
from .klsum import KlConfig, greedy_kl, kl_divergence, summarize_klsum
from .lexrank import (build_similarity_matrix, idf_modified_cosine, lexrank_centrality,
                      summarize_lexrank)
from .lsa import build_term_sentence_matrix, summarize_lsa, svd
from .luhn import luhn_score, significant_words, summarize_luhn
from .pipeline import Params, bench, prepare, summarize
from .rouge import RougeScore, evaluate_summary, rouge_n
from .summary import Summary, select_top_k
from .termstats import compute_idf, ngram_multiset, sentence_vector, unigram_distribution
from .textprep import (frequency_distribution, load_stopwords, prepare_document, remove_stopwords,
                       split_sentences, tokenize)

__all__ = [
    "Corpus", "Document", "KlConfig", "Params", "RougeScore", "Summary",
    "bench", "build_similarity_matrix", "build_term_sentence_matrix", "compute_idf",
    "evaluate_summary", "frequency_distribution", "greedy_kl", "idf_modified_cosine",
    "kl_divergence", "lexrank_centrality", "load_corpus", "load_document", "load_stopwords",
    "luhn_score", "ngram_multiset", "prepare", "prepare_document", "remove_stopwords",
    "rouge_n", "select_top_k", "sentence_vector", "significant_words", "split_sentences",
    "summarize", "summarize_klsum", "summarize_lexrank", "summarize_lsa", "summarize_luhn",
    "svd", "tokenize", "unigram_distribution",
]
