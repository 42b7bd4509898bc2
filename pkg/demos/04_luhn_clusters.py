"""
Luhn: dense clusters of significant words
=========================================

A word is significant when it is not a stopword and occurs often enough in
the document. A sentence scores by its densest window of significant words,
(significant count)^2 / window length, where windows may not contain more
than ``gap_limit`` insignificant tokens in a row.
"""
from pathlib import Path

import sumforge as sf
from sumforge.luhn import best_window, clusters, significance_mask, significant_words

S, _ = True, False

# A worked mask: three significant words spread over six tokens.
mask = [S, _, S, _, _, S]
print("mask S_S__S  score", sf.luhn_score(mask, gap_limit=4))

# A long gap splits clusters. A dense run can beat the cluster holding it.
mask = [S, S, S, S, _, _, _, _, S]
print("mask SSSS____S clusters", [(c.start, c.end) for c in clusters(mask, 4)])
print("  best window", best_window(mask, 4), "score", sf.luhn_score(mask, gap_limit=4))

# On the corpus, frequency decides which words count.
DATA = Path(__file__).resolve().parents[1] / "data" / "corpus"
stop = sf.load_stopwords()
doc = sf.prepare(sf.load_corpus(DATA, concat=True).documents[0], stop)
freq = sf.frequency_distribution([t for s in doc.sentences for t in s.content_tokens])
for f_min in (2, 5, 10):
    print(f"f_min={f_min:>2}: {len(significant_words(freq, stop, f_min).words)} significant words")

sig = significant_words(freq, stop, 2)
s = doc.sentences[0]
print("\nfirst sentence mask:", "".join("S" if m else "_" for m in significance_mask(s, sig)))

plain = sf.summarize_luhn(doc, stop, k=5)
boosted = sf.summarize_luhn(doc, stop, k=5, positional_boost=True)
print("top-5 without boost:", plain.sentence_indices)
print("top-5 with boost   :", boosted.sentence_indices)
