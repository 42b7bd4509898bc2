"""
LSA: latent topics from the term-sentence matrix
================================================

An SVD of the tf-idf term-sentence matrix gives orthogonal directions in
sentence space. Each right singular vector is read as a topic, and the
sentence loading most strongly on it represents that topic.
"""
from pathlib import Path

import numpy as np

import sumforge as sf
from sumforge.lsa import build_term_sentence_matrix, svd

DATA = Path(__file__).resolve().parents[1] / "data" / "corpus"
stop = sf.load_stopwords()
doc = sf.prepare(sf.load_corpus(DATA, concat=True).documents[0], stop)

A = build_term_sentence_matrix(doc.sentences, sf.compute_idf(doc.sentences))
print(f"term-sentence matrix: {A.entries.shape[0]} terms x {A.n_sentences} sentences")

f = svd(A)
energy = np.cumsum(f.S ** 2) / np.sum(f.S ** 2)
print("leading singular values:", np.round(f.S[:5], 3))
print(f"topics needed for 50% of the energy: {np.searchsorted(energy, 0.5) + 1}")

# The heaviest terms of each topic, read off the left singular vectors.
for t in range(3):
    top = np.argsort(-np.abs(f.U[:, t]))[:5]
    best = int(np.argmax(f.Vt[t]))
    print(f"\ntopic {t}: {', '.join(A.terms[i] for i in top)}")
    print(f"  represented by sentence {best}: {doc.sentences[best].text[:70]}...")

print("\nsummary indices:", sf.summarize_lsa(doc, k=11).sentence_indices)
