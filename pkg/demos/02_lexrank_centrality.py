"""
LexRank: centrality in a sentence similarity graph
==================================================

Sentences are nodes, idf-modified cosine similarities are edge weights and a
damped random walk over the graph ranks them. The stationary distribution
found by power iteration is compared against a dense eigensolver.
"""
from pathlib import Path

import numpy as np

import sumforge as sf
from sumforge.lexrank import build_similarity_matrix, lexrank_centrality, transition_matrix

DATA = Path(__file__).resolve().parents[1] / "data" / "corpus"
stop = sf.load_stopwords()
doc = sf.prepare(sf.load_corpus(DATA, concat=True).documents[0], stop)

# Similarity matrix over sentences that have content tokens.
sentences = [s for s in doc.sentences if s.content_tokens]
idf = sf.compute_idf(doc.sentences)
sim = build_similarity_matrix(sentences, idf)
off = sim.values[~np.eye(sim.n, dtype=bool)]
print(f"{sim.n} sentences, mean off-diagonal similarity {off.mean():.3f}")

# Power iteration with the default damping of 0.15.
c = lexrank_centrality(sim, damping=0.15, tol=1e-12, max_iter=1000)
print(f"converged={c.converged} after {c.iterations} iterations")

# The same vector as the leading left eigenvector of the damped chain.
M = 0.15 / sim.n + 0.85 * transition_matrix(sim.values)
w, V = np.linalg.eig(M.T)
v = np.real(V[:, np.argmax(np.real(w))])
v /= v.sum()
print(f"max |power - eig| = {np.max(np.abs(c.scores - v)):.2e}")

# The most central sentences form the summary.
for i in np.argsort(-c.scores, kind="stable")[:3]:
    print(f"  {c.scores[i]:.4f}  {sentences[i].text[:70]}...")

# Thresholded graphs replace weights with 0/1 edges.
summary = sf.summarize_lexrank(doc, idf, k=3, mode="threshold", threshold=0.1)
print("\nthreshold-mode picks:", summary.sentence_indices)
