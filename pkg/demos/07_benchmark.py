"""
Comparing the four summarizers
==============================

``bench`` runs every algorithm on the same prepared document and scores each
summary against one reference. The bundled reference is a hand-written
proxy, so the numbers describe this corpus only.
"""
import time
from pathlib import Path

import sumforge as sf

ROOT = Path(__file__).resolve().parents[1]
stop = sf.load_stopwords()
doc = sf.load_corpus(ROOT / "data" / "corpus", concat=True).documents[0]
reference = (ROOT / "data" / "reference" / "proxy_reference.txt").read_text(encoding="utf-8")

for n in (1, 2):
    start = time.perf_counter()
    rows = sf.bench(doc, reference, n, sf.Params(k=11), stop)
    elapsed = time.perf_counter() - start
    print(f"ROUGE-{n} ({elapsed * 1000:.0f} ms)")
    print(f"  {'algorithm':<9} {'recall':>7} {'precision':>9} {'f1':>7} {'sents':>5}")
    for r in rows:
        print(f"  {r.algorithm:<9} {r.score.recall:>7.3f} {r.score.precision:>9.3f} "
              f"{r.score.f1:>7.3f} {len(r.summary):>5}")

# Sweeping the sentence budget trades recall for precision.
print("\nROUGE-1 F1 by k")
for k in (3, 7, 11, 15):
    rows = sf.bench(doc, reference, 1, sf.Params(k=k), stop)
    print(f"  k={k:>2}  " + "  ".join(f"{r.algorithm} {r.score.f1:.3f}" for r in rows))
