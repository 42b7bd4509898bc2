"""
ROUGE-N: n-gram overlap with a reference
========================================

Recall counts reference n-grams recovered, precision counts candidate
n-grams that appear in the reference, both with clipped counts. Extractive
summaries scored against their own source always have precision 1.
"""
from pathlib import Path

import sumforge as sf
from sumforge.rouge import evaluate_summary

ROOT = Path(__file__).resolve().parents[1]

# A hand-checkable case: two of three unigrams and one of two bigrams match.
for n in (1, 2):
    s = sf.rouge_n(sf.ngram_multiset([["a", "b", "c"]], n), sf.ngram_multiset([["a", "b", "d"]], n))
    print(f"ROUGE-{n}: recall {s.recall:.4f} precision {s.precision:.4f} f1 {s.f1:.4f}")

# Clipping: repeating a matched word does not earn more credit.
s = sf.rouge_n(sf.ngram_multiset([["weld"] * 3], 1), sf.ngram_multiset([["weld", "zone"]], 1))
print(f"clipped overlap {s.overlap} of {s.model_total} candidate grams")

stop = sf.load_stopwords()
source = sf.load_corpus(ROOT / "data" / "corpus", concat=True).documents[0]
reference = (ROOT / "data" / "reference" / "proxy_reference.txt").read_text(encoding="utf-8")
summary = sf.summarize(sf.prepare(source, stop), "luhn", sf.Params(), stop)

print("\nLuhn summary against its source and against the proxy reference")
for n in (1, 2, 3):
    own = evaluate_summary(summary, source.raw_text, n)
    ref = evaluate_summary(summary, reference, n)
    print(f"  n={n}: source precision {own.precision:.3f} | reference R {ref.recall:.3f} "
          f"P {ref.precision:.3f} F1 {ref.f1:.3f}")
