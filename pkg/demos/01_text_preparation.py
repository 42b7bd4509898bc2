"""
Preparing text: sentences, tokens and word counts
=================================================

Everything downstream works on sentences whose tokens have been lowercased
and stripped of punctuation and stopwords. This demo walks one abstract
through that preparation and prints the frequency tables before and after
filtering.
"""
from pathlib import Path

import sumforge as sf
from sumforge.textprep import raw_tokens

DATA = Path(__file__).resolve().parents[1] / "data" / "corpus"

# Load one abstract and split it into sentences.
doc = sf.load_corpus(DATA).documents[0]
stop = sf.load_stopwords()
sentences = sf.split_sentences(doc, stop)
print(f"{doc.id}: {len(sentences)} sentences")
for s in sentences[:3]:
    print(f"  [{s.index}] {s.text[:70]}...")

# Each sentence keeps all of its tokens and, separately, the content tokens
# left after stopword removal.
first = sentences[0]
print("\nall tokens    :", first.words[:12])
print("content tokens:", first.content_words[:12])

# Raw counts include punctuation and function words; the filtered table is
# dominated by domain vocabulary.
raw = sf.frequency_distribution(raw_tokens(doc.raw_text))
filtered = sf.frequency_distribution([t for s in sentences for t in s.content_tokens])
print("\nraw top 8     :", raw.most_common(8))
print("filtered top 8:", filtered.most_common(8))
