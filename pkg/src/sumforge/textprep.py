"""Sentence splitting, tokenization, stopword removal and frequency counts."""

from __future__ import annotations

import os
import re
from collections import Counter
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path
from typing import Iterable

from .corpus import Document
from .errors import NoSentences, NotFound, NotUtf8

DEFAULT_ABBREVIATIONS = frozenset({"al", "e.g", "i.e", "fig", "figs", "eq", "eqs"})

# letters/digits, optionally joined by a hyphen or slash with alphanumerics on both sides
_TOKEN_RE = re.compile(r"[^\W_]+(?:[-/][^\W_]+)*")
_RAW_TOKEN_RE = re.compile(r"[^\W_]+(?:[-/][^\W_]+)*|[^\w\s]")
_TERMINATOR_RE = re.compile(r"[.!?](?=\s|\Z)")
_PARAGRAPH_RE = re.compile(r"\n[ \t]*\n")


@dataclass(frozen=True)
class Token:
    surface: str
    position: int


@dataclass(frozen=True)
class Sentence:
    index: int
    text: str
    span: tuple[int, int]
    tokens: tuple[Token, ...]
    content_tokens: tuple[Token, ...]

    @property
    def words(self) -> list[str]:
        return [t.surface for t in self.tokens]

    @property
    def content_words(self) -> list[str]:
        return [t.surface for t in self.content_tokens]


@dataclass(frozen=True)
class FrequencyTable:
    counts: dict[str, int]
    total: int

    def most_common(self, top: int | None = None) -> list[tuple[str, int]]:
        """(word, count) pairs by descending count, ties by ascending word."""
        ranked = sorted(self.counts.items(), key=lambda kv: (-kv[1], kv[0]))
        return ranked if top is None else ranked[:top]

    def __getitem__(self, word: str) -> int:
        return self.counts.get(word, 0)

    def __len__(self) -> int:
        return len(self.counts)


def default_stopwords_path() -> Path:
    return Path(str(resources.files("sumforge") / "data" / "english_stopwords.txt"))


def load_stopwords(path: str | os.PathLike | None = None) -> frozenset[str]:
    """Read a stopword file: one word per line, ``#`` starts a comment."""
    path = Path(path) if path is not None else default_stopwords_path()
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise NotFound(f"{path}: no such stopword file") from None
    except UnicodeDecodeError:
        raise NotUtf8(f"{path}: stopword file is not valid UTF-8") from None
    words = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip().lower()
        if line:
            words.add(line)
    return frozenset(words)


def tokenize(sentence_text: str) -> list[Token]:
    """Lowercase word tokens; punctuation is dropped.

    >>> [t.surface for t in tokenize("Friction stir welding (FSW) of 2219-T6!")]
    ['friction', 'stir', 'welding', 'fsw', 'of', '2219-t6']
    """
    return [Token(m.group(0).lower(), i)
            for i, m in enumerate(_TOKEN_RE.finditer(sentence_text))]


def raw_tokens(text: str) -> list[str]:
    """Tokens before punctuation removal: words plus each punctuation mark."""
    return [m.group(0).lower() for m in _RAW_TOKEN_RE.finditer(text)]


def remove_stopwords(tokens: Iterable[Token], stopwords: Iterable[str]) -> list[Token]:
    stopwords = stopwords if isinstance(stopwords, (set, frozenset)) else set(stopwords)
    return [t for t in tokens if t.surface not in stopwords]


def frequency_distribution(tokens: Iterable[Token | str]) -> FrequencyTable:
    counts = Counter(getattr(t, "surface", t) for t in tokens)
    return FrequencyTable(counts=dict(counts), total=sum(counts.values()))


def _is_guarded(text: str, dot: int, abbreviations: frozenset[str]) -> bool:
    if text[dot] != ".":
        return False
    start = dot
    while start > 0 and not text[start - 1].isspace():
        start -= 1
    word = text[start:dot].lstrip("([{\"'").lower()
    if len(word) == 1 and word.isalpha():
        return True
    if word == "al":
        # only "et al." is guarded
        prev = text[:start].rstrip().rsplit(None, 1)
        return bool(prev) and prev[-1].lower() == "et" and "al" in abbreviations
    return word in abbreviations


def _boundaries(text: str, abbreviations: frozenset[str]) -> list[int]:
    cuts = {m.end() for m in _TERMINATOR_RE.finditer(text)
            if not _is_guarded(text, m.start(), abbreviations)}
    cuts.update(m.start() for m in _PARAGRAPH_RE.finditer(text))
    cuts.add(len(text))
    return sorted(cuts)


def split_sentences(document: Document | str,
                    stopwords: Iterable[str] = frozenset(),
                    abbreviations: Iterable[str] = DEFAULT_ABBREVIATIONS) -> list[Sentence]:
    """Split raw text into token-bearing sentences.

    A boundary is ``.``, ``!`` or ``?`` followed by whitespace or the end of
    the text, unless the period closes a guarded abbreviation or a
    single-letter initial. A blank line also ends a sentence, so separately
    written abstracts never merge.

    Raises:
        NoSentences: no fragment contains a token.
    """
    text = document.raw_text if isinstance(document, Document) else document
    abbreviations = frozenset(a.lower().rstrip(".") for a in abbreviations)
    stopwords = frozenset(stopwords)

    sentences: list[Sentence] = []
    prev = 0
    for cut in _boundaries(text, abbreviations):
        chunk = text[prev:cut]
        stripped = chunk.strip()
        if stripped:
            start = prev + (len(chunk) - len(chunk.lstrip()))
            end = start + len(stripped)
            tokens = tuple(tokenize(stripped))
            if tokens:
                sentences.append(Sentence(
                    index=len(sentences),
                    text=text[start:end],
                    span=(start, end),
                    tokens=tokens,
                    content_tokens=tuple(remove_stopwords(tokens, stopwords)),
                ))
        prev = cut
    if not sentences:
        raise NoSentences("text yields no token-bearing sentences")
    return sentences


def prepare_document(document: Document, stopwords: Iterable[str] = frozenset(),
                     abbreviations: Iterable[str] = DEFAULT_ABBREVIATIONS) -> Document:
    """Return a copy of ``document`` with its sentences filled in."""
    return replace(document, sentences=tuple(split_sentences(document, stopwords, abbreviations)))


def sentence_from_text(text: str, stopwords: Iterable[str] = frozenset(), index: int = 0) -> Sentence:
    """Build a single :class:`Sentence` from ``text`` without boundary detection."""
    tokens = tuple(tokenize(text))
    return Sentence(index=index, text=text, span=(0, len(text)), tokens=tokens,
                    content_tokens=tuple(remove_stopwords(tokens, frozenset(stopwords))))


def document_from_texts(sentences: Iterable[str], stopwords: Iterable[str] = frozenset(),
                        doc_id: str = "doc") -> Document:
    """Assemble a prepared document from pre-split sentence strings (mainly for tests)."""
    stopwords = frozenset(stopwords)
    parts: list[Sentence] = []
    raw = ""
    for text in sentences:
        if raw:
            raw += " "
        start = len(raw)
        raw += text
        s = sentence_from_text(text, stopwords, index=len(parts))
        if not s.tokens:
            raw = raw[:start].rstrip(" ")
            continue
        parts.append(replace(s, span=(start, start + len(text))))
    if not parts:
        raise NoSentences("no token-bearing sentences given")
    return Document(id=doc_id, raw_text=raw, sentences=tuple(parts))
