"""Loading abstracts from disk into :class:`Document` / :class:`Corpus` values."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING, Iterator

from .errors import EmptyFile, NoTextFiles, NotFound, NotUtf8

if TYPE_CHECKING:
    from .textprep import Sentence

#: Inserted between files when a directory is concatenated into one document.
CONCAT_SEPARATOR = "\n\n"


@dataclass(frozen=True)
class Document:
    """A single text plus (once prepared) its ordered sentences."""

    id: str
    raw_text: str
    sentences: tuple[Sentence, ...] = field(default=(), repr=False)

    @property
    def is_prepared(self) -> bool:
        return bool(self.sentences)


@dataclass(frozen=True)
class Corpus:
    documents: tuple[Document, ...]
    source_manifest: tuple[tuple[str, int], ...]

    def __iter__(self) -> Iterator[Document]:
        return iter(self.documents)

    def __len__(self) -> int:
        return len(self.documents)


def normalize_newlines(text: str) -> str:
    return text.replace("\r\n", "\n").replace("\r", "\n")


def _read_text(path: Path) -> tuple[str, int]:
    try:
        data = path.read_bytes()
    except FileNotFoundError:
        raise NotFound(f"{path}: no such file") from None
    except IsADirectoryError:
        raise NotFound(f"{path}: is a directory") from None
    except OSError as exc:
        raise NotFound(f"{path}: {exc.strerror}") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise NotUtf8(f"{path}: invalid UTF-8 at byte {exc.start}") from None
    return normalize_newlines(text), len(data)


def load_document(path: str | os.PathLike, doc_id: str | None = None) -> Document:
    """Read one UTF-8 text file.

    Line endings are normalized to ``\\n``; the document id defaults to the
    file stem.

    Raises:
        NotFound: the path does not exist or is not a readable file.
        NotUtf8: the bytes are not valid UTF-8 (never silently replaced).
        EmptyFile: the file holds only whitespace.
    """
    path = Path(path)
    text, _ = _read_text(path)
    if not text.strip():
        raise EmptyFile(f"{path}: file contains no text")
    return Document(id=doc_id or path.stem, raw_text=text)


def load_corpus(path: str | os.PathLike, concat: bool = False) -> Corpus:
    """Load a directory of ``.txt`` files (or a single file).

    Files are read in lexicographic filename order. With ``concat=True`` they
    are joined by :data:`CONCAT_SEPARATOR` into one document named after the
    directory, which reproduces the single-text-file workflow.
    """
    path = Path(path)
    if not path.exists():
        raise NotFound(f"{path}: no such file or directory")
    if path.is_file():
        text, nbytes = _read_text(path)
        if not text.strip():
            raise EmptyFile(f"{path}: file contains no text")
        doc = Document(id=path.stem, raw_text=text)
        return Corpus(documents=(doc,), source_manifest=((str(path), nbytes),))

    files = sorted((p for p in path.iterdir() if p.suffix == ".txt" and p.is_file()),
                   key=lambda p: p.name)
    if not files:
        raise NoTextFiles(f"{path}: no .txt files found")

    docs = []
    manifest = []
    for f in files:
        text, nbytes = _read_text(f)
        if not text.strip():
            raise EmptyFile(f"{f}: file contains no text")
        docs.append(Document(id=f.stem, raw_text=text))
        manifest.append((str(f), nbytes))

    if concat:
        joined = CONCAT_SEPARATOR.join(d.raw_text for d in docs)
        docs = [Document(id=path.resolve().name or "corpus", raw_text=joined)]
    else:
        ids = [d.id for d in docs]
        assert len(set(ids)) == len(ids)  # stems of distinct *.txt names are distinct
    return Corpus(documents=tuple(docs), source_manifest=tuple(manifest))
