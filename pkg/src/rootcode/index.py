"""Code-keyed sentence index with an append-only TSV journal on disk."""

from __future__ import annotations

import enum
import os
import re
import threading
from dataclasses import dataclass
from pathlib import Path

from .codes import CompositeCode, parse_composite, render_code, render_composite
from .errors import DuplicateDocId, MalformedLine

JOURNAL = "journal.tsv"

_ESCAPES = {"\\": "\\\\", "\t": "\\t", "\n": "\\n", "\r": "\\r"}
_UNESCAPES = {v: k for k, v in _ESCAPES.items()}
_UNESCAPE_RE = re.compile(r"\\[\\tnr]")


def escape(text: str) -> str:
    return "".join(_ESCAPES.get(ch, ch) for ch in text)


def unescape(text: str) -> str:
    return _UNESCAPE_RE.sub(lambda m: _UNESCAPES[m.group(0)], text)


class MatchedOn(enum.Enum):
    FULL = "FULL"
    VERB_ONLY = "VERB_ONLY"


@dataclass(frozen=True)
class IndexedSentence:
    doc_id: str
    language: str
    original_text: str
    composite: str

    def to_line(self) -> str:
        fields = (self.doc_id, self.language, self.composite, self.original_text)
        return "\t".join(escape(f) for f in fields) + "\n"


@dataclass(frozen=True)
class MatchHit:
    doc_id: str
    language: str
    score: float
    matched_on: MatchedOn

    def __str__(self):
        return f"{self.doc_id}\t{self.language}\t{self.score:.4f}\t{self.matched_on.value}"


class MatchIndex:
    """Composite-code index over one directory holding ``journal.tsv``.

    The journal is replayed into memory on open; ``add`` appends to it.
    Writers are serialized by a lock, queries only read.
    """

    def __init__(self, directory):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self.path = self.directory / JOURNAL
        self._lock = threading.Lock()
        self._docs: dict[str, IndexedSentence] = {}
        self._codes: dict[str, CompositeCode] = {}
        self._by_full: dict[str, list[str]] = {}
        self._by_verb: dict[str, list[str]] = {}
        if self.path.exists():
            self._replay()

    def _replay(self):
        with open(self.path, encoding="utf-8", newline="\n") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.rstrip("\n")
                if not line:
                    continue
                fields = line.split("\t")
                if len(fields) != 4:
                    raise MalformedLine(f"journal row has {len(fields)} fields", lineno)
                doc_id, language, composite, text = (unescape(f) for f in fields)
                self._insert(IndexedSentence(doc_id, language, text, composite))

    def _insert(self, sentence: IndexedSentence):
        if sentence.doc_id in self._docs:
            raise DuplicateDocId(f"doc id {sentence.doc_id!r} already indexed")
        code = parse_composite(sentence.composite)
        canonical = render_composite(code)
        self._docs[sentence.doc_id] = sentence
        self._codes[sentence.doc_id] = code
        self._by_full.setdefault(canonical, []).append(sentence.doc_id)
        self._by_verb.setdefault(render_code(code.verb), []).append(sentence.doc_id)

    def __len__(self):
        return len(self._docs)

    def __contains__(self, doc_id):
        return doc_id in self._docs

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def close(self):
        pass  # every add is flushed; nothing is held open

    def get(self, doc_id: str) -> IndexedSentence:
        return self._docs[doc_id]

    def add(self, sentence: IndexedSentence):
        with self._lock:
            self._insert(sentence)
            with open(self.path, "a", encoding="utf-8", newline="\n") as fh:
                fh.write(sentence.to_line())
                fh.flush()
                os.fsync(fh.fileno())

    def query(self, composite: str) -> list[MatchHit]:
        code = parse_composite(composite)
        canonical = render_composite(code)
        full = set(self._by_full.get(canonical, ()))
        hits = []
        for doc_id in self._by_verb.get(render_code(code.verb), ()):
            lang = self._docs[doc_id].language
            if doc_id in full:
                hits.append(MatchHit(doc_id, lang, 1.0, MatchedOn.FULL))
                continue
            stored = self._codes[doc_id]
            same = sum(a == b for a, b in zip(code.slots(), stored.slots()))
            hits.append(MatchHit(doc_id, lang, same / 3, MatchedOn.VERB_ONLY))
        hits.sort(key=lambda h: (h.matched_on is not MatchedOn.FULL, -h.score, h.doc_id))
        return hits


def index_add(index: MatchIndex, sentence: IndexedSentence):
    index.add(sentence)


def query(index: MatchIndex, composite: str) -> list[MatchHit]:
    return index.query(composite)
