"""Monolingual corpus ingestion and exact n-gram phrase counting.

The index stores occurrence counts for every token n-gram up to order N
(default 5, the length of the sentences the count-based sense selection
was designed around).  N-grams never cross sentence-final punctuation.
Counts back the local count oracle; the same scan also feeds
out-of-vocabulary extraction for the data-entry queue.
"""

from __future__ import annotations

import hashlib
import struct
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import NamedTuple

from .errors import EncodingError, FileUnreadable
from .lexicon import Language
from .transfer import tokenize

DEFAULT_ORDER = 5
SENTENCE_FINAL = {".", "!", "?"}

_MAGIC = b"LXNG1\n"


class PhraseCount(NamedTuple):
    count: int
    degraded: bool  # True when the phrase exceeded N and min-over-windows applied


def _fold(token: str) -> str:
    # Case folded, diacritics preserved.
    return token.lower()


def _sentences(tokens):
    """Word-token sentences, split on sentence-final punctuation."""
    sentence = []
    for token in tokens:
        if token.kind == "word":
            sentence.append(_fold(token.surface))
        elif token.surface in SENTENCE_FINAL:
            if sentence:
                yield sentence
            sentence = []
    if sentence:
        yield sentence


@dataclass
class CorpusIndex:
    language: Language
    order: int = DEFAULT_ORDER
    token_count: int = 0
    ngram_counts: Counter = field(default_factory=Counter)
    source_manifest: list = field(default_factory=list)  # sha256 digests

    def add_text(self, text: str, digest: str | None = None):
        if digest is not None:
            if digest in self.source_manifest:
                return self  # re-ingest is a no-op
            self.source_manifest.append(digest)
        for sentence in _sentences(tokenize(text, self.language)):
            self.token_count += len(sentence)
            for n in range(1, self.order + 1):
                for i in range(len(sentence) - n + 1):
                    self.ngram_counts[tuple(sentence[i:i + n])] += 1
        return self

    def count_phrase(self, phrase: str) -> PhraseCount:
        grams = [_fold(t.surface)
                 for t in tokenize(phrase, self.language) if t.kind == "word"]
        if not grams:
            raise ValueError("phrase has no word tokens")
        if len(grams) <= self.order:
            return PhraseCount(self.ngram_counts.get(tuple(grams), 0), False)
        # Longer than the index order: min over sliding N-gram windows is
        # an upper bound on the true count, flagged so callers can distrust it.
        windows = [tuple(grams[i:i + self.order])
                   for i in range(len(grams) - self.order + 1)]
        return PhraseCount(
            min(self.ngram_counts.get(w, 0) for w in windows), True)

    # -- persistence: compact binary map + text debug dump -------------------
    #
    # Binary layout (all integers little-endian):
    #   magic "LXNG1\n"
    #   u8  language tag length, tag bytes (utf-8)
    #   u32 order; u64 token_count
    #   u32 manifest entry count; per entry: u16 length + utf-8 digest
    #   u64 ngram record count; per record:
    #     u8 token count, per token u16 length + utf-8 bytes, u64 count

    def save(self, path):
        with open(path, "wb") as fh:
            fh.write(_MAGIC)
            tag = self.language.value.encode()
            fh.write(struct.pack("<B", len(tag)) + tag)
            fh.write(struct.pack("<IQ", self.order, self.token_count))
            fh.write(struct.pack("<I", len(self.source_manifest)))
            for digest in self.source_manifest:
                raw = digest.encode()
                fh.write(struct.pack("<H", len(raw)) + raw)
            fh.write(struct.pack("<Q", len(self.ngram_counts)))
            for gram, count in self.ngram_counts.items():
                fh.write(struct.pack("<B", len(gram)))
                for token in gram:
                    raw = token.encode()
                    fh.write(struct.pack("<H", len(raw)) + raw)
                fh.write(struct.pack("<Q", count))

    @staticmethod
    def load(path) -> "CorpusIndex":
        with open(path, "rb") as fh:
            if fh.read(len(_MAGIC)) != _MAGIC:
                raise FileUnreadable(f"{path}: not an n-gram index")
            (tag_len,) = struct.unpack("<B", fh.read(1))
            language = Language(fh.read(tag_len).decode())
            order, token_count = struct.unpack("<IQ", fh.read(12))
            (mcount,) = struct.unpack("<I", fh.read(4))
            manifest = []
            for _ in range(mcount):
                (dlen,) = struct.unpack("<H", fh.read(2))
                manifest.append(fh.read(dlen).decode())
            (ncount,) = struct.unpack("<Q", fh.read(8))
            counts = Counter()
            for _ in range(ncount):
                (glen,) = struct.unpack("<B", fh.read(1))
                gram = []
                for _ in range(glen):
                    (tlen,) = struct.unpack("<H", fh.read(2))
                    gram.append(fh.read(tlen).decode())
                (count,) = struct.unpack("<Q", fh.read(8))
                counts[tuple(gram)] = count
        return CorpusIndex(language=language, order=order,
                           token_count=token_count, ngram_counts=counts,
                           source_manifest=manifest)

    def dump_text(self):
        yield f"# language={self.language.value} order={self.order} tokens={self.token_count}"
        for gram in sorted(self.ngram_counts):
            yield f"{' '.join(gram)}\t{self.ngram_counts[gram]}"


def _read_text(path) -> str:
    try:
        raw = Path(path).read_bytes()
    except OSError as err:
        raise FileUnreadable(f"{path}: {err}") from err
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as err:
        raise EncodingError(f"{path}: {err}") from err


def ingest(paths, language, index: CorpusIndex | None = None,
           order=DEFAULT_ORDER) -> CorpusIndex:
    """Count all n-grams in the given UTF-8 files; idempotent per file."""
    language = Language(language)
    if index is None:
        index = CorpusIndex(language=language, order=order)
    for path in paths:
        text = _read_text(path)
        digest = hashlib.sha256(text.encode()).hexdigest()
        index.add_text(text, digest=digest)
    return index


@dataclass(frozen=True)
class OovEntry:
    surface: str
    frequency: int
    sample_contexts: tuple  # up to 3 snippets


@dataclass(frozen=True)
class OovReport:
    entries: tuple


def extract_oov(paths, language, lexicon, max_contexts=3) -> OovReport:
    """Word surfaces absent from the lexicon, frequency-sorted, with
    up to three context snippets each.  Numerals and punctuation excluded."""
    language = Language(language)
    freq = Counter()
    contexts = {}
    known = {}
    for path in paths:
        tokens = tokenize(_read_text(path), language)
        words = [t for t in tokens if t.kind == "word"]
        for i, token in enumerate(words):
            surface = _fold(token.surface)
            if not surface.isalpha():
                continue  # numerals and mixed tokens are not entry candidates
            if surface not in known:
                known[surface] = bool(lexicon.lookup_surface(surface, language))
            if known[surface]:
                continue
            freq[surface] += 1
            snippets = contexts.setdefault(surface, [])
            if len(snippets) < max_contexts:
                window = words[max(0, i - 2): i + 3]
                snippets.append(" ".join(w.surface for w in window))
    entries = tuple(
        OovEntry(surface=s, frequency=f, sample_contexts=tuple(contexts[s]))
        for s, f in sorted(freq.items(), key=lambda kv: (-kv[1], kv[0])))
    return OovReport(entries=entries)
