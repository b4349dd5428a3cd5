"""Bilingual lexicon store.

Holds lexemes, their materialized inflection tables, directed sense links
with per-source priority ranks and optional domain tags, a phrase
dictionary deliberately decoupled from lexeme ids (deleting a word never
touches phrases), and an append-only audit log recording who changed what.

Reads are safe from any thread; mutations serialize through one lock.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum

from . import morphology
from .errors import (DuplicateLexeme, NotFound, PosLanguageMismatch,
                     PriorityCollision, SameLanguage, NoSuchForm)
from .features import FeatureBundle


class Language(str, Enum):
    LT = "LT"
    EN = "EN"


# 11 Lithuanian POS; English adds a combined auxiliary/determiner class.
POS_NAMES = {
    "LT": ("noun", "adjective", "numeral", "pronoun", "verb", "adverb",
           "preposition", "conjunction", "particle", "interjection",
           "onomatopoeia"),
    "EN": ("noun", "adjective", "numeral", "pronoun", "verb", "adverb",
           "preposition", "conjunction", "particle", "interjection",
           "onomatopoeia", "determiner"),
}


@dataclass(frozen=True)
class PartOfSpeech:
    language: Language
    name: str

    def __post_init__(self):
        if self.name not in POS_NAMES[self.language.value]:
            raise ValueError(
                f"{self.name!r} is not a {self.language.value} part of speech")


@dataclass(frozen=True)
class Lexeme:
    id: str
    language: Language
    lemma: str
    pos: PartOfSpeech
    paradigm_id: str
    attributes: tuple = ()   # sorted (key, value) pairs
    domains: frozenset = frozenset()

    def attr_dict(self):
        return dict(self.attributes)


@dataclass(frozen=True)
class SenseLink:
    source_id: str
    target_id: str
    priority: int
    domain: str | None = None


@dataclass(frozen=True)
class PhraseEntry:
    id: str
    source_language: Language
    source_pattern: tuple      # lemma strings, soft references only
    target_text: str
    priority: int


@dataclass(frozen=True)
class ChangeRecord:
    seq: int
    actor: str
    timestamp: str             # ISO-8601 UTC
    entity_kind: str
    entity_id: str
    op: str                    # create | update | delete


def _fold(surface: str) -> str:
    # Lookups are case-folded; stored lemmas keep original capitalization.
    return surface.lower()


@dataclass
class _LexemeRows:
    forms: dict = field(default_factory=dict)   # FeatureBundle -> surface


class Lexicon:
    def __init__(self, rule_packs: dict | None = None, lookup_cache=None,
                 audit_path=None):
        # rule_packs: {"LT": RulePack, "EN": RulePack}
        self.rule_packs = rule_packs or {
            "LT": morphology.builtin_rule_pack("LT"),
            "EN": morphology.builtin_rule_pack("EN"),
        }
        self._lock = threading.RLock()
        self._lexemes: dict[str, Lexeme] = {}
        self._rows: dict[str, _LexemeRows] = {}
        self._by_key: dict[tuple, str] = {}          # uniqueness index
        self._surface: dict[tuple, list] = {}        # (lang, folded) -> [(id, bundle)]
        self._links: dict[str, dict[int, SenseLink]] = {}   # source -> prio -> link
        self._incoming: dict[str, set] = {}          # target -> {source ids}
        self._phrases: dict[str, PhraseEntry] = {}
        self._audit: list[ChangeRecord] = []
        self._seq = 0
        self._next_id = 1
        self._next_phrase = 1
        self.lookup_cache = lookup_cache
        self.audit_path = audit_path

    # -- internals ---------------------------------------------------------

    def _new_id(self, prefix="L"):
        ident = f"{prefix}{self._next_id:06d}"
        self._next_id += 1
        return ident

    def _record(self, actor, kind, entity_id, op):
        self._seq += 1
        rec = ChangeRecord(
            seq=self._seq,
            actor=actor,
            timestamp=datetime.now(timezone.utc).isoformat(),
            entity_kind=kind,
            entity_id=entity_id,
            op=op,
        )
        self._audit.append(rec)
        if self.audit_path:
            with open(self.audit_path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(rec.__dict__, ensure_ascii=False) + "\n")
        return rec

    def _invalidate_lookups(self):
        if self.lookup_cache is not None:
            self.lookup_cache.invalidate()

    def _rule_for(self, language: Language, paradigm_id: str):
        return self.rule_packs[language.value].get(paradigm_id)

    # -- lexemes -----------------------------------------------------------

    def add_lexeme(self, lemma, language, pos, paradigm_id, attributes=None,
                   domains=None, actor="anonymous", lexeme_id=None) -> str:
        if not lemma:
            raise ValueError("lemma must be non-empty")
        language = Language(language)
        if isinstance(pos, str):
            pos = PartOfSpeech(language, pos)
        if pos.language != language:
            raise PosLanguageMismatch(
                f"POS {pos.name} belongs to {pos.language.value}, "
                f"lexeme is {language.value}")
        rule = self._rule_for(language, paradigm_id)  # raises UnknownParadigm
        if rule.pos != pos.name:
            raise PosLanguageMismatch(
                f"paradigm {paradigm_id} is for {rule.pos}, not {pos.name}")
        with self._lock:
            key = (language.value, lemma, pos.name, paradigm_id)
            if key in self._by_key:
                raise DuplicateLexeme(f"{key} already in store")
            lexeme = Lexeme(
                id=lexeme_id or self._new_id(),
                language=language,
                lemma=lemma,
                pos=pos,
                paradigm_id=paradigm_id,
                attributes=tuple(sorted((attributes or {}).items())),
                domains=frozenset(domains or ()),
            )
            table = morphology.generate_paradigm(lemma, rule)
            self._lexemes[lexeme.id] = lexeme
            self._by_key[key] = lexeme.id
            self._rows[lexeme.id] = _LexemeRows(forms=table)
            for bundle, surface in table.items():
                self._surface.setdefault(
                    (language.value, _fold(surface)), []).append((lexeme.id, bundle))
            self._links.setdefault(lexeme.id, {})
            self._record(actor, "lexeme", lexeme.id, "create")
            self._invalidate_lookups()
            return lexeme.id

    def delete_lexeme(self, lexeme_id, actor="anonymous"):
        with self._lock:
            lexeme = self._lexemes.get(lexeme_id)
            if lexeme is None:
                raise NotFound(f"no lexeme {lexeme_id}")
            for bundle, surface in self._rows[lexeme_id].forms.items():
                key = (lexeme.language.value, _fold(surface))
                entries = self._surface.get(key, [])
                self._surface[key] = [e for e in entries if e[0] != lexeme_id]
                if not self._surface[key]:
                    del self._surface[key]
            del self._rows[lexeme_id]
            del self._lexemes[lexeme_id]
            del self._by_key[(lexeme.language.value, lexeme.lemma,
                              lexeme.pos.name, lexeme.paradigm_id)]
            # outgoing links
            self._links.pop(lexeme_id, None)
            # incoming links
            for src in self._incoming.pop(lexeme_id, set()):
                if src in self._links:
                    self._links[src] = {
                        p: l for p, l in self._links[src].items()
                        if l.target_id != lexeme_id}
            self._record(actor, "lexeme", lexeme_id, "delete")
            self._invalidate_lookups()

    def get_lexeme(self, lexeme_id) -> Lexeme:
        lexeme = self._lexemes.get(lexeme_id)
        if lexeme is None:
            raise NotFound(f"no lexeme {lexeme_id}")
        return lexeme

    def find_lexeme(self, language, lemma, pos_name=None):
        language = Language(language).value
        out = []
        for lexeme in self._lexemes.values():
            if lexeme.language.value != language or lexeme.lemma != lemma:
                continue
            if pos_name and lexeme.pos.name != pos_name:
                continue
            out.append(lexeme)
        return out

    def list_lexemes(self, language=None, pos_name=None, query=None):
        # Streaming view over the store; append stays amortized O(1).
        language = Language(language).value if language else None
        for lexeme in list(self._lexemes.values()):
            if language and lexeme.language.value != language:
                continue
            if pos_name and lexeme.pos.name != pos_name:
                continue
            if query and query.lower() not in lexeme.lemma.lower():
                continue
            yield lexeme

    # -- forms -------------------------------------------------------------

    def paradigm_of(self, lexeme_id) -> dict:
        self.get_lexeme(lexeme_id)
        return dict(self._rows[lexeme_id].forms)

    def lookup_form(self, lexeme_id, features: FeatureBundle) -> str:
        self.get_lexeme(lexeme_id)
        forms = self._rows[lexeme_id].forms
        try:
            return forms[features]
        except KeyError:
            raise NoSuchForm(
                f"lexeme {lexeme_id} has no form [{features}]") from None

    def _lookup_surface_uncached(self, surface, language):
        key = (Language(language).value, _fold(surface))
        hits = self._surface.get(key, [])
        return tuple((self._lexemes[lid], bundle) for lid, bundle in hits)

    def lookup_surface(self, surface, language):
        if self.lookup_cache is not None:
            key = f"{Language(language).value}\x00{_fold(surface)}"
            return list(self.lookup_cache.get_through(
                key, lambda _k: self._lookup_surface_uncached(surface, language)))
        return list(self._lookup_surface_uncached(surface, language))

    def reindex(self, actor="maintenance"):
        """Regenerate all materialized forms from the current rule packs."""
        with self._lock:
            self._surface.clear()
            for lexeme in self._lexemes.values():
                rule = self._rule_for(lexeme.language, lexeme.paradigm_id)
                table = morphology.generate_paradigm(lexeme.lemma, rule)
                self._rows[lexeme.id] = _LexemeRows(forms=table)
                for bundle, surface in table.items():
                    self._surface.setdefault(
                        (lexeme.language.value, _fold(surface)), []
                    ).append((lexeme.id, bundle))
            self._invalidate_lookups()

    # -- sense links -------------------------------------------------------

    def link_senses(self, source_id, target_id, priority, domain=None,
                    actor="anonymous") -> SenseLink:
        if priority < 1:
            raise ValueError("priority must be a positive integer")
        with self._lock:
            source = self.get_lexeme(source_id)
            target = self.get_lexeme(target_id)
            if source.language == target.language:
                raise SameLanguage(
                    f"both lexemes are {source.language.value}")
            links = self._links.setdefault(source_id, {})
            if priority in links:
                raise PriorityCollision(
                    f"priority {priority} already used for {source_id}")
            link = SenseLink(source_id, target_id, priority, domain)
            links[priority] = link
            self._incoming.setdefault(target_id, set()).add(source_id)
            self._record(actor, "link", f"{source_id}->{target_id}", "create")
            return link

    def unlink_senses(self, source_id, target_id, actor="anonymous"):
        with self._lock:
            links = self._links.get(source_id, {})
            doomed = [p for p, l in links.items() if l.target_id == target_id]
            if not doomed:
                raise NotFound(f"no link {source_id}->{target_id}")
            for p in doomed:
                del links[p]
            self._record(actor, "link", f"{source_id}->{target_id}", "delete")

    def resolve_senses(self, source_id, active_domain=None) -> list:
        """Targets of source, domain-matching links first, priority order
        within each partition.  Returns [(target Lexeme, priority), ...]."""
        self.get_lexeme(source_id)
        links = sorted(self._links.get(source_id, {}).values(),
                       key=lambda l: l.priority)
        if active_domain is not None:
            links = ([l for l in links if l.domain == active_domain]
                     + [l for l in links if l.domain != active_domain])
        return [(self._lexemes[l.target_id], l.priority) for l in links]

    def links_of(self, source_id):
        return sorted(self._links.get(source_id, {}).values(),
                      key=lambda l: l.priority)

    # -- phrases -----------------------------------------------------------

    def add_phrase(self, source_language, source_pattern, target_text,
                   priority=1, actor="anonymous", phrase_id=None) -> str:
        with self._lock:
            if phrase_id is None:
                pid = f"P{self._next_phrase:06d}"
                self._next_phrase += 1
            else:
                pid = phrase_id
            self._phrases[pid] = PhraseEntry(
                id=pid,
                source_language=Language(source_language),
                source_pattern=tuple(source_pattern),
                target_text=target_text,
                priority=priority,
            )
            self._record(actor, "phrase", pid, "create")
            return pid

    def list_phrases(self, source_language=None):
        language = Language(source_language).value if source_language else None
        return [p for p in self._phrases.values()
                if language is None or p.source_language.value == language]

    def phrase_count(self):
        return len(self._phrases)

    # -- audit -------------------------------------------------------------

    def audit_log(self, since_seq=0):
        if since_seq < 0:
            raise ValueError("since_seq must be >= 0")
        return [r for r in self._audit if r.seq > since_seq]

    # -- exchange format ---------------------------------------------------

    def export_lines(self):
        """JSON Lines exchange dump: lexeme, link and phrase records."""
        for lexeme in self._lexemes.values():
            yield json.dumps({
                "kind": "lexeme",
                "id": lexeme.id,
                "language": lexeme.language.value,
                "lemma": lexeme.lemma,
                "pos": lexeme.pos.name,
                "paradigm_id": lexeme.paradigm_id,
                "attributes": dict(lexeme.attributes),
                "domains": sorted(lexeme.domains),
            }, ensure_ascii=False, sort_keys=True)
        for links in self._links.values():
            for link in sorted(links.values(), key=lambda l: l.priority):
                yield json.dumps({
                    "kind": "link",
                    "source_id": link.source_id,
                    "target_id": link.target_id,
                    "priority": link.priority,
                    "domain": link.domain,
                }, ensure_ascii=False, sort_keys=True)
        for phrase in self._phrases.values():
            yield json.dumps({
                "kind": "phrase",
                "id": phrase.id,
                "source_language": phrase.source_language.value,
                "source_pattern": list(phrase.source_pattern),
                "target_text": phrase.target_text,
                "priority": phrase.priority,
            }, ensure_ascii=False, sort_keys=True)

    def import_lines(self, lines, actor="import"):
        id_map = {}
        deferred_links = []
        for line in lines:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            kind = rec["kind"]
            if kind == "lexeme":
                # Preserve incoming ids when free so export/import round-trips.
                wanted = rec["id"] if rec["id"] not in self._lexemes else None
                new_id = self.add_lexeme(
                    rec["lemma"], rec["language"], rec["pos"],
                    rec["paradigm_id"], rec.get("attributes") or {},
                    rec.get("domains") or (), actor=actor, lexeme_id=wanted)
                id_map[rec["id"]] = new_id
            elif kind == "link":
                deferred_links.append(rec)
            elif kind == "phrase":
                wanted = rec["id"] if rec["id"] not in self._phrases else None
                self.add_phrase(rec["source_language"], rec["source_pattern"],
                                rec["target_text"], rec.get("priority", 1),
                                actor=actor, phrase_id=wanted)
            else:
                raise ValueError(f"unknown record kind {kind!r}")
        for rec in deferred_links:
            self.link_senses(
                id_map.get(rec["source_id"], rec["source_id"]),
                id_map.get(rec["target_id"], rec["target_id"]),
                rec["priority"], rec.get("domain"), actor=actor)
        return id_map
