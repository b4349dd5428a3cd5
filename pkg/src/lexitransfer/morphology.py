"""Data-driven paradigm engine.

A paradigm rule is (stem suffix to strip) + (bundle -> ending table) +
(bundle -> full-surface exception overrides).  Rule packs live in JSON
Lines files, one rule per line, so new declensions/conjugations ship as
data.  Generation is pure: same (lemma, rule) in, same table out.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .errors import StemMismatch, UnknownParadigm
from .features import FeatureBundle, licensed_bundles


@dataclass(frozen=True)
class ParadigmRule:
    paradigm_id: str
    language: str  # "LT" | "EN"
    pos: str       # POS name, e.g. "noun"
    stem_suffix: str
    forms: dict            # FeatureBundle -> ending
    exceptions: dict = field(default_factory=dict)  # FeatureBundle -> surface

    def bundles(self):
        keys = set(self.forms)
        keys.update(self.exceptions)
        return keys


def generate_paradigm(lemma: str, rule: ParadigmRule) -> dict:
    """Full inflection table for lemma under rule: bundle -> surface."""
    if rule.stem_suffix and not lemma.endswith(rule.stem_suffix):
        raise StemMismatch(
            f"lemma {lemma!r} does not end with {rule.stem_suffix!r} "
            f"(paradigm {rule.paradigm_id})")
    stem = lemma[: len(lemma) - len(rule.stem_suffix)] if rule.stem_suffix else lemma
    table = {bundle: stem + ending for bundle, ending in rule.forms.items()}
    table.update(rule.exceptions)  # exceptions always win
    return table


class RulePack:
    """Paradigm rules for one language, keyed by paradigm_id."""

    def __init__(self, language: str, rules=()):
        self.language = language
        self.rules = {}
        for rule in rules:
            self.rules[rule.paradigm_id] = rule

    def get(self, paradigm_id: str) -> ParadigmRule:
        try:
            return self.rules[paradigm_id]
        except KeyError:
            raise UnknownParadigm(f"no paradigm {paradigm_id!r} "
                                  f"for language {self.language}") from None

    def __contains__(self, paradigm_id):
        return paradigm_id in self.rules

    def __iter__(self):
        return iter(self.rules.values())


def rule_from_record(rec: dict) -> ParadigmRule:
    forms = {FeatureBundle.parse(k): v for k, v in rec["forms"].items()}
    exceptions = {FeatureBundle.parse(k): v
                  for k, v in rec.get("exceptions", {}).items()}
    return ParadigmRule(
        paradigm_id=rec["paradigm_id"],
        language=rec["language"],
        pos=rec["pos"],
        stem_suffix=rec.get("stem_suffix", ""),
        forms=forms,
        exceptions=exceptions,
    )


def rule_to_record(rule: ParadigmRule) -> dict:
    return {
        "paradigm_id": rule.paradigm_id,
        "language": rule.language,
        "pos": rule.pos,
        "stem_suffix": rule.stem_suffix,
        "forms": {b.serialize(): e for b, e in sorted(
            rule.forms.items(), key=lambda kv: kv[0].serialize())},
        "exceptions": {b.serialize(): s for b, s in sorted(
            rule.exceptions.items(), key=lambda kv: kv[0].serialize())},
    }


def load_rule_pack_lines(language: str, lines) -> RulePack:
    rules = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rules.append(rule_from_record(json.loads(line)))
    return RulePack(language, rules)


def load_rule_pack(language: str, path) -> RulePack:
    with open(path, encoding="utf-8") as fh:
        return load_rule_pack_lines(language, fh)


def builtin_rule_pack(language: str) -> RulePack:
    name = f"{language.lower()}_rules.jsonl"
    text = resources.files("lexitransfer.data").joinpath(name).read_text("utf-8")
    return load_rule_pack_lines(language, text.splitlines())


def validate_rule_pack(rules) -> list:
    """Diagnostics for a rule pack: completeness, licensing, duplicate ids.

    Empty list means the pack is sound.  Diagnostics are strings prefixed
    with the offending paradigm_id.
    """
    diagnostics = []
    seen = set()
    for rule in rules:
        if rule.paradigm_id in seen:
            diagnostics.append(f"{rule.paradigm_id}: duplicate paradigm_id")
        seen.add(rule.paradigm_id)
        licensed = licensed_bundles(rule.language, rule.pos)
        for bundle in rule.bundles():
            if bundle not in licensed:
                diagnostics.append(
                    f"{rule.paradigm_id}: bundle [{bundle}] not licensed "
                    f"for {rule.language} {rule.pos}")
        missing = licensed - rule.bundles()
        for bundle in sorted(missing, key=lambda b: b.serialize()):
            diagnostics.append(
                f"{rule.paradigm_id}: missing form for [{bundle}]")
    return diagnostics


def analyze(surface: str, language, lexicon) -> list:
    """All (lexeme, bundle) analyses of a surface, deterministically ordered.

    Delegates to the lexicon's surface index; an empty result is the OOV
    signal.
    """
    hits = lexicon.lookup_surface(surface, language)
    return sorted(hits, key=lambda pair: (pair[0].id, pair[1].serialize()))
