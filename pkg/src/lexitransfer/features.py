"""Grammatical feature bundles and the licensing registry.

A FeatureBundle is an immutable, canonically ordered feature->value map.
Two bundles are equal iff their canonical serializations are equal, so the
serialization (``case=genitive|number=sg``) is the wire format used in rule
packs, golden files and the HTTP API.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

# Fixed feature order; canonical serialization sorts by position here.
FEATURE_ORDER = ("case", "number", "degree", "person", "tense", "mood")

FEATURE_VALUES = {
    "case": ("nominative", "genitive", "dative", "accusative",
             "instrumental", "locative", "vocative"),
    "number": ("sg", "pl"),
    "degree": ("positive", "comparative", "superlative"),
    "person": ("1", "2", "3"),
    "tense": ("present", "past", "future"),
    "mood": ("indicative", "infinitive"),
}


@dataclass(frozen=True)
class FeatureBundle:
    pairs: tuple  # tuple of (feature, value), canonically ordered

    @staticmethod
    def of(**features: str) -> "FeatureBundle":
        return FeatureBundle.from_dict(features)

    @staticmethod
    def from_dict(features: dict) -> "FeatureBundle":
        for name, value in features.items():
            if name not in FEATURE_VALUES:
                raise ValueError(f"unknown feature {name!r}")
            if str(value) not in FEATURE_VALUES[name]:
                raise ValueError(f"bad value {value!r} for feature {name!r}")
        ordered = sorted(features.items(), key=lambda kv: FEATURE_ORDER.index(kv[0]))
        return FeatureBundle(tuple((k, str(v)) for k, v in ordered))

    def get(self, feature: str, default=None):
        for name, value in self.pairs:
            if name == feature:
                return value
        return default

    def as_dict(self) -> dict:
        return dict(self.pairs)

    def serialize(self) -> str:
        return "|".join(f"{k}={v}" for k, v in self.pairs)

    @staticmethod
    def parse(text: str) -> "FeatureBundle":
        if not text:
            return EMPTY_BUNDLE
        feats = {}
        for item in text.split("|"):
            k, _, v = item.partition("=")
            feats[k] = v
        return FeatureBundle.from_dict(feats)

    def __str__(self):
        return self.serialize()


EMPTY_BUNDLE = FeatureBundle(())


def _product_bundles(**feature_sets):
    names = [n for n in FEATURE_ORDER if n in feature_sets]
    out = set()
    for combo in itertools.product(*(feature_sets[n] for n in names)):
        out.add(FeatureBundle.from_dict(dict(zip(names, combo))))
    return out


def _verb_bundles():
    finite = _product_bundles(
        tense=FEATURE_VALUES["tense"],
        person=FEATURE_VALUES["person"],
        number=FEATURE_VALUES["number"],
    )
    finite.add(FeatureBundle.of(mood="infinitive"))
    return finite


# Licensed bundle inventories per (language tag, POS name).  Lithuanian
# nouns decline over 7 cases x 2 numbers = 14 forms; English nouns only
# over number.  Verbs share the 19-bundle starter inventory (3 tenses x
# 3 persons x 2 numbers + infinitive).  Everything else is invariable.
def licensed_bundles(language_tag: str, pos_name: str) -> frozenset:
    if pos_name == "noun":
        if language_tag == "LT":
            return frozenset(_product_bundles(
                case=FEATURE_VALUES["case"], number=FEATURE_VALUES["number"]))
        return frozenset(_product_bundles(number=FEATURE_VALUES["number"]))
    if pos_name == "verb":
        return frozenset(_verb_bundles())
    if pos_name == "adjective":
        if language_tag == "LT":
            return frozenset(_product_bundles(
                case=FEATURE_VALUES["case"], number=FEATURE_VALUES["number"],
                degree=FEATURE_VALUES["degree"]))
        return frozenset(_product_bundles(degree=FEATURE_VALUES["degree"]))
    return frozenset({EMPTY_BUNDLE})
