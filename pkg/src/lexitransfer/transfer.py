"""Direct-transfer translation pipeline.

tokenize -> analyze into slots -> expand per-slot sense choices into
variants (best-first by sense priority) -> filter/permute with syntax
rules -> assign target inflection via agreement rules and render ->
rank, either by phrase counts (wsd) or by priority sum.

Word order is kept from the source by default; reordering and agreement
are data files, not code.
"""

from __future__ import annotations

import heapq
import json
import re
from dataclasses import dataclass, field, replace
from importlib import resources

from . import morphology
from .errors import EmptyInput, NoSuchForm
from .features import EMPTY_BUNDLE, FeatureBundle
from .lexicon import Language, Lexeme

TOKEN_RE = re.compile(r"\w+|[^\w\s]", re.UNICODE)

# Direction-specific POS classes that translate to nothing (Lithuanian
# has no articles).
DROP_POS = {("EN", "LT"): frozenset({"determiner"})}

# Minimal tense transfer table; identity for the starter tense set.
TENSE_MAP = {
    ("EN", "LT"): {"present": "present", "past": "past", "future": "future"},
    ("LT", "EN"): {"present": "present", "past": "past", "future": "future"},
}

CLOSING_PUNCT = set(".,!?;:)]}…”'\"")
OPENING_PUNCT = set("([{„“")


@dataclass(frozen=True)
class Token:
    surface: str
    position: int
    kind: str            # word | punctuation
    capitalization: str  # lower | initial | all_caps


@dataclass(frozen=True)
class Slot:
    token: Token
    analyses: tuple      # ((Lexeme, FeatureBundle), ...)
    oov: bool


@dataclass(frozen=True)
class SenseChoice:
    """One per-slot option: a target lexeme, or source passthrough."""
    kind: str                      # translated | passthrough
    source_token: Token
    source_bundle: FeatureBundle | None = None
    source_lexeme: Lexeme | None = None
    target: Lexeme | None = None
    priority: int | None = None


@dataclass(frozen=True)
class VariantSlot:
    choice: SenseChoice
    target_bundle: FeatureBundle | None = None
    surface: str | None = None


@dataclass(frozen=True)
class TranslationVariant:
    slots: tuple                   # VariantSlot, source (or reordered) order
    sense_priorities: tuple        # priorities of translated slots, in order
    rendered: str = ""
    score: int | None = None

    def priority_sum(self):
        return sum(self.sense_priorities)

    def rank_key(self):
        return (self.priority_sum(), self.sense_priorities)


@dataclass(frozen=True)
class SyntaxRule:
    id: str
    kind: str                      # forbid | reorder
    pattern: tuple                 # predicate dicts: {"pos": ...} | {"lemma": ...} | {"any": true}
    order: tuple | None = None     # permutation, reorder only

    def __post_init__(self):
        if self.kind == "reorder":
            if self.order is None or sorted(self.order) != list(range(len(self.pattern))):
                raise ValueError(f"rule {self.id}: order must permute the pattern")


@dataclass(frozen=True)
class AgreementRule:
    id: str
    direction: tuple               # (source tag, target tag)
    pattern: tuple                 # same predicate grammar as SyntaxRule
    assign: tuple                  # ({"slot": i, "set": {...}, "copy": [...]}, ...)


@dataclass
class TranslationResult:
    variants: list                 # ranked TranslationVariant
    slots: list                    # analysis slots, source order
    alternatives: list             # per slot: [(target Lexeme, priority), ...]
    used_wsd: bool = False
    used_fallback: bool = False
    diagnostics: list = field(default_factory=list)


# -- tokenization -----------------------------------------------------------

def tokenize(text: str, language: Language) -> list:
    tokens = []
    for i, raw in enumerate(TOKEN_RE.findall(text)):
        kind = "word" if any(ch.isalnum() for ch in raw) else "punctuation"
        if len(raw) > 1 and raw.isupper():
            cap = "all_caps"
        elif raw[:1].isupper():
            cap = "initial"
        else:
            cap = "lower"
        tokens.append(Token(surface=raw, position=i, kind=kind,
                            capitalization=cap))
    return tokens


def detokenize(parts) -> str:
    """parts: [(surface, kind), ...] -> sentence string, initial capitalized."""
    out = []
    for surface, kind in parts:
        if not surface:
            continue
        if out and not (kind == "punctuation" and surface in CLOSING_PUNCT) \
                and out[-1] not in OPENING_PUNCT:
            out.append(" ")
        out.append(surface)
    text = "".join(out)
    for i, ch in enumerate(text):
        if ch.isalpha():
            return text[:i] + ch.upper() + text[i + 1:]
    return text


# -- analysis ---------------------------------------------------------------

def build_slots(tokens, lexicon, language) -> list:
    language = Language(language)
    slots = []
    for token in tokens:
        if token.kind != "word":
            slots.append(Slot(token=token, analyses=(), oov=False))
            continue
        analyses = tuple(morphology.analyze(token.surface, language, lexicon))
        slots.append(Slot(token=token, analyses=analyses, oov=not analyses))
    return slots


# -- variant expansion ------------------------------------------------------

def slot_choices(slot: Slot, lexicon, direction, active_domain=None) -> list:
    """Ordered options for one slot; empty list means the slot is dropped."""
    if slot.token.kind != "word" or slot.oov:
        return [SenseChoice(kind="passthrough", source_token=slot.token)]
    choices = []
    seen = set()
    for lexeme, bundle in slot.analyses:
        for target, priority in lexicon.resolve_senses(lexeme.id, active_domain):
            if target.language.value != direction[1] or target.id in seen:
                continue
            seen.add(target.id)
            choices.append(SenseChoice(
                kind="translated", source_token=slot.token,
                source_bundle=bundle, source_lexeme=lexeme,
                target=target, priority=priority))
    if choices:
        return choices
    drop = DROP_POS.get(direction, frozenset())
    if all(lex.pos.name in drop for lex, _ in slot.analyses):
        return []  # e.g. EN articles going to Lithuanian
    return [SenseChoice(kind="passthrough", source_token=slot.token)]


def expand_variants(slots, lexicon, direction, active_domain=None,
                    max_variants=64) -> list:
    """Best-first cross-product of per-slot sense choices.

    Enumeration cost of a choice is its rank in resolve order, so the
    all-top-choice variant comes out first; ties break lexicographically
    on the per-slot rank vector.  Truncated at max_variants.
    """
    if max_variants < 1:
        raise ValueError("max_variants must be >= 1")
    per_slot = [slot_choices(s, lexicon, direction, active_domain)
                for s in slots]
    per_slot = [c for c in per_slot if c]  # dropped slots vanish
    if not per_slot:
        return []
    multi = [i for i, c in enumerate(per_slot) if len(c) > 1]
    variants = []

    def make_variant(indices):
        vslots = tuple(VariantSlot(choice=per_slot[i][indices[i]])
                       for i in range(len(per_slot)))
        prios = tuple(vs.choice.priority for vs in vslots
                      if vs.choice.kind == "translated")
        return TranslationVariant(slots=vslots, sense_priorities=prios)

    start = tuple(0 for _ in per_slot)
    heap = [(0, start, start)]
    seen = {start}
    while heap and len(variants) < max_variants:
        _, _, indices = heapq.heappop(heap)
        variants.append(make_variant(indices))
        for i in multi:
            if indices[i] + 1 < len(per_slot[i]):
                nxt = indices[:i] + (indices[i] + 1,) + indices[i + 1:]
                if nxt not in seen:
                    seen.add(nxt)
                    heapq.heappush(heap, (sum(nxt), nxt, nxt))
    return variants


# -- syntax rules -----------------------------------------------------------

def _pred_matches(pred: dict, vslot: VariantSlot) -> bool:
    if pred.get("any"):
        return True
    choice = vslot.choice
    if "pos" in pred:
        return (choice.kind == "translated"
                and choice.target.pos.name == pred["pos"])
    if "lemma" in pred:
        word = (choice.target.lemma if choice.kind == "translated"
                else choice.source_token.surface)
        return word.lower() == pred["lemma"].lower()
    return False


def _find_match(pattern, vslots, start=0):
    width = len(pattern)
    for i in range(start, len(vslots) - width + 1):
        if all(_pred_matches(p, vslots[i + j]) for j, p in enumerate(pattern)):
            return i
    return None


def apply_syntax_rules(variant: TranslationVariant, rules):
    """None if a forbid rule matches; otherwise reorder rules applied
    left-to-right, first match, once each."""
    vslots = list(variant.slots)
    for rule in rules:
        if rule.kind != "forbid":
            continue
        if _find_match(rule.pattern, vslots) is not None:
            return None
    for rule in rules:
        if rule.kind != "reorder":
            continue
        at = _find_match(rule.pattern, vslots)
        if at is not None:
            window = [vslots[at + j] for j in rule.order]
            vslots[at:at + len(rule.order)] = window
    vslots = tuple(vslots)
    prios = tuple(vs.choice.priority for vs in vslots
                  if vs.choice.kind == "translated")
    return replace(variant, slots=vslots, sense_priorities=prios)


# -- ending tuning ----------------------------------------------------------

def _default_bundle(choice: SenseChoice, direction) -> FeatureBundle:
    target = choice.target
    src = choice.source_bundle or EMPTY_BUNDLE
    pos = target.pos.name
    lang = target.language.value
    if pos == "noun":
        feats = {"number": src.get("number", "sg")}
        if lang == "LT":
            feats["case"] = "nominative"
        return FeatureBundle.from_dict(feats)
    if pos == "verb":
        if src.get("mood") == "infinitive":
            return FeatureBundle.of(mood="infinitive")
        tense_map = TENSE_MAP.get(direction, {})
        tense = tense_map.get(src.get("tense", "present"), "present")
        return FeatureBundle.from_dict({
            "tense": tense,
            "person": src.get("person", "3"),
            "number": src.get("number", "sg"),
        })
    if pos == "adjective":
        feats = {"degree": src.get("degree", "positive")}
        if lang == "LT":
            feats["case"] = "nominative"
            feats["number"] = src.get("number", "sg")
        return FeatureBundle.from_dict(feats)
    return EMPTY_BUNDLE


def tune_endings(variant: TranslationVariant, direction, agreement_rules,
                 lexicon) -> TranslationVariant:
    """Assign each translated slot a target bundle (defaults + agreement
    rules), render via single-form lookup, detokenize.

    Raises NoSuchForm when agreement demands a bundle outside the target
    paradigm; callers eliminate the variant and keep a diagnostic.
    """
    vslots = list(variant.slots)
    bundles = {}
    for i, vs in enumerate(vslots):
        if vs.choice.kind == "translated":
            bundles[i] = dict(_default_bundle(vs.choice, direction).pairs)
    for rule in agreement_rules:
        if rule.direction != direction:
            continue
        at = _find_match(rule.pattern, vslots)
        while at is not None:
            for assignment in rule.assign:
                idx = at + assignment["slot"]
                if idx not in bundles:
                    continue
                bundles[idx].update(assignment.get("set", {}))
                # Features copy from the slot's own source analysis, or
                # from another matched slot's when copy_from names one.
                from_idx = at + assignment.get("copy_from", assignment["slot"])
                src = vslots[from_idx].choice.source_bundle or EMPTY_BUNDLE
                for feat in assignment.get("copy", ()):
                    value = src.get(feat)
                    if value is not None:
                        bundles[idx][feat] = value
            at = _find_match(rule.pattern, vslots, at + len(rule.pattern))
    parts = []
    for i, vs in enumerate(vslots):
        if vs.choice.kind == "translated":
            bundle = FeatureBundle.from_dict(bundles[i])
            surface = lexicon.lookup_form(vs.choice.target.id, bundle)
            vslots[i] = replace(vs, target_bundle=bundle, surface=surface)
            parts.append((surface, "word"))
        else:
            vslots[i] = replace(vs, surface=vs.choice.source_token.surface)
            parts.append((vs.choice.source_token.surface,
                          vs.choice.source_token.kind))
    return replace(variant, slots=tuple(vslots), rendered=detokenize(parts))


# -- rule file loading ------------------------------------------------------

def _parse_direction(text: str) -> tuple:
    src, _, dst = text.upper().partition("->")
    return (src.strip(), dst.strip())


def load_syntax_rules(lines) -> list:
    rules = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rec = json.loads(line)
        rules.append(SyntaxRule(
            id=rec["id"], kind=rec["kind"],
            pattern=tuple(rec["pattern"]),
            order=tuple(rec["order"]) if rec.get("order") else None))
    return rules


def load_agreement_rules(lines) -> list:
    rules = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rec = json.loads(line)
        rules.append(AgreementRule(
            id=rec["id"], direction=_parse_direction(rec["direction"]),
            pattern=tuple(rec["pattern"]),
            assign=tuple(rec["assign"])))
    return rules


def builtin_agreement_rules() -> list:
    text = resources.files("lexitransfer.data").joinpath(
        "agreement_rules.jsonl").read_text("utf-8")
    return load_agreement_rules(text.splitlines())


def builtin_syntax_rules() -> list:
    text = resources.files("lexitransfer.data").joinpath(
        "syntax_rules.jsonl").read_text("utf-8")
    return load_syntax_rules(text.splitlines())


# -- whole pipeline ---------------------------------------------------------

def translate(text, lexicon, direction, active_domain=None, max_variants=64,
              use_wsd=False, oracle=None, syntax_rules=None,
              agreement_rules=None) -> TranslationResult:
    """Ranked translation variants plus per-slot alternatives.

    direction is a (source tag, target tag) pair like ("EN", "LT").
    With use_wsd, variants are ranked by oracle counts (ties and the
    all-zero case fall back to priority ranking); otherwise by ascending
    priority sum with a lexicographic tie-break.
    """
    from . import wsd as wsd_mod

    if not text or not text.strip():
        raise EmptyInput("nothing to translate")
    direction = (Language(direction[0]).value, Language(direction[1]).value)
    if syntax_rules is None:
        syntax_rules = builtin_syntax_rules()
    if agreement_rules is None:
        agreement_rules = builtin_agreement_rules()

    tokens = tokenize(text, Language(direction[0]))
    slots = build_slots(tokens, lexicon, direction[0])
    raw = expand_variants(slots, lexicon, direction, active_domain,
                          max_variants)
    diagnostics = []
    tuned = []
    for variant in raw:
        kept = apply_syntax_rules(variant, syntax_rules)
        if kept is None:
            continue
        try:
            tuned.append(tune_endings(kept, direction, agreement_rules,
                                      lexicon))
        except NoSuchForm as err:
            diagnostics.append(str(err))

    used_fallback = False
    if use_wsd and tuned:
        if oracle is None:
            raise ValueError("use_wsd requires an oracle")
        selection = wsd_mod.score_and_select(tuned, oracle)
        used_fallback = selection.fallback
        by_rendered = {sv.variant.rendered: sv.count
                       for sv in selection.scored}
        tuned = [replace(v, score=by_rendered.get(v.rendered))
                 for v in tuned]
        if used_fallback:
            tuned.sort(key=TranslationVariant.rank_key)
        else:
            tuned.sort(key=lambda v: (-(v.score or 0),) + v.rank_key())
    else:
        tuned.sort(key=TranslationVariant.rank_key)

    alternatives = []
    for slot in slots:
        options = []
        seen = set()
        for lexeme, _bundle in slot.analyses:
            for target, priority in lexicon.resolve_senses(lexeme.id,
                                                           active_domain):
                if target.language.value != direction[1] or target.id in seen:
                    continue
                seen.add(target.id)
                options.append((target, priority))
        alternatives.append(options)

    return TranslationResult(
        variants=tuned, slots=slots, alternatives=alternatives,
        used_wsd=use_wsd, used_fallback=used_fallback,
        diagnostics=diagnostics)


def retune(text, lexicon, direction, chosen_targets, syntax_rules=None,
           agreement_rules=None) -> TranslationVariant:
    """Re-render one variant with explicit per-word target lexeme ids.

    chosen_targets maps word-slot position -> target lexeme id; slots not
    named keep their top choice.  No WSD involved.
    """
    direction = (Language(direction[0]).value, Language(direction[1]).value)
    if syntax_rules is None:
        syntax_rules = builtin_syntax_rules()
    if agreement_rules is None:
        agreement_rules = builtin_agreement_rules()
    tokens = tokenize(text, Language(direction[0]))
    slots = build_slots(tokens, lexicon, direction[0])
    vslots = []
    for slot in slots:
        choices = slot_choices(slot, lexicon, direction)
        if not choices:
            continue
        wanted = chosen_targets.get(slot.token.position)
        picked = choices[0]
        if wanted is not None:
            for c in choices:
                if c.kind == "translated" and c.target.id == wanted:
                    picked = c
                    break
        vslots.append(VariantSlot(choice=picked))
    prios = tuple(vs.choice.priority for vs in vslots
                  if vs.choice.kind == "translated")
    variant = TranslationVariant(slots=tuple(vslots), sense_priorities=prios)
    kept = apply_syntax_rules(variant, syntax_rules)
    if kept is None:
        raise NoSuchForm("chosen combination eliminated by syntax rules")
    return tune_endings(kept, direction, agreement_rules, lexicon)
