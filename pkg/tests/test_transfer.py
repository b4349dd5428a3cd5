import pytest

from conftest import SAMPLE_COUNTS, make_oracle
from lexitransfer import transfer
from lexitransfer.errors import EmptyInput
from lexitransfer.transfer import (SyntaxRule, apply_syntax_rules,
                                   build_slots, expand_variants, retune,
                                   tokenize, translate, tune_endings)

EN_LT = ("EN", "LT")
LT_EN = ("LT", "EN")


def test_tokenize_pen_sentence():
    tokens = tokenize("pen is on the table", "EN")
    assert [t.surface for t in tokens] == ["pen", "is", "on", "the", "table"]
    assert all(t.kind == "word" for t in tokens)
    assert [t.position for t in tokens] == list(range(5))


def test_tokenize_empty():
    assert tokenize("", "EN") == []


def test_tokenize_capitalization_and_punct():
    tokens = tokenize("Stalas.", "LT")
    assert [(t.surface, t.kind, t.capitalization) for t in tokens] == [
        ("Stalas", "word", "initial"), (".", "punctuation", "lower")]


def test_build_slots(lexicon):
    slots = build_slots(tokenize("pen xyzzy stalo", "EN"), lexicon, "EN")
    assert not slots[0].oov and len(slots[0].analyses) == 1
    assert slots[1].oov
    lt_slots = build_slots(tokenize("stalo", "LT"), lexicon, "LT")
    lexeme, bundle = lt_slots[0].analyses[0]
    assert lexeme.lemma == "stalas"
    assert bundle.serialize() == "case=genitive|number=sg"


def test_expand_nine_variants(lexicon):
    slots = build_slots(tokenize("pen is on the table", "EN"), lexicon, "EN")
    variants = expand_variants(slots, lexicon, EN_LT, max_variants=64)
    assert len(variants) == 9
    # best-first: the all-priority-1 variant leads
    assert variants[0].sense_priorities == (1, 1, 1, 1)
    sums = [v.priority_sum() for v in variants]
    assert sums == sorted(sums)


def test_expand_single_sense_one_variant(lexicon):
    slots = build_slots(tokenize("on the table", "EN"), lexicon, "EN")
    # "table" alone is multi-sense; pin it by deleting extra links
    slots = build_slots(tokenize("on", "EN"), lexicon, "EN")
    variants = expand_variants(slots, lexicon, EN_LT)
    assert len(variants) == 1


def test_expand_max_variants_one(lexicon):
    slots = build_slots(tokenize("pen is on the table", "EN"), lexicon, "EN")
    variants = expand_variants(slots, lexicon, EN_LT, max_variants=1)
    assert len(variants) == 1
    assert variants[0].sense_priorities == (1, 1, 1, 1)


def test_articles_drop_en_to_lt(lexicon):
    slots = build_slots(tokenize("the table", "EN"), lexicon, "EN")
    variants = expand_variants(slots, lexicon, EN_LT)
    assert all(len(v.slots) == 1 for v in variants)


def test_oov_passthrough(lexicon):
    result = translate("xyzzy", lexicon, EN_LT)
    assert result.variants[0].rendered == "Xyzzy"
    assert result.slots[0].oov


def forbid(pos_pair):
    return SyntaxRule(id="no-" + "-".join(pos_pair), kind="forbid",
                      pattern=tuple({"pos": p} for p in pos_pair))


def test_forbid_rule_eliminates(lexicon):
    result = translate("on on the table", lexicon, EN_LT,
                       syntax_rules=[forbid(("preposition", "preposition"))])
    assert result.variants == []


def test_no_matching_rule_is_identity(lexicon):
    slots = build_slots(tokenize("pen", "EN"), lexicon, "EN")
    variant = expand_variants(slots, lexicon, EN_LT)[0]
    kept = apply_syntax_rules(variant, [forbid(("verb", "verb"))])
    assert kept == variant


def test_reorder_rule_swaps(lexicon):
    rule = SyntaxRule(id="noun-prep-swap", kind="reorder",
                      pattern=({"pos": "noun"}, {"pos": "preposition"}),
                      order=(1, 0))
    slots = build_slots(tokenize("table on", "EN"), lexicon, "EN")
    variant = expand_variants(slots, lexicon, EN_LT, max_variants=1)[0]
    swapped = apply_syntax_rules(variant, [rule])
    assert [vs.choice.target.lemma for vs in swapped.slots] == ["ant", "stalas"]


def test_reorder_requires_permutation():
    with pytest.raises(ValueError):
        SyntaxRule(id="bad", kind="reorder",
                   pattern=({"pos": "noun"}, {"pos": "verb"}), order=(0, 0))


def test_tune_on_the_table(lexicon):
    result = translate("on the table", lexicon, EN_LT, max_variants=1)
    assert result.variants[0].rendered == "Ant stalo"


def test_tune_full_sentence(lexicon):
    result = translate("pen is on the table", lexicon, EN_LT, max_variants=1)
    assert result.variants[0].rendered == "Rašiklis yra ant stalo"
    slot = result.variants[0].slots[0]
    assert slot.target_bundle.serialize() == "case=nominative|number=sg"


def test_tune_plural_subject(lexicon):
    result = translate("pens are on the table", lexicon, EN_LT, max_variants=1)
    assert result.variants[0].rendered == "Rašikliai yra ant stalo"


def test_translate_with_wsd_sample_counts(lexicon):
    result = translate("pen is on the table", lexicon, EN_LT,
                       use_wsd=True, oracle=make_oracle(SAMPLE_COUNTS))
    assert len(result.variants) == 9
    top = result.variants[0]
    assert top.rendered == "Rašiklis yra ant stalo"
    assert top.score == 301
    scores = [v.score for v in result.variants]
    assert scores == sorted(scores, reverse=True)


def test_translate_without_wsd_priority_order(lexicon):
    result = translate("pen is on the table", lexicon, EN_LT)
    assert result.variants[0].sense_priorities == (1, 1, 1, 1)
    keys = [v.rank_key() for v in result.variants]
    assert keys == sorted(keys)
    # consistency with resolve_senses: top choice everywhere is priority 1
    assert result.variants[0].rendered == "Rašiklis yra ant stalo"


def test_translate_empty_input(lexicon):
    with pytest.raises(EmptyInput):
        translate("   ", lexicon, EN_LT)


def test_translate_alternatives_follow_resolve_order(lexicon):
    result = translate("pen is on the table", lexicon, EN_LT)
    pen_alts = [t.lemma for t, _ in result.alternatives[0]]
    assert pen_alts == ["rašiklis", "gulbė", "areštinė"]
    table_alts = [t.lemma for t, _ in result.alternatives[4]]
    assert table_alts == ["stalas", "lentelė", "plokščiakalnis"]


def test_translate_active_domain_changes_ranking(lexicon):
    result = translate("pen is on the table", lexicon, EN_LT,
                       active_domain="fauna", max_variants=1)
    assert result.variants[0].rendered.startswith("Gulbė")


def test_sentence_initial_capitalization(lexicon):
    result = translate("Table is on the table.", lexicon, EN_LT, max_variants=1)
    assert result.variants[0].rendered == "Stalas yra ant stalo."


def test_lt_to_en(lexicon):
    result = translate("Stalas yra ant stalo", lexicon, LT_EN, max_variants=1)
    assert result.variants[0].rendered == "Table is on table"


def test_retune_overrides_slot(lexicon):
    variant = retune("pen is on the table", lexicon, EN_LT,
                     {0: "lt:gulbe", 4: "lt:ploksciakalnis"})
    assert variant.rendered == "Gulbė yra ant plokščiakalnio"


def test_eliminated_variants_absent(lexicon):
    # Forbid everything containing a verb: only variants without verbs remain.
    result = translate("pen is on the table", lexicon, EN_LT,
                       syntax_rules=[forbid(("verb",))])
    assert result.variants == []
