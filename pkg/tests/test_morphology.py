import pytest

from lexitransfer import morphology
from lexitransfer.errors import StemMismatch
from lexitransfer.features import EMPTY_BUNDLE, FeatureBundle
from lexitransfer.lexicon import Language
from lexitransfer.morphology import (ParadigmRule, builtin_rule_pack,
                                     generate_paradigm, validate_rule_pack)

LT = builtin_rule_pack("LT")
EN = builtin_rule_pack("EN")


def test_stalas_paradigm_has_14_forms():
    table = generate_paradigm("stalas", LT.get("lt-noun-as-m"))
    assert len(table) == 14
    assert table[FeatureBundle.of(case="genitive", number="sg")] == "stalo"
    assert table[FeatureBundle.of(case="locative", number="sg")] == "stale"


def test_lentele_genitive():
    table = generate_paradigm("lentelė", LT.get("lt-noun-e-f"))
    assert table[FeatureBundle.of(case="genitive", number="sg")] == "lentelės"


def test_en_regular_noun_plural():
    table = generate_paradigm("run", EN.get("en-noun-regular"))
    assert table == {
        FeatureBundle.of(number="sg"): "run",
        FeatureBundle.of(number="pl"): "runs",
    }


def test_stem_mismatch_raises():
    with pytest.raises(StemMismatch):
        generate_paradigm("lentelė", LT.get("lt-noun-as-m"))


def test_exceptions_win_over_composition():
    rule = LT.get("lt-verb-buti")
    table = generate_paradigm("būti", rule)
    # future 3rd person contracts to "bus", not stem + "s"
    assert table[FeatureBundle.of(number="sg", person="3", tense="future")] == "bus"
    assert table[FeatureBundle.of(number="sg", person="1", tense="future")] == "būsiu"
    assert table[FeatureBundle.of(mood="infinitive")] == "būti"
    assert len(table) == 19


def test_generation_is_pure():
    rule = LT.get("lt-noun-as-m")
    assert generate_paradigm("stalas", rule) == generate_paradigm("stalas", rule)


def test_shipped_packs_validate_clean():
    assert validate_rule_pack(LT) == []
    assert validate_rule_pack(EN) == []


def test_missing_form_diagnostic():
    rule = LT.get("lt-noun-as-m")
    forms = dict(rule.forms)
    forms.pop(FeatureBundle.of(case="vocative", number="pl"))
    broken = ParadigmRule(paradigm_id="broken", language="LT", pos="noun",
                          stem_suffix="as", forms=forms)
    diags = validate_rule_pack([broken])
    assert len(diags) == 1
    assert "missing form" in diags[0]


def test_duplicate_paradigm_id_diagnostic():
    rule = LT.get("lt-noun-as-m")
    diags = validate_rule_pack([rule, rule])
    assert any("duplicate" in d for d in diags)


def test_unlicensed_bundle_diagnostic():
    rule = ParadigmRule(paradigm_id="odd", language="EN", pos="noun",
                        stem_suffix="",
                        forms={FeatureBundle.of(number="sg"): "",
                               FeatureBundle.of(number="pl"): "s",
                               FeatureBundle.of(tense="present",
                                                person="3", number="sg"): "s"})
    diags = validate_rule_pack([rule])
    assert any("not licensed" in d for d in diags)


def test_analyze_stalai_is_ambiguous(lexicon):
    hits = morphology.analyze("stalai", Language.LT, lexicon)
    bundles = {b.serialize() for _, b in hits}
    assert bundles == {"case=nominative|number=pl", "case=vocative|number=pl"}
    assert all(lex.lemma == "stalas" for lex, _ in hits)


def test_analyze_pens(lexicon):
    hits = morphology.analyze("pens", Language.EN, lexicon)
    assert [(l.lemma, b) for l, b in hits] == [("pen", FeatureBundle.of(number="pl"))]


def test_analyze_unknown_is_empty(lexicon):
    assert morphology.analyze("xyzzy", Language.LT, lexicon) == []


def test_roundtrip_generate_then_analyze(lexicon):
    for lexeme in lexicon.list_lexemes():
        for bundle, surface in lexicon.paradigm_of(lexeme.id).items():
            hits = morphology.analyze(surface, lexeme.language, lexicon)
            assert (lexeme, bundle) in hits, (lexeme.lemma, bundle.serialize())
