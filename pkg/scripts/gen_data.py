"""Regenerate the shipped rule packs, starter lexicon, fixtures and the
golden paradigm tables under tests/golden/.

The golden surfaces below are transcribed by hand from the reference
declension/conjugation tables; the rule-pack endings are written
independently of the engine so the two can cross-check each other.
"""

import json
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
DATA = ROOT / "src" / "lexitransfer" / "data"
GOLDEN = ROOT / "tests" / "golden"

CASES = ["nominative", "genitive", "dative", "accusative",
         "instrumental", "locative", "vocative"]
PERSONS = ["1", "2", "3"]
TENSES = ["present", "past", "future"]


def noun_bundle(case, number):
    return f"case={case}|number={number}"


def verb_bundle(tense, person, number):
    return f"number={number}|person={person}|tense={tense}"


# -- Lithuanian noun paradigms (7 cases x 2 numbers) -------------------------

LT_NOUN_ENDINGS = {
    # stalas-type: masculine, -as
    "lt-noun-as-m": ("as", {
        ("sg",): ["as", "o", "ui", "ą", "u", "e", "e"],
        ("pl",): ["ai", "ų", "ams", "us", "ais", "uose", "ai"],
    }),
    # brolis-type: masculine, -is
    "lt-noun-is-m": ("is", {
        ("sg",): ["is", "io", "iui", "į", "iu", "yje", "i"],
        ("pl",): ["iai", "ių", "iams", "ius", "iais", "iuose", "iai"],
    }),
    # lentelė-type: feminine, -ė
    "lt-noun-e-f": ("ė", {
        ("sg",): ["ė", "ės", "ei", "ę", "e", "ėje", "e"],
        ("pl",): ["ės", "ių", "ėms", "es", "ėmis", "ėse", "ės"],
    }),
}


def lt_noun_rule(paradigm_id):
    suffix, table = LT_NOUN_ENDINGS[paradigm_id]
    forms = {}
    for (number,), endings in table.items():
        for case, ending in zip(CASES, endings):
            forms[noun_bundle(case, number)] = ending
    return {"paradigm_id": paradigm_id, "language": "LT", "pos": "noun",
            "stem_suffix": suffix, "forms": forms, "exceptions": {}}


def lt_verb_buti_rule():
    # Suppletive present/past and the contracted future 3rd person are
    # exceptions; infinitive and the remaining future cells compose from
    # the bū- stem.
    forms = {"mood=infinitive": "ti"}
    for person, ending in zip(PERSONS, ["siu", "si", None]):
        if ending:
            forms[verb_bundle("future", person, "sg")] = ending
    forms[verb_bundle("future", "1", "pl")] = "sime"
    forms[verb_bundle("future", "2", "pl")] = "site"
    exceptions = {}
    present = {"1": ("esu", "esame"), "2": ("esi", "esate"), "3": ("yra", "yra")}
    past = {"1": ("buvau", "buvome"), "2": ("buvai", "buvote"),
            "3": ("buvo", "buvo")}
    for person in PERSONS:
        exceptions[verb_bundle("present", person, "sg")] = present[person][0]
        exceptions[verb_bundle("present", person, "pl")] = present[person][1]
        exceptions[verb_bundle("past", person, "sg")] = past[person][0]
        exceptions[verb_bundle("past", person, "pl")] = past[person][1]
    exceptions[verb_bundle("future", "3", "sg")] = "bus"
    exceptions[verb_bundle("future", "3", "pl")] = "bus"
    return {"paradigm_id": "lt-verb-buti", "language": "LT", "pos": "verb",
            "stem_suffix": "ti", "forms": forms, "exceptions": exceptions}


def invariable_rule(paradigm_id, language, pos):
    return {"paradigm_id": paradigm_id, "language": language, "pos": pos,
            "stem_suffix": "", "forms": {"": ""}, "exceptions": {}}


def en_noun_regular_rule():
    return {"paradigm_id": "en-noun-regular", "language": "EN", "pos": "noun",
            "stem_suffix": "",
            "forms": {"number=sg": "", "number=pl": "s"}, "exceptions": {}}


def en_verb_be_rule():
    forms = {"mood=infinitive": ""}
    exceptions = {}
    present = {"1": ("am", "are"), "2": ("are", "are"), "3": ("is", "are")}
    past = {"1": ("was", "were"), "2": ("were", "were"), "3": ("was", "were")}
    for person in PERSONS:
        exceptions[verb_bundle("present", person, "sg")] = present[person][0]
        exceptions[verb_bundle("present", person, "pl")] = present[person][1]
        exceptions[verb_bundle("past", person, "sg")] = past[person][0]
        exceptions[verb_bundle("past", person, "pl")] = past[person][1]
        for number in ("sg", "pl"):
            exceptions[verb_bundle("future", person, number)] = "will be"
    return {"paradigm_id": "en-verb-be", "language": "EN", "pos": "verb",
            "stem_suffix": "", "forms": forms, "exceptions": exceptions}


LT_RULES = [
    lt_noun_rule("lt-noun-as-m"),
    lt_noun_rule("lt-noun-is-m"),
    lt_noun_rule("lt-noun-e-f"),
    lt_verb_buti_rule(),
    invariable_rule("lt-prep", "LT", "preposition"),
]

EN_RULES = [
    en_noun_regular_rule(),
    en_verb_be_rule(),
    invariable_rule("en-prep", "EN", "preposition"),
    invariable_rule("en-det", "EN", "determiner"),
]


# -- golden paradigm tables (hand-transcribed full surfaces) ------------------

def noun_table(sg, pl):
    table = {}
    for case, surface in zip(CASES, sg):
        table[noun_bundle(case, "sg")] = surface
    for case, surface in zip(CASES, pl):
        table[noun_bundle(case, "pl")] = surface
    return table


def verb_table(infinitive, present, past, future):
    table = {"mood=infinitive": infinitive}
    for conj, tense in ((present, "present"), (past, "past"), (future, "future")):
        for person, (sg, pl) in zip(PERSONS, conj):
            table[verb_bundle(tense, person, "sg")] = sg
            table[verb_bundle(tense, person, "pl")] = pl
    return table


GOLDEN_TABLES = {
    "stalas": noun_table(
        ["stalas", "stalo", "stalui", "stalą", "stalu", "stale", "stale"],
        ["stalai", "stalų", "stalams", "stalus", "stalais", "staluose", "stalai"]),
    "rašiklis": noun_table(
        ["rašiklis", "rašiklio", "rašikliui", "rašiklį", "rašikliu",
         "rašiklyje", "rašikli"],
        ["rašikliai", "rašiklių", "rašikliams", "rašiklius", "rašikliais",
         "rašikliuose", "rašikliai"]),
    "plokščiakalnis": noun_table(
        ["plokščiakalnis", "plokščiakalnio", "plokščiakalniui", "plokščiakalnį",
         "plokščiakalniu", "plokščiakalnyje", "plokščiakalni"],
        ["plokščiakalniai", "plokščiakalnių", "plokščiakalniams",
         "plokščiakalnius", "plokščiakalniais", "plokščiakalniuose",
         "plokščiakalniai"]),
    "lentelė": noun_table(
        ["lentelė", "lentelės", "lentelei", "lentelę", "lentele",
         "lentelėje", "lentele"],
        ["lentelės", "lentelių", "lentelėms", "lenteles", "lentelėmis",
         "lentelėse", "lentelės"]),
    "gulbė": noun_table(
        ["gulbė", "gulbės", "gulbei", "gulbę", "gulbe", "gulbėje", "gulbe"],
        ["gulbės", "gulbių", "gulbėms", "gulbes", "gulbėmis", "gulbėse",
         "gulbės"]),
    "areštinė": noun_table(
        ["areštinė", "areštinės", "areštinei", "areštinę", "areštine",
         "areštinėje", "areštine"],
        ["areštinės", "areštinių", "areštinėms", "areštines", "areštinėmis",
         "areštinėse", "areštinės"]),
    "būti": verb_table(
        "būti",
        [("esu", "esame"), ("esi", "esate"), ("yra", "yra")],
        [("buvau", "buvome"), ("buvai", "buvote"), ("buvo", "buvo")],
        [("būsiu", "būsime"), ("būsi", "būsite"), ("bus", "bus")]),
    "pen": {"number=sg": "pen", "number=pl": "pens"},
    "table": {"number=sg": "table", "number=pl": "tables"},
    "swan": {"number=sg": "swan", "number=pl": "swans"},
    "plateau": {"number=sg": "plateau", "number=pl": "plateaus"},
    "be": verb_table(
        "be",
        [("am", "are"), ("are", "are"), ("is", "are")],
        [("was", "were"), ("were", "were"), ("was", "were")],
        [("will be", "will be")] * 3),
    "on": {"": "on"},
    "ant": {"": "ant"},
    "the": {"": "the"},
    "a": {"": "a"},
}


# -- starter lexicon (exchange format) ----------------------------------------

LEXEMES = [
    # (id, language, lemma, pos, paradigm, attributes, domains)
    ("en:pen", "EN", "pen", "noun", "en-noun-regular", {}, []),
    ("en:table", "EN", "table", "noun", "en-noun-regular", {}, []),
    ("en:swan", "EN", "swan", "noun", "en-noun-regular", {}, ["fauna"]),
    ("en:plateau", "EN", "plateau", "noun", "en-noun-regular", {}, ["geography"]),
    ("en:be", "EN", "be", "verb", "en-verb-be", {}, []),
    ("en:on", "EN", "on", "preposition", "en-prep", {}, []),
    ("en:the", "EN", "the", "determiner", "en-det", {}, []),
    ("en:a", "EN", "a", "determiner", "en-det", {}, []),
    ("lt:rasiklis", "LT", "rašiklis", "noun", "lt-noun-is-m",
     {"gender": "masc"}, []),
    ("lt:gulbe", "LT", "gulbė", "noun", "lt-noun-e-f",
     {"gender": "fem"}, ["fauna"]),
    ("lt:arestine", "LT", "areštinė", "noun", "lt-noun-e-f",
     {"gender": "fem"}, []),
    ("lt:stalas", "LT", "stalas", "noun", "lt-noun-as-m",
     {"gender": "masc"}, []),
    ("lt:lentele", "LT", "lentelė", "noun", "lt-noun-e-f",
     {"gender": "fem"}, []),
    ("lt:ploksciakalnis", "LT", "plokščiakalnis", "noun", "lt-noun-is-m",
     {"gender": "masc"}, ["geography"]),
    ("lt:buti", "LT", "būti", "verb", "lt-verb-buti", {}, []),
    ("lt:ant", "LT", "ant", "preposition", "lt-prep", {}, []),
]

LINKS = [
    # (source, target, priority, domain)
    ("en:pen", "lt:rasiklis", 1, None),
    ("en:pen", "lt:gulbe", 2, "fauna"),
    ("en:pen", "lt:arestine", 3, None),
    ("en:table", "lt:stalas", 1, None),
    ("en:table", "lt:lentele", 2, None),
    ("en:table", "lt:ploksciakalnis", 3, "geography"),
    ("en:be", "lt:buti", 1, None),
    ("en:on", "lt:ant", 1, None),
    ("lt:rasiklis", "en:pen", 1, None),
    ("lt:gulbe", "en:swan", 1, None),
    ("lt:gulbe", "en:pen", 2, None),
    ("lt:arestine", "en:pen", 1, None),
    ("lt:stalas", "en:table", 1, None),
    ("lt:lentele", "en:table", 1, None),
    ("lt:ploksciakalnis", "en:plateau", 1, None),
    ("lt:ploksciakalnis", "en:table", 2, None),
    ("lt:buti", "en:be", 1, None),
    ("lt:ant", "en:on", 1, None),
]

SAMPLE_COUNTS = [
    ("Gulbė yra ant lentelės", 13),
    ("Rašiklis yra ant lentelės", 16),
    ("Areštinė yra ant lentelės", 5),
    ("Gulbė yra ant stalo", 219),
    ("Rašiklis yra ant stalo", 301),
    ("Areštinė yra ant stalo", 18),
    ("Gulbė yra ant plokščiakalnio", 0),
    ("Rašiklis yra ant plokščiakalnio", 0),
    ("Areštinė yra ant plokščiakalnio", 0),
]

AGREEMENT_RULES = [
    {"id": "en-lt-ant-object-genitive", "direction": "EN->LT",
     "pattern": [{"lemma": "ant"}, {"pos": "noun"}],
     "assign": [{"slot": 1, "set": {"case": "genitive"}, "copy": ["number"]}]},
    {"id": "en-lt-subject-nominative", "direction": "EN->LT",
     "pattern": [{"pos": "noun"}, {"pos": "verb"}],
     "assign": [{"slot": 0, "set": {"case": "nominative"}, "copy": ["number"]},
                {"slot": 1, "set": {"person": "3"}, "copy_from": 0,
                 "copy": ["number"]}]},
    {"id": "lt-en-subject-verb-agreement", "direction": "LT->EN",
     "pattern": [{"pos": "noun"}, {"pos": "verb"}],
     "assign": [{"slot": 1, "set": {"person": "3"}, "copy_from": 0,
                 "copy": ["number"]}]},
]


def write_jsonl(path, records):
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec, ensure_ascii=False, sort_keys=True) + "\n")


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    GOLDEN.mkdir(parents=True, exist_ok=True)

    write_jsonl(DATA / "lt_rules.jsonl", LT_RULES)
    write_jsonl(DATA / "en_rules.jsonl", EN_RULES)
    write_jsonl(DATA / "agreement_rules.jsonl", AGREEMENT_RULES)
    (DATA / "syntax_rules.jsonl").write_text(
        "# Starter syntax rule pack: intentionally empty.\n"
        "# Records: {\"id\", \"kind\": \"forbid\"|\"reorder\", \"pattern\": "
        "[{\"pos\"|\"lemma\"|\"any\"}...], \"order\": [permutation]}\n",
        "utf-8")
    with open(DATA / "sample_counts.tsv", "w", encoding="utf-8") as fh:
        for phrase, count in SAMPLE_COUNTS:
            fh.write(f"{phrase}\t{count}\n")

    records = []
    for lid, lang, lemma, pos, paradigm, attrs, domains in LEXEMES:
        records.append({"kind": "lexeme", "id": lid, "language": lang,
                        "lemma": lemma, "pos": pos, "paradigm_id": paradigm,
                        "attributes": attrs, "domains": domains})
    for src, dst, prio, domain in LINKS:
        records.append({"kind": "link", "source_id": src, "target_id": dst,
                        "priority": prio, "domain": domain})
    write_jsonl(DATA / "starter_lexicon.jsonl", records)

    for lemma, table in GOLDEN_TABLES.items():
        safe = (lemma.replace("š", "s").replace("ū", "u").replace("ė", "e")
                .replace("č", "c").replace("į", "i").replace("ą", "a"))
        with open(GOLDEN / f"{safe}.tsv", "w", encoding="utf-8") as fh:
            for bundle in sorted(table):
                fh.write(f"{bundle}\t{table[bundle]}\n")
    print("wrote data + golden files")


if __name__ == "__main__":
    main()
