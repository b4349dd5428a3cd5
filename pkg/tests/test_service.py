import pytest
from fastapi.testclient import TestClient

import lexitransfer as pkg
from lexitransfer.cache import ReadThroughCache
from lexitransfer.service import AppState, create_app

ACTOR = {"X-Actor": "lex1"}


@pytest.fixture
def state():
    lexicon = pkg.load_starter_lexicon(lookup_cache=ReadThroughCache())
    return AppState(lexicon=lexicon, oracle=pkg.sample_counts_oracle())


@pytest.fixture
def client(state):
    return TestClient(create_app(state))


def test_paradigm_preview_matches_generation(client, state):
    resp = client.post("/paradigm/preview",
                       json={"lemma": "stalas", "language": "LT",
                             "paradigm_id": "lt-noun-as-m"})
    assert resp.status_code == 200
    rows = resp.json()["forms"]
    assert len(rows) == 14
    by_features = {r["features"]: r["surface"] for r in rows}
    assert by_features["case=genitive|number=sg"] == "stalo"
    # byte-identical to the direct module call
    rule = state.lexicon.rule_packs["LT"].get("lt-noun-as-m")
    from lexitransfer.morphology import generate_paradigm
    expected = {b.serialize(): s
                for b, s in generate_paradigm("stalas", rule).items()}
    assert by_features == expected


def test_lexeme_crud_and_audit(client):
    resp = client.post("/lexemes", headers=ACTOR, json={
        "lemma": "namas", "language": "LT", "pos": "noun",
        "paradigm_id": "lt-noun-as-m", "attributes": {"gender": "masc"}})
    assert resp.status_code == 201
    lexeme_id = resp.json()["id"]

    resp = client.get(f"/lexemes/{lexeme_id}/paradigm")
    assert len(resp.json()["forms"]) == 14

    resp = client.get("/lexemes", params={"lang": "LT", "pos": "noun"})
    lemmas = [l["lemma"] for l in resp.json()["lexemes"]]
    assert "namas" in lemmas

    resp = client.delete(f"/lexemes/{lexeme_id}", headers=ACTOR)
    assert resp.status_code == 200

    records = client.get("/audit").json()["records"]
    mine = [r for r in records if r["entity_id"] == lexeme_id]
    assert [r["op"] for r in mine] == ["create", "delete"]
    assert all(r["actor"] == "lex1" for r in mine)


def test_missing_actor_rejected(client):
    resp = client.post("/lexemes", json={
        "lemma": "namas", "language": "LT", "pos": "noun",
        "paradigm_id": "lt-noun-as-m"})
    assert resp.status_code == 400
    assert resp.json()["code"] == "missing_actor"


def test_delete_unknown_maps_to_not_found(client):
    resp = client.delete("/lexemes/unknown", headers=ACTOR)
    assert resp.status_code == 404
    assert resp.json()["code"] == "not_found"


def test_duplicate_lexeme_conflict(client):
    body = {"lemma": "stalas", "language": "LT", "pos": "noun",
            "paradigm_id": "lt-noun-as-m"}
    resp = client.post("/lexemes", headers=ACTOR, json=body)
    assert resp.status_code == 409
    assert resp.json()["code"] == "duplicate_lexeme"


def test_links_and_senses(client):
    resp = client.get("/lexemes/en:pen/senses")
    lemmas = [s["target"]["lemma"] for s in resp.json()["senses"]]
    assert lemmas == ["rašiklis", "gulbė", "areštinė"]
    resp = client.get("/lexemes/en:pen/senses", params={"domain": "fauna"})
    lemmas = [s["target"]["lemma"] for s in resp.json()["senses"]]
    assert lemmas == ["gulbė", "rašiklis", "areštinė"]

    resp = client.post("/links", headers=ACTOR, json={
        "source_id": "en:pen", "target_id": "lt:stalas", "priority": 1})
    assert resp.status_code == 409
    assert resp.json()["code"] == "priority_collision"


def test_translate_endpoint_sample_counts(client):
    resp = client.post("/translate", json={
        "text": "pen is on the table", "source": "EN", "target": "LT",
        "use_wsd": True})
    body = resp.json()
    assert len(body["variants"]) == 9
    top = body["variants"][0]
    assert top["rendered"] == "Rašiklis yra ant stalo"
    assert top["score"] == 301
    assert not body["used_fallback"]
    pen_alts = [a["target"]["lemma"] for a in body["alternatives"][0]]
    assert pen_alts == ["rašiklis", "gulbė", "areštinė"]


def test_retune_endpoint(client):
    resp = client.post("/translate/retune", json={
        "text": "pen is on the table", "source": "EN", "target": "LT",
        "chosen_targets": {"0": "lt:gulbe"}})
    assert resp.json()["rendered"] == "Gulbė yra ant stalo"


def test_corpus_and_oov_queue_flow(client, tmp_path):
    corpus = tmp_path / "c.txt"
    corpus.write_text("stalas namas namas pilis", "utf-8")
    resp = client.post("/corpus/ingest", headers=ACTOR,
                       json={"language": "LT", "paths": [str(corpus)]})
    assert resp.json()["token_count"] == 4
    resp = client.get("/corpus/count", params={"q": "namas namas", "lang": "LT"})
    assert resp.json()["count"] == 1

    resp = client.post("/oov/scan", headers=ACTOR,
                       json={"language": "LT", "paths": [str(corpus)]})
    queued = resp.json()["queued"]
    assert [q["surface"] for q in queued] == ["namas", "pilis"]

    item_id = queued[0]["id"]
    resp = client.post(f"/oov/queue/{item_id}/status", headers=ACTOR,
                       json={"status": "entered"})
    assert resp.json()["status"] == "entered"
    pending = client.get("/oov/queue").json()["items"]
    assert [p["surface"] for p in pending] == ["pilis"]
    # pending -> entered is final
    resp = client.post(f"/oov/queue/{item_id}/status", headers=ACTOR,
                       json={"status": "rejected"})
    assert resp.status_code == 400


def test_metrics_plaintext(client):
    client.post("/translate", json={
        "text": "pen is on the table", "source": "EN", "target": "LT",
        "use_wsd": True})
    resp = client.get("/metrics")
    assert resp.headers["content-type"].startswith("text/plain")
    lines = dict(l.split(" ") for l in resp.text.strip().splitlines())
    assert lines["budget.daily_limit"] == "1000"
    assert int(lines["budget.used_today"]) == 9
    assert int(lines["cache.misses"]) == 9


def test_pos_panels(client):
    panels = client.get("/pos-panels").json()["panels"]
    lt = [p for p in panels if p["language"] == "LT"]
    en = [p for p in panels if p["language"] == "EN"]
    assert len(lt) == 11 and len(en) == 12
    noun = next(p for p in lt if p["pos"] == "noun")
    assert "lt-noun-as-m" in noun["paradigms"]
