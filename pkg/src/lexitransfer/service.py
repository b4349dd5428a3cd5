"""HTTP service binding the lexicon, morphology, transfer, wsd and corpus
modules.

Every endpoint delegates to a module operation; module errors map to a
stable machine-readable code in the JSON error body.  Mutating endpoints
require an X-Actor header, which lands in the audit log.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from fastapi import FastAPI, Header, Query, Request
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel

from . import corpus as corpus_mod
from . import errors, morphology, transfer, wsd
from .cache import ReadThroughCache
from .features import FeatureBundle
from .lexicon import POS_NAMES, Language, Lexicon

STATUS_BY_CODE = {
    "duplicate_lexeme": 409,
    "priority_collision": 409,
    "not_found": 404,
    "unknown_paradigm": 400,
    "pos_language_mismatch": 400,
    "same_language": 400,
    "no_such_form": 400,
    "stem_mismatch": 400,
    "empty_input": 400,
    "empty_variant_list": 400,
    "zero_total": 400,
    "phrase_too_long": 400,
    "budget_exhausted": 429,
    "backend_unavailable": 502,
    "file_unreadable": 400,
    "encoding_error": 400,
    "missing_actor": 400,
    "bad_request": 400,
}


@dataclass
class QueueItem:
    id: int
    surface: str
    language: str
    frequency: int
    suggested_pos: str | None = None
    status: str = "pending"   # pending -> entered | rejected
    sample_contexts: tuple = ()


@dataclass
class AppState:
    lexicon: Lexicon
    oracle: wsd.CountOracleHandle
    corpus_indexes: dict = field(default_factory=dict)   # lang tag -> CorpusIndex
    queue: list = field(default_factory=list)
    syntax_rules: list | None = None
    agreement_rules: list | None = None
    _queue_seq: int = 0
    _lock: threading.Lock = field(default_factory=threading.Lock)

    def enqueue(self, entry, language):
        with self._lock:
            self._queue_seq += 1
            item = QueueItem(
                id=self._queue_seq, surface=entry.surface,
                language=language, frequency=entry.frequency,
                suggested_pos="noun",
                sample_contexts=entry.sample_contexts)
            self.queue.append(item)
            return item


class LexemeIn(BaseModel):
    lemma: str
    language: str
    pos: str
    paradigm_id: str
    attributes: dict = {}
    domains: list = []


class LinkIn(BaseModel):
    source_id: str
    target_id: str
    priority: int
    domain: str | None = None


class PreviewIn(BaseModel):
    lemma: str
    language: str
    paradigm_id: str


class TranslateIn(BaseModel):
    text: str
    source: str
    target: str
    use_wsd: bool = False
    max_variants: int = 64
    active_domain: str | None = None


class RetuneIn(BaseModel):
    text: str
    source: str
    target: str
    chosen_targets: dict = {}   # token position (stringly keyed) -> lexeme id


class IngestIn(BaseModel):
    language: str
    paths: list


class OovScanIn(BaseModel):
    language: str
    paths: list


class QueueStatusIn(BaseModel):
    status: str


def _lexeme_json(lexeme):
    return {
        "id": lexeme.id,
        "language": lexeme.language.value,
        "lemma": lexeme.lemma,
        "pos": lexeme.pos.name,
        "paradigm_id": lexeme.paradigm_id,
        "attributes": dict(lexeme.attributes),
        "domains": sorted(lexeme.domains),
    }


def _paradigm_json(table):
    return [{"features": bundle.serialize(), "surface": surface}
            for bundle, surface in sorted(
                table.items(), key=lambda kv: kv[0].serialize())]


def _variant_json(variant):
    return {
        "rendered": variant.rendered,
        "score": variant.score,
        "sense_priorities": list(variant.sense_priorities),
        "slots": [
            {
                "kind": vs.choice.kind,
                "source_surface": vs.choice.source_token.surface,
                "source_position": vs.choice.source_token.position,
                "target_id": vs.choice.target.id if vs.choice.target else None,
                "target_lemma": vs.choice.target.lemma if vs.choice.target else None,
                "features": vs.target_bundle.serialize() if vs.target_bundle else None,
                "surface": vs.surface,
                "priority": vs.choice.priority,
            }
            for vs in variant.slots
        ],
    }


def create_app(state: AppState) -> FastAPI:
    app = FastAPI(title="lexitransfer", version="0.1.0")

    @app.exception_handler(errors.LexitransferError)
    async def _domain_error(_req: Request, err: errors.LexitransferError):
        return JSONResponse(
            status_code=STATUS_BY_CODE.get(err.code, 500),
            content={"code": err.code, "message": err.message,
                     "details": err.details})

    @app.exception_handler(ValueError)
    async def _value_error(_req: Request, err: ValueError):
        return JSONResponse(status_code=400,
                            content={"code": "bad_request",
                                     "message": str(err), "details": None})

    class MissingActor(errors.LexitransferError):
        code = "missing_actor"

    def _actor(actor):
        if not actor:
            raise MissingActor("X-Actor header required")
        return actor

    # -- metadata ------------------------------------------------------------

    @app.get("/pos-panels")
    def pos_panels():
        """Per-language POS panel descriptors driving the workbench UI."""
        panels = []
        for lang, names in POS_NAMES.items():
            for name in names:
                paradigms = [r.paradigm_id
                             for r in state.lexicon.rule_packs[lang]
                             if r.pos == name]
                fields = ["lemma"]
                if name == "noun":
                    fields.append("gender")
                if name == "noun" and lang == "LT":
                    fields.append("domains")
                panels.append({"language": lang, "pos": name,
                               "paradigms": paradigms, "fields": fields})
        return {"panels": panels}

    # -- lexemes ---------------------------------------------------------------

    @app.post("/lexemes", status_code=201)
    def add_lexeme(body: LexemeIn, x_actor: str | None = Header(default=None)):
        lexeme_id = state.lexicon.add_lexeme(
            body.lemma, body.language, body.pos, body.paradigm_id,
            body.attributes, body.domains, actor=_actor(x_actor))
        return _lexeme_json(state.lexicon.get_lexeme(lexeme_id))

    @app.get("/lexemes")
    def list_lexemes(lang: str | None = None, pos: str | None = None,
                     q: str | None = None):
        return {"lexemes": [_lexeme_json(l) for l in
                            state.lexicon.list_lexemes(lang, pos, q)]}

    @app.get("/lexemes/{lexeme_id}")
    def get_lexeme(lexeme_id: str):
        return _lexeme_json(state.lexicon.get_lexeme(lexeme_id))

    @app.delete("/lexemes/{lexeme_id}")
    def delete_lexeme(lexeme_id: str,
                      x_actor: str | None = Header(default=None)):
        state.lexicon.delete_lexeme(lexeme_id, actor=_actor(x_actor))
        return {"deleted": lexeme_id}

    @app.get("/lexemes/{lexeme_id}/paradigm")
    def lexeme_paradigm(lexeme_id: str):
        return {"forms": _paradigm_json(state.lexicon.paradigm_of(lexeme_id))}

    @app.post("/paradigm/preview")
    def paradigm_preview(body: PreviewIn):
        rule = state.lexicon.rule_packs[Language(body.language).value].get(
            body.paradigm_id)
        table = morphology.generate_paradigm(body.lemma, rule)
        return {"forms": _paradigm_json(table)}

    # -- sense links -----------------------------------------------------------

    @app.post("/links", status_code=201)
    def add_link(body: LinkIn, x_actor: str | None = Header(default=None)):
        link = state.lexicon.link_senses(
            body.source_id, body.target_id, body.priority, body.domain,
            actor=_actor(x_actor))
        return {"source_id": link.source_id, "target_id": link.target_id,
                "priority": link.priority, "domain": link.domain}

    @app.get("/lexemes/{lexeme_id}/senses")
    def senses(lexeme_id: str, domain: str | None = None):
        resolved = state.lexicon.resolve_senses(lexeme_id, domain)
        return {"senses": [
            {"target": _lexeme_json(target), "priority": priority}
            for target, priority in resolved]}

    # -- translation -----------------------------------------------------------

    @app.post("/translate")
    def do_translate(body: TranslateIn):
        result = transfer.translate(
            body.text, state.lexicon, (body.source, body.target),
            active_domain=body.active_domain,
            max_variants=body.max_variants,
            use_wsd=body.use_wsd,
            oracle=state.oracle if body.use_wsd else None,
            syntax_rules=state.syntax_rules,
            agreement_rules=state.agreement_rules)
        return {
            "variants": [_variant_json(v) for v in result.variants],
            "alternatives": [
                [{"target": _lexeme_json(t), "priority": p}
                 for t, p in options]
                for options in result.alternatives],
            "used_wsd": result.used_wsd,
            "used_fallback": result.used_fallback,
            "diagnostics": result.diagnostics,
        }

    @app.post("/translate/retune")
    def do_retune(body: RetuneIn):
        chosen = {int(k): v for k, v in body.chosen_targets.items()}
        variant = transfer.retune(
            body.text, state.lexicon, (body.source, body.target), chosen,
            syntax_rules=state.syntax_rules,
            agreement_rules=state.agreement_rules)
        return _variant_json(variant)

    # -- corpus / OOV ------------------------------------------------------------

    @app.post("/corpus/ingest")
    def corpus_ingest(body: IngestIn,
                      x_actor: str | None = Header(default=None)):
        _actor(x_actor)
        tag = Language(body.language).value
        index = state.corpus_indexes.get(tag)
        index = corpus_mod.ingest(body.paths, tag, index)
        state.corpus_indexes[tag] = index
        return {"language": tag, "token_count": index.token_count,
                "distinct_ngrams": len(index.ngram_counts)}

    @app.get("/corpus/count")
    def corpus_count(q: str = Query(...), lang: str = Query(...)):
        tag = Language(lang).value
        index = state.corpus_indexes.get(tag)
        if index is None:
            raise errors.NotFound(f"no corpus ingested for {tag}")
        result = index.count_phrase(q)
        return {"phrase": q, "count": result.count,
                "degraded": result.degraded}

    @app.post("/oov/scan")
    def oov_scan(body: OovScanIn, x_actor: str | None = Header(default=None)):
        _actor(x_actor)
        tag = Language(body.language).value
        report = corpus_mod.extract_oov(body.paths, tag, state.lexicon)
        items = [state.enqueue(entry, tag) for entry in report.entries]
        return {"queued": [item.__dict__ for item in items]}

    @app.get("/oov/queue")
    def oov_queue(status: str = "pending"):
        return {"items": [item.__dict__ for item in state.queue
                          if status in ("all", item.status)]}

    @app.post("/oov/queue/{item_id}/status")
    def oov_status(item_id: int, body: QueueStatusIn,
                   x_actor: str | None = Header(default=None)):
        _actor(x_actor)
        if body.status not in ("entered", "rejected"):
            raise ValueError("status must be 'entered' or 'rejected'")
        for item in state.queue:
            if item.id == item_id:
                if item.status != "pending":
                    raise ValueError(f"item already {item.status}")
                item.status = body.status
                return item.__dict__
        raise errors.NotFound(f"no queue item {item_id}")

    # -- audit / metrics -----------------------------------------------------------

    @app.get("/audit")
    def audit(since: int = 0):
        return {"records": [r.__dict__ for r in
                            state.lexicon.audit_log(since)]}

    @app.get("/metrics", response_class=PlainTextResponse)
    def metrics():
        cache = state.oracle.cache.stats
        lines = [
            f"cache.hits {cache.hits}",
            f"cache.misses {cache.misses}",
            f"cache.evictions {cache.evictions}",
            f"cache.resident_bytes {cache.resident_bytes}",
            f"budget.daily_limit {state.oracle.budget.daily_limit}",
            f"budget.used_today {state.oracle.budget.used_today}",
            f"audit.records {len(state.lexicon.audit_log(0))}",
        ]
        return "\n".join(lines) + "\n"

    app.state.domain = state
    return app


def default_app() -> FastAPI:
    """App over the starter lexicon and the shipped fixture oracle."""
    import lexitransfer as pkg

    lexicon = pkg.load_starter_lexicon(lookup_cache=ReadThroughCache())
    return create_app(AppState(lexicon=lexicon, oracle=pkg.sample_counts_oracle()))
