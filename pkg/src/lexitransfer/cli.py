"""Command line interface.

Runs against an embedded store: a data directory holding the lexicon
exchange file, the audit log and the query-budget state.  `lexitransfer
serve` exposes the same state over HTTP.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import corpus as corpus_mod
from . import load_starter_lexicon, sample_counts_path, transfer, wsd
from .cache import CacheConfig, ReadThroughCache
from .errors import LexitransferError
from .lexicon import Lexicon


class Workspace:
    """Lazy handle on the data directory backing the CLI."""

    def __init__(self, data_dir):
        self.dir = Path(data_dir)
        self._lexicon = None

    @property
    def lexicon_path(self):
        return self.dir / "lexicon.jsonl"

    @property
    def lexicon(self) -> Lexicon:
        if self._lexicon is None:
            self.dir.mkdir(parents=True, exist_ok=True)
            audit_path = self.dir / "audit.jsonl"
            lex = Lexicon(lookup_cache=ReadThroughCache())
            if self.lexicon_path.exists():
                lex.import_lines(
                    self.lexicon_path.read_text("utf-8").splitlines(),
                    actor="load")
                lex._audit.clear()  # loading is not an edit session
            # resume the persisted sequence, then start journaling
            if audit_path.exists():
                lines = audit_path.read_text("utf-8").splitlines()
                lex._seq = max(lex._seq, len(lines))
            lex.audit_path = str(audit_path)
            self._lexicon = lex
        return self._lexicon

    def save(self):
        self.dir.mkdir(parents=True, exist_ok=True)
        with open(self.lexicon_path, "w", encoding="utf-8") as fh:
            for line in self.lexicon.export_lines():
                fh.write(line + "\n")

    def oracle(self, fixture=None, daily_limit=1000):
        backend = wsd.FixtureOracle(fixture or str(sample_counts_path()))
        budget = wsd.QuotaBudget(daily_limit,
                                 state_path=self.dir / "budget.tsv")
        return wsd.CountOracleHandle(backend=backend, budget=budget,
                                     cache=ReadThroughCache())

    def index_path(self, lang):
        return self.dir / f"corpus_{lang.lower()}.ngx"


pass_ws = click.make_pass_decorator(Workspace)


@click.group()
@click.option("--data-dir", default=".lexitransfer",
              show_default=True, help="Embedded store directory.")
@click.pass_context
def main(ctx, data_dir):
    ctx.obj = Workspace(data_dir)


@main.command()
@pass_ws
def init(ws):
    """Seed the data directory with the starter lexicon."""
    ws._lexicon = load_starter_lexicon(lookup_cache=ReadThroughCache())
    ws.save()
    click.echo(f"initialized {ws.lexicon_path}")


@main.group()
def lexeme():
    """Lexeme management."""


@lexeme.command("add")
@click.option("--lang", required=True)
@click.option("--pos", required=True)
@click.option("--paradigm", required=True)
@click.option("--attr", multiple=True, help="key=value, repeatable")
@click.option("--domain", multiple=True)
@click.option("--actor", default="cli")
@click.argument("lemma")
@pass_ws
def lexeme_add(ws, lang, pos, paradigm, attr, domain, actor, lemma):
    attrs = dict(a.split("=", 1) for a in attr)
    lexeme_id = ws.lexicon.add_lexeme(lemma, lang.upper(), pos, paradigm,
                                      attrs, domain, actor=actor)
    ws.save()
    click.echo(lexeme_id)


@lexeme.command("list")
@click.option("--lang", default=None)
@click.option("--pos", default=None)
@pass_ws
def lexeme_list(ws, lang, pos):
    for lex in ws.lexicon.list_lexemes(lang and lang.upper(), pos):
        click.echo(f"{lex.id}\t{lex.language.value}\t{lex.pos.name}\t{lex.lemma}")


@lexeme.command("delete")
@click.option("--actor", default="cli")
@click.argument("lexeme_id")
@pass_ws
def lexeme_delete(ws, actor, lexeme_id):
    ws.lexicon.delete_lexeme(lexeme_id, actor=actor)
    ws.save()
    click.echo(f"deleted {lexeme_id}")


@lexeme.command("paradigm")
@click.argument("lexeme_id")
@pass_ws
def lexeme_paradigm(ws, lexeme_id):
    table = ws.lexicon.paradigm_of(lexeme_id)
    for bundle in sorted(table, key=lambda b: b.serialize()):
        click.echo(f"{bundle.serialize()}\t{table[bundle]}")


@main.group()
def link():
    """Sense links."""


@link.command("add")
@click.option("--priority", type=int, required=True)
@click.option("--domain", default=None)
@click.option("--actor", default="cli")
@click.argument("source_id")
@click.argument("target_id")
@pass_ws
def link_add(ws, priority, domain, actor, source_id, target_id):
    ws.lexicon.link_senses(source_id, target_id, priority, domain,
                           actor=actor)
    ws.save()
    click.echo(f"{source_id} -> {target_id} @{priority}")


@main.command()
@click.option("--from", "source", required=True, help="Source language (en|lt).")
@click.option("--to", "target", required=True, help="Target language (en|lt).")
@click.option("--wsd", "use_wsd", is_flag=True, default=False)
@click.option("--max-variants", type=int, default=64, show_default=True)
@click.option("--domain", default=None, help="Active domain tag.")
@click.option("--fixture", default=None,
              help="phrase<TAB>count oracle file (default: shipped fixture).")
@click.argument("text")
@pass_ws
def translate(ws, source, target, use_wsd, max_variants, domain, fixture, text):
    """Translate TEXT, one ranked variant per line: rank, score, text."""
    oracle = ws.oracle(fixture) if use_wsd else None
    result = transfer.translate(
        text, ws.lexicon, (source.upper(), target.upper()),
        active_domain=domain, max_variants=max_variants,
        use_wsd=use_wsd, oracle=oracle)
    for rank, variant in enumerate(result.variants, start=1):
        score = variant.score if variant.score is not None else "-"
        click.echo(f"{rank}\t{score}\t{variant.rendered}")
    if result.used_fallback:
        click.echo("# budget exhausted or all counts zero: priority ranking",
                   err=True)


@main.group()
def corpus():
    """Corpus index and OOV extraction."""


@corpus.command("ingest")
@click.option("--lang", required=True)
@click.argument("files", nargs=-1, required=True)
@pass_ws
def corpus_ingest(ws, lang, files):
    tag = lang.upper()
    path = ws.index_path(tag)
    index = corpus_mod.CorpusIndex.load(path) if path.exists() else None
    index = corpus_mod.ingest(files, tag, index)
    ws.dir.mkdir(parents=True, exist_ok=True)
    index.save(path)
    click.echo(f"{index.token_count} tokens, "
               f"{len(index.ngram_counts)} distinct n-grams")


@corpus.command("count")
@click.option("--lang", required=True)
@click.argument("phrase")
@pass_ws
def corpus_count(ws, lang, phrase):
    path = ws.index_path(lang.upper())
    if not path.exists():
        raise click.ClickException(f"no corpus ingested for {lang}")
    index = corpus_mod.CorpusIndex.load(path)
    result = index.count_phrase(phrase)
    suffix = "\t(degraded: phrase longer than index order)" if result.degraded else ""
    click.echo(f"{result.count}{suffix}")


@corpus.command("oov")
@click.option("--lang", required=True)
@click.option("--top", type=int, default=20, show_default=True)
@click.argument("files", nargs=-1, required=True)
@pass_ws
def corpus_oov(ws, lang, top, files):
    report = corpus_mod.extract_oov(files, lang.upper(), ws.lexicon)
    for entry in report.entries[:top]:
        contexts = " | ".join(entry.sample_contexts)
        click.echo(f"{entry.surface}\t{entry.frequency}\t{contexts}")


@main.command()
@click.option("--since", type=int, default=0)
@pass_ws
def audit(ws, since):
    """Show the persisted change log."""
    import json

    path = ws.dir / "audit.jsonl"
    if not path.exists():
        return
    for line in path.read_text("utf-8").splitlines():
        rec = json.loads(line)
        if rec["seq"] <= since:
            continue
        click.echo(f"{rec['seq']}\t{rec['timestamp']}\t{rec['actor']}\t"
                   f"{rec['op']}\t{rec['entity_kind']}:{rec['entity_id']}")


@main.command("export")
@click.argument("path")
@pass_ws
def export_cmd(ws, path):
    """Write the lexicon exchange file to PATH."""
    with open(path, "w", encoding="utf-8") as fh:
        for line in ws.lexicon.export_lines():
            fh.write(line + "\n")
    click.echo(f"exported to {path}")


@main.command("import")
@click.option("--actor", default="import")
@click.argument("path")
@pass_ws
def import_cmd(ws, actor, path):
    """Merge an exchange file into the store."""
    ws.lexicon.import_lines(Path(path).read_text("utf-8").splitlines(),
                            actor=actor)
    ws.save()
    click.echo("imported")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--fixture", default=None)
@pass_ws
def serve(ws, host, port, fixture):
    """Run the HTTP service over the embedded store."""
    import uvicorn

    from .service import AppState, create_app

    app = create_app(AppState(lexicon=ws.lexicon,
                              oracle=ws.oracle(fixture)))
    uvicorn.run(app, host=host, port=port)


def entrypoint():
    try:
        main()
    except LexitransferError as err:
        click.echo(f"error [{err.code}]: {err.message}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    entrypoint()
