"""English-Lithuanian-English translation toolkit: bilingual lexicon,
paradigm morphology, direct-transfer engine, count-based sense selection,
corpus tools and the HTTP/CLI bindings."""

from importlib import resources

__version__ = "0.1.0"


def load_starter_lexicon(lookup_cache=None, audit_path=None):
    """Fresh lexicon preloaded with the shipped starter entries."""
    from .lexicon import Lexicon

    lex = Lexicon(lookup_cache=lookup_cache, audit_path=audit_path)
    text = resources.files("lexitransfer.data").joinpath(
        "starter_lexicon.jsonl").read_text("utf-8")
    lex.import_lines(text.splitlines(), actor="starter")
    return lex


def sample_counts_path():
    return resources.files("lexitransfer.data").joinpath("sample_counts.tsv")


def sample_counts_oracle(daily_limit=None, cache=None):
    """Count-oracle handle backed by the shipped nine-row fixture."""
    from .cache import ReadThroughCache
    from .wsd import CountOracleHandle, FixtureOracle, QuotaBudget

    budget = QuotaBudget() if daily_limit is None else QuotaBudget(daily_limit)
    return CountOracleHandle(
        backend=FixtureOracle(str(sample_counts_path())),
        budget=budget,
        cache=cache or ReadThroughCache(),
    )
