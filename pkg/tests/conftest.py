import pytest

import lexitransfer as pkg
from lexitransfer.cache import ReadThroughCache
from lexitransfer.wsd import CountOracleHandle, FixtureOracle, QuotaBudget

SAMPLE_COUNTS = {
    "Gulbė yra ant lentelės": 13,
    "Rašiklis yra ant lentelės": 16,
    "Areštinė yra ant lentelės": 5,
    "Gulbė yra ant stalo": 219,
    "Rašiklis yra ant stalo": 301,
    "Areštinė yra ant stalo": 18,
    "Gulbė yra ant plokščiakalnio": 0,
    "Rašiklis yra ant plokščiakalnio": 0,
    "Areštinė yra ant plokščiakalnio": 0,
}


@pytest.fixture
def lexicon():
    return pkg.load_starter_lexicon()


@pytest.fixture
def fixture_oracle():
    return pkg.sample_counts_oracle()


def make_oracle(counts, daily_limit=1000):
    return CountOracleHandle(backend=FixtureOracle(dict(counts)),
                             budget=QuotaBudget(daily_limit),
                             cache=ReadThroughCache())
