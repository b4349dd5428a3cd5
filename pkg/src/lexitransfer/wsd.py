"""Sense selection by phrase counts.

Each rendered variant is looked up in a count oracle (local corpus
index, tab-separated fixture file, or a remote stub) and the variant
with the maximal count wins.  Counting goes through the read-through
cache; only cache misses spend the daily query budget.  When every count
is zero, or the budget runs out mid-scoring, selection degrades to pure
priority ranking.

Likelihoods are exact rationals (count / total), so no tolerances.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from datetime import date
from fractions import Fraction
from pathlib import Path

from .cache import ReadThroughCache
from .errors import (BackendUnavailable, BudgetExhausted, EmptyVariantList,
                     ZeroTotal)

DEFAULT_DAILY_LIMIT = 1000


class QuotaBudget:
    """Daily query allowance; optionally persisted so restarts keep count."""

    def __init__(self, daily_limit=DEFAULT_DAILY_LIMIT, state_path=None,
                 today=None):
        self.daily_limit = daily_limit
        self.state_path = Path(state_path) if state_path else None
        self._today = today or date.today
        self.day = self._today()
        self.used_today = 0
        self._lock = threading.Lock()
        if self.state_path and self.state_path.exists():
            self._load()

    def _load(self):
        text = self.state_path.read_text("utf-8").strip()
        if not text:
            return
        day_s, used_s = text.split("\t")
        day = date.fromisoformat(day_s)
        if day == self._today():
            self.day = day
            self.used_today = int(used_s)

    def _save(self):
        if self.state_path:
            self.state_path.write_text(
                f"{self.day.isoformat()}\t{self.used_today}\n", "utf-8")

    def _roll(self):
        today = self._today()
        if today != self.day:
            self.day = today
            self.used_today = 0

    @property
    def remaining(self):
        with self._lock:
            self._roll()
            return self.daily_limit - self.used_today

    def spend(self, n=1):
        with self._lock:
            self._roll()
            if self.used_today + n > self.daily_limit:
                raise BudgetExhausted(
                    f"{self.used_today}/{self.daily_limit} queries used today")
            self.used_today += n
            self._save()

    def refund(self, n=1):
        with self._lock:
            self.used_today = max(0, self.used_today - n)
            self._save()


# -- backends ----------------------------------------------------------------

class FixtureOracle:
    """phrase<TAB>count file (or dict); unknown phrases count 0."""

    backend_name = "fixture"

    def __init__(self, source):
        if isinstance(source, dict):
            self.counts = dict(source)
        else:
            self.counts = {}
            for line in Path(source).read_text("utf-8").splitlines():
                line = line.rstrip("\n")
                if not line or line.startswith("#"):
                    continue
                phrase, _, count = line.rpartition("\t")
                self.counts[phrase] = int(count)

    def count(self, phrase: str) -> int:
        return self.counts.get(phrase, 0)


class CorpusOracle:
    """Counts from a local n-gram corpus index."""

    backend_name = "corpus_index"

    def __init__(self, index):
        self.index = index

    def count(self, phrase: str) -> int:
        return self.index.count_phrase(phrase).count


class RemoteStubOracle:
    """HTTP GET adapter: the endpoint returns a bare integer count.

    No live third-party integration ships; this exists so a remote
    counter can be plugged in without touching selection logic.
    """

    backend_name = "remote_stub"

    def __init__(self, url: str, timeout=5.0):
        self.url = url
        self.timeout = timeout

    def count(self, phrase: str) -> int:
        import requests

        try:
            resp = requests.get(self.url, params={"q": phrase},
                                timeout=self.timeout)
            resp.raise_for_status()
            return int(resp.text.strip())
        except Exception as err:
            raise BackendUnavailable(str(err)) from err


@dataclass
class CountOracleHandle:
    backend: object                      # anything with .count(phrase) -> int
    budget: QuotaBudget = field(default_factory=QuotaBudget)
    cache: ReadThroughCache = field(default_factory=ReadThroughCache)


def get_count(oracle: CountOracleHandle, phrase: str) -> int:
    """Occurrence count for a phrase; cache first, budget only on miss."""
    if not phrase:
        raise ValueError("phrase must be non-empty")

    def load(_key):
        oracle.budget.spend()
        try:
            return oracle.backend.count(phrase)
        except Exception:
            oracle.budget.refund()
            raise

    return oracle.cache.get_through(phrase, load)


# -- selection ----------------------------------------------------------------

@dataclass(frozen=True)
class ScoredVariant:
    variant: object          # TranslationVariant
    count: int
    likelihood: Fraction | None = None


@dataclass
class Selection:
    winner: object
    scored: list
    fallback: bool = False


def _priority_key(variant):
    return (variant.priority_sum(), variant.sense_priorities)


def score_and_select(variants, oracle: CountOracleHandle) -> Selection:
    """Count every variant's rendered sentence and pick the argmax.

    Ties break by lower priority sum, then lexicographic per-slot
    priority vector.  All-zero counts or budget exhaustion mid-scoring
    degrade to priority ranking over all variants.
    """
    variants = list(variants)
    if not variants:
        raise EmptyVariantList("no variants to score")
    counts = []
    exhausted = False
    for variant in variants:
        try:
            counts.append(get_count(oracle, variant.rendered))
        except BudgetExhausted:
            exhausted = True
            break
    if exhausted or not any(counts):
        winner = min(variants, key=_priority_key)
        scored = [ScoredVariant(variant=v,
                                count=counts[i] if i < len(counts) else 0)
                  for i, v in enumerate(variants)]
        return Selection(winner=winner, scored=scored, fallback=True)
    scored = [ScoredVariant(variant=v, count=c)
              for v, c in zip(variants, counts)]
    total = sum(counts)
    scored = [ScoredVariant(variant=sv.variant, count=sv.count,
                            likelihood=Fraction(sv.count, total))
              for sv in scored]
    best = min(scored, key=lambda sv: (-sv.count,) + _priority_key(sv.variant))
    return Selection(winner=best.variant, scored=scored, fallback=False)


def likelihoods(scored) -> list:
    """count/total for each scored variant, exact rationals summing to 1."""
    total = sum(sv.count for sv in scored)
    if total <= 0:
        raise ZeroTotal("all counts are zero")
    return [Fraction(sv.count, total) for sv in scored]
