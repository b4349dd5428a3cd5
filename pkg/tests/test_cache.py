import random
import threading

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexitransfer.cache import (DEFAULT_PER_ENTRY_LIMIT, DEFAULT_TOTAL_SIZE,
                                CacheConfig, ReadThroughCache, _sizeof)


class CountingLoader:
    def __init__(self, fn=None):
        self.calls = {}
        self.fn = fn or (lambda k: f"value:{k}")

    def __call__(self, key):
        self.calls[key] = self.calls.get(key, 0) + 1
        return self.fn(key)


def test_defaults_match_observed_db_settings():
    cfg = CacheConfig()
    assert cfg.total_size_bytes == DEFAULT_TOTAL_SIZE == 26214400
    assert cfg.per_entry_limit_bytes == DEFAULT_PER_ENTRY_LIMIT == 1048576


def test_cold_then_warm():
    cache = ReadThroughCache()
    loader = CountingLoader()
    assert cache.get_through("k", loader) == "value:k"
    assert cache.get_through("k", loader) == "value:k"
    assert loader.calls["k"] == 1
    assert cache.stats.hits == 1 and cache.stats.misses == 1


def test_repeated_gets():
    cache = ReadThroughCache()
    loader = CountingLoader()
    for _ in range(1000):
        cache.get_through("hot", loader)
    assert loader.calls["hot"] == 1
    assert cache.stats.misses == 1 and cache.stats.hits == 999


def test_oversize_value_not_stored():
    cache = ReadThroughCache(CacheConfig(total_size_bytes=10_000,
                                         per_entry_limit_bytes=100))
    big = "x" * 500
    loader = CountingLoader(lambda k: big)
    assert cache.get_through("big", loader) == big
    assert cache.get_through("big", loader) == big
    assert loader.calls["big"] == 2  # second get misses again
    assert cache.stats.resident_bytes == 0


def test_lru_eviction_order():
    value = "v" * 10
    size = _sizeof(value)
    cache = ReadThroughCache(CacheConfig(total_size_bytes=3 * size,
                                         per_entry_limit_bytes=size))
    loader = CountingLoader(lambda k: value)
    for key in "abc":
        cache.get_through(key, loader)
    cache.get_through("a", loader)   # refresh a; b is now LRU
    cache.get_through("d", loader)   # evicts b
    assert "b" not in cache and "a" in cache
    cache.get_through("b", loader)   # evicts c (LRU after a,d refresh... c)
    assert "c" not in cache
    assert cache.stats.evictions == 2


def test_invalidate_key_and_all():
    cache = ReadThroughCache()
    loader = CountingLoader()
    cache.get_through("k", loader)
    cache.invalidate("k")
    cache.invalidate("unknown")  # no-op
    cache.get_through("k", loader)
    assert loader.calls["k"] == 2
    cache.invalidate()
    assert len(cache) == 0 and cache.stats.resident_bytes == 0


def test_loader_errors_not_cached():
    cache = ReadThroughCache()
    calls = []

    def loader(key):
        calls.append(key)
        if len(calls) == 1:
            raise RuntimeError("boom")
        return 42

    with pytest.raises(RuntimeError):
        cache.get_through("k", loader)
    assert cache.get_through("k", loader) == 42
    assert len(calls) == 2


def test_single_flight_concurrent_misses():
    cache = ReadThroughCache()
    started = threading.Barrier(8)
    calls = []
    lock = threading.Lock()

    def slow_loader(key):
        with lock:
            calls.append(key)
        return "v"

    results = []

    def worker():
        started.wait()
        results.append(cache.get_through("same", slow_loader))

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert calls == ["same"]
    assert results == ["v"] * 8


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from("abcdefgh"), max_size=60),
       st.integers(0, 2**32 - 1))
def test_transparency_cached_equals_uncached(keys, seed):
    rng = random.Random(seed)
    table = {k: rng.randint(0, 10**6) for k in "abcdefgh"}
    cache = ReadThroughCache(CacheConfig(total_size_bytes=200,
                                         per_entry_limit_bytes=50))
    with_cache = [cache.get_through(k, lambda k: table[k]) for k in keys]
    without = [table[k] for k in keys]
    assert with_cache == without
    assert cache.stats.resident_bytes <= 200


def test_mutation_invalidates_lexicon_lookups():
    from lexitransfer.lexicon import Lexicon

    store = Lexicon(lookup_cache=ReadThroughCache())
    assert store.lookup_surface("stalo", "LT") == []
    store.add_lexeme("stalas", "LT", "noun", "lt-noun-as-m")
    hits = store.lookup_surface("stalo", "LT")
    assert hits and hits[0][0].lemma == "stalas"  # never stale
