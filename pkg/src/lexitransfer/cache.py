"""Read-through LRU cache with byte-size accounting.

Fronts the phrase-count oracle and hot lexicon lookups.  The default
sizes (25 MiB total, 1 MiB per entry) mirror the query-cache settings of
the database environment this toolkit grew up against; both are
config-overridable.

Concurrent misses for the same key coalesce: the loader runs once and
every waiter gets that result (single-flight).
"""

from __future__ import annotations

import pickle
import threading
from collections import OrderedDict
from dataclasses import dataclass, field

DEFAULT_TOTAL_SIZE = 26214400      # bytes
DEFAULT_PER_ENTRY_LIMIT = 1048576  # bytes


@dataclass
class CacheConfig:
    total_size_bytes: int = DEFAULT_TOTAL_SIZE
    per_entry_limit_bytes: int = DEFAULT_PER_ENTRY_LIMIT
    enabled: bool = True

    def __post_init__(self):
        if self.total_size_bytes <= 0 or self.per_entry_limit_bytes <= 0:
            raise ValueError("cache sizes must be positive")
        if self.per_entry_limit_bytes > self.total_size_bytes:
            raise ValueError("per_entry_limit_bytes exceeds total_size_bytes")


@dataclass
class CacheStats:
    hits: int = 0
    misses: int = 0
    evictions: int = 0
    resident_bytes: int = 0


def _sizeof(value) -> int:
    # Serialized length keeps accounting implementation-independent.
    return len(pickle.dumps(value))


class ReadThroughCache:
    def __init__(self, config: CacheConfig | None = None):
        self.config = config or CacheConfig()
        self.stats = CacheStats()
        self._lock = threading.Lock()
        self._entries: OrderedDict = OrderedDict()  # key -> (value, size)
        self._inflight: dict = {}                   # key -> per-key lock

    def get_through(self, key: str, loader):
        """Cached value for key, loading through on a miss."""
        if not self.config.enabled:
            with self._lock:
                self.stats.misses += 1
            return loader(key)
        with self._lock:
            entry = self._entries.get(key)
            if entry is not None:
                self._entries.move_to_end(key)
                self.stats.hits += 1
                return entry[0]
            flight = self._inflight.setdefault(key, threading.Lock())
        with flight:
            with self._lock:
                entry = self._entries.get(key)
                if entry is not None:
                    self._entries.move_to_end(key)
                    self.stats.hits += 1
                    return entry[0]
            value = loader(key)  # loader errors propagate, nothing cached
            size = _sizeof(value)
            with self._lock:
                self.stats.misses += 1
                if size <= self.config.per_entry_limit_bytes:
                    self._store(key, value, size)
                self._inflight.pop(key, None)
            return value

    def _store(self, key, value, size):
        while (self.stats.resident_bytes + size > self.config.total_size_bytes
               and self._entries):
            _, (_, old_size) = self._entries.popitem(last=False)
            self.stats.resident_bytes -= old_size
            self.stats.evictions += 1
        self._entries[key] = (value, size)
        self.stats.resident_bytes += size

    def invalidate(self, key=None):
        """Drop one entry, or everything when key is None."""
        with self._lock:
            if key is None:
                self._entries.clear()
                self.stats.resident_bytes = 0
            else:
                entry = self._entries.pop(key, None)
                if entry is not None:
                    self.stats.resident_bytes -= entry[1]

    def __contains__(self, key):
        with self._lock:
            return key in self._entries

    def __len__(self):
        with self._lock:
            return len(self._entries)
