from __future__ import annotations

import threading
from dataclasses import replace
from typing import Optional

from .models import SearchStats


class StatsStore:
    """
    Running SearchStats total shared by search workers.
    Workers report finished subtrees with add(); snapshot() hands out a copy.
    """

    def __init__(self, initial: Optional[SearchStats] = None):
        self._total = replace(initial) if initial is not None else SearchStats()
        self._reports = 0
        self._lock = threading.Lock()

    def add(self, stats: SearchStats) -> SearchStats:
        with self._lock:
            self._total = self._total.merged(stats)
            self._reports += 1
            return replace(self._total)

    def snapshot(self) -> SearchStats:
        with self._lock:
            return replace(self._total)

    @property
    def reports(self) -> int:
        with self._lock:
            return self._reports


class VisitBudget:
    """Shared node-visit counter with an optional cap."""

    def __init__(self, limit: Optional[int]):
        self.limit = limit
        self._used = 0
        self._lock = threading.Lock()

    def take(self) -> bool:
        with self._lock:
            self._used += 1
            return self.limit is None or self._used <= self.limit

    @property
    def used(self) -> int:
        return self._used
