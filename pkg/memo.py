"""
Per-structure memo tables.

Structures are frozen; derived objects (the TKK algebra of a pair, its
H2, certified checks) hang off a `Memo` keyed by construction. Builds run
outside the lock, so two threads may both build; `store` keeps whichever
value landed first and every caller gets that one object back.
"""
import threading
from typing import Any, Hashable, TypeVar

T = TypeVar("T")


class Memo(dict):
    """dict whose writes go through `store` under a lock."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._lock = threading.Lock()

    def store(self, key: Hashable, value: T) -> T:
        """Keep the first value stored under `key` and return it."""
        with self._lock:
            return super().setdefault(key, value)

    def __setitem__(self, key: Hashable, value: Any) -> None:
        with self._lock:
            super().__setitem__(key, value)

    def __repr__(self) -> str:
        return f"Memo({len(self)} entries)"
