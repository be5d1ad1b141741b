"""
In-process metrics for tkkforge.

Counts checks and violations per check name, records the dimension of
every constructed algebra, and accumulates wall time of the expensive
operations (span closures, boundary assembly, Jacobi and Jordan identity
sweeps). `timing_snapshot` is what `--timing` puts into a report.
"""
import threading
import time
from collections import defaultdict
from contextlib import contextmanager
from dataclasses import dataclass
from functools import wraps
from typing import Dict, Iterator, Optional

Tags = Optional[Dict[str, str]]


@dataclass
class TimingStats:
    """Running totals for one timed operation."""

    calls: int = 0
    total_ms: float = 0.0
    max_ms: float = 0.0

    def add(self, elapsed_ms: float) -> None:
        self.calls += 1
        self.total_ms += elapsed_ms
        self.max_ms = max(self.max_ms, elapsed_ms)


class MetricsCollector:
    """
    Thread-safe singleton holding counters, gauges and timings.

    Keys are the metric name with sorted tags appended, e.g.
    ``checks.run[check=jordan_algebra_axioms]``.
    """

    _instance = None
    _lock = threading.Lock()

    def __new__(cls):
        if cls._instance is None:
            with cls._lock:
                if cls._instance is None:
                    cls._instance = super().__new__(cls)
                    cls._instance._initialized = False
        return cls._instance

    def __init__(self):
        if self._initialized:
            return
        self._initialized = True
        self._counters: Dict[str, int] = defaultdict(int)
        self._gauges: Dict[str, float] = {}
        self._timings: Dict[str, TimingStats] = defaultdict(TimingStats)
        self._lock = threading.Lock()

    @staticmethod
    def _make_key(name: str, tags: Tags = None) -> str:
        if not tags:
            return name
        return f"{name}[{','.join(f'{k}={v}' for k, v in sorted(tags.items()))}]"

    def increment(self, name: str, value: int = 1, tags: Tags = None) -> None:
        key = self._make_key(name, tags)
        with self._lock:
            self._counters[key] += value

    def gauge(self, name: str, value: float, tags: Tags = None) -> None:
        key = self._make_key(name, tags)
        with self._lock:
            self._gauges[key] = value

    def timing(self, name: str, elapsed_ms: float, tags: Tags = None) -> None:
        key = self._make_key(name, tags)
        with self._lock:
            self._timings[key].add(elapsed_ms)

    def get_counter(self, name: str, tags: Tags = None) -> int:
        return self._counters.get(self._make_key(name, tags), 0)

    def get_gauge(self, name: str, tags: Tags = None) -> Optional[float]:
        return self._gauges.get(self._make_key(name, tags))

    def get_timing(self, name: str, tags: Tags = None) -> TimingStats:
        return self._timings.get(self._make_key(name, tags), TimingStats())

    def timings(self) -> Dict[str, TimingStats]:
        with self._lock:
            return dict(self._timings)

    def reset(self) -> None:
        with self._lock:
            self._counters.clear()
            self._gauges.clear()
            self._timings.clear()


# Global metrics instance
metrics = MetricsCollector()


@contextmanager
def timed(name: str, tags: Tags = None) -> Iterator[None]:
    """Time a block; failures are counted under ``<name>.error``."""
    start = time.perf_counter()
    try:
        yield
    except Exception:
        metrics.increment(f"{name}.error", tags=tags)
        raise
    finally:
        metrics.timing(name, (time.perf_counter() - start) * 1000, tags=tags)


def track_latency(metric_name: str, tags: Tags = None):
    """
    Decorator timing every call of a construction or check.

    Args:
        metric_name: Dotted operation name, e.g. "tkkcore.utkk"
        tags: Optional tags
    """
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            with timed(metric_name, tags):
                return func(*args, **kwargs)
        return wrapper
    return decorator


def track_check(check_name: str, passed: bool) -> None:
    """
    Count a verification check and, if it failed, a violation.

    Args:
        check_name: Name of the check (e.g. "jordan_pair_axioms")
        passed: Whether the check passed
    """
    metrics.increment("checks.run", tags={"check": check_name})
    if not passed:
        metrics.increment("checks.violations", tags={"check": check_name})


def track_construction(kind: str, dimension: int) -> None:
    """Count a constructed algebra and remember its total dimension."""
    metrics.increment("constructions.built", tags={"kind": kind})
    metrics.gauge("constructions.dimension", dimension, tags={"kind": kind})


def timing_snapshot() -> Dict[str, float]:
    """Total milliseconds per timed operation, rounded for reports."""
    return {
        name: round(stats.total_ms, 3)
        for name, stats in sorted(metrics.timings().items())
        if stats.calls
    }
