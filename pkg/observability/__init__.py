"""
Observability for tkkforge: logging on stderr, OpenTelemetry spans around
constructions, and check/timing metrics that feed reports.
"""

from .logging_config import setup_logging, get_logger, get_context_logger
from .tracing import setup_tracing, create_span, trace_operation
from .metrics import (
    MetricsCollector,
    TimingStats,
    metrics,
    timed,
    track_latency,
    track_check,
    track_construction,
    timing_snapshot,
)

__all__ = [
    "setup_logging",
    "get_logger",
    "get_context_logger",
    "setup_tracing",
    "create_span",
    "trace_operation",
    "MetricsCollector",
    "TimingStats",
    "metrics",
    "timed",
    "track_latency",
    "track_check",
    "track_construction",
    "timing_snapshot",
]
