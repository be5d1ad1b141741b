"""
Tests for check accounting, timings and structured log output.
"""
import json
import logging
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))


@pytest.fixture
def fresh_metrics():
    from observability.metrics import metrics

    metrics.reset()
    yield metrics
    metrics.reset()


class TestMetrics:
    """Counters fed by recorded checks and decorated constructions."""

    def test_record_counts_checks_and_violations(self, fresh_metrics):
        from certificates import Certificate, Violation, record

        record(Certificate("graded_lie_algebra"))
        record(Violation("graded_lie_algebra", "Jacobi identity fails"))
        tags = {"check": "graded_lie_algebra"}
        assert fresh_metrics.get_counter("checks.run", tags) == 2
        assert fresh_metrics.get_counter("checks.violations", tags) == 1

    def test_timing_snapshot_lists_constructions(self, fresh_metrics, pair_of):
        from observability.metrics import timing_snapshot
        from tkkcore import utkk

        utkk(pair_of("k1"))
        snapshot = timing_snapshot()
        assert "tkkcore.utkk" in snapshot
        assert snapshot["tkkcore.utkk"] >= 0
        assert fresh_metrics.get_gauge("constructions.dimension", {"kind": "utkk"}) == 3

    def test_failed_call_counted_as_error(self, fresh_metrics):
        from observability.metrics import track_latency

        @track_latency("demo")
        def fails():
            raise ValueError("boom")

        with pytest.raises(ValueError):
            fails()
        assert fresh_metrics.get_counter("demo.error") == 1
        assert fresh_metrics.get_timing("demo").calls == 1

    def test_timed_block_accumulates(self, fresh_metrics):
        from observability.metrics import timed

        for _ in range(3):
            with timed("block", {"kind": "demo"}):
                pass
        stats = fresh_metrics.get_timing("block", {"kind": "demo"})
        assert stats.calls == 3
        assert stats.total_ms >= stats.max_ms >= 0


class TestTracing:
    """Spans wrap constructions without changing their results."""

    def test_traced_construction_returns_result(self, pair_of):
        from tkkcore import tkk

        assert tkk(pair_of("k1")).dim == 3

    def test_span_handle_accepts_attributes(self):
        from observability.tracing import create_span

        with create_span("tkkforge.test", {"operation": "test"}) as span:
            span.set_attribute("result.dimension", 3)


@pytest.mark.usefixtures("restore_logging")
class TestLogging:
    """JSON lines carry the structure and check context."""

    def test_json_lines_on_stderr(self, capsys):
        from certificates import Violation, record
        from observability.logging_config import setup_logging

        setup_logging(level="WARNING", json_format=True)
        record(Violation("pair_iso", "map is not bijective"))
        line = capsys.readouterr().err.strip().splitlines()[-1]
        data = json.loads(line)
        assert data["level"] == "WARNING"
        assert data["check"] == "pair_iso"

    def test_context_logger_adds_fields(self, caplog):
        from observability.logging_config import get_context_logger

        log = get_context_logger("tkkforge.test", structure="mat2sym", command="check")
        with caplog.at_level(logging.INFO, logger="tkkforge.test"):
            log.info("checked structure")
        assert caplog.records[-1].structure == "mat2sym"
        assert caplog.records[-1].command == "check"
