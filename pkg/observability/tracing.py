"""
OpenTelemetry spans around tkkforge constructions.

Every decorated operation (TKK, uTKK, ins, boundary assembly, splitting,
the verification pipelines) opens a span named ``tkkforge.<operation>``
carrying the input structure's name and, when the result has one, its
dimension. Without the SDK installed spans are no-ops.
"""
import os
from contextlib import contextmanager
from functools import wraps
from typing import Any, Dict, Iterator, Optional

from config import config
from observability.logging_config import get_logger

logger = get_logger(__name__)

try:
    from opentelemetry import trace
    from opentelemetry.sdk.resources import Resource
    from opentelemetry.sdk.trace import TracerProvider
    from opentelemetry.sdk.trace.export import BatchSpanProcessor, ConsoleSpanExporter
    OTEL_AVAILABLE = True
except ImportError:
    OTEL_AVAILABLE = False
    trace = None

_tracer: Optional[Any] = None


def setup_tracing(
    service_name: Optional[str] = None,
    endpoint: Optional[str] = None,
    console_export: Optional[bool] = None,
) -> None:
    """
    Install a tracer provider.

    Args:
        service_name: Service name for traces (OTEL_SERVICE_NAME)
        endpoint: OTLP endpoint; spans are only exported when one is set
        console_export: Print finished spans to stderr (TKK_TRACE_CONSOLE)
    """
    global _tracer

    if not OTEL_AVAILABLE:
        logger.debug("OpenTelemetry not available; spans are no-ops")
        return

    service_name = service_name or config.OTEL_SERVICE_NAME
    endpoint = endpoint or config.OTEL_EXPORTER_ENDPOINT
    if console_export is None:
        console_export = config.TRACE_CONSOLE

    provider = TracerProvider(resource=Resource.create({
        "service.name": service_name,
        "deployment.environment": os.getenv("ENVIRONMENT", "development"),
    }))
    if console_export:
        provider.add_span_processor(BatchSpanProcessor(ConsoleSpanExporter()))
    if endpoint:
        try:
            from opentelemetry.exporter.otlp.proto.grpc.trace_exporter import OTLPSpanExporter
            provider.add_span_processor(BatchSpanProcessor(OTLPSpanExporter(endpoint=endpoint)))
        except ImportError:
            logger.warning("OTLP exporter not available; install opentelemetry-exporter-otlp")

    trace.set_tracer_provider(provider)
    _tracer = trace.get_tracer(service_name)


def get_tracer():
    if _tracer is None and OTEL_AVAILABLE:
        setup_tracing()
    return _tracer


class OperationSpan:
    """Thin handle over an optional span; attribute calls are dropped when tracing is off."""

    def __init__(self, span=None):
        self.span = span

    def set_attribute(self, key: str, value: Any) -> None:
        if self.span is not None:
            self.span.set_attribute(key, value)


@contextmanager
def create_span(name: str, attributes: Optional[Dict[str, Any]] = None) -> Iterator[OperationSpan]:
    """Open a span (or a no-op handle) for the block; exceptions mark the span as failed."""
    tracer = get_tracer()
    if tracer is None:
        yield OperationSpan()
        return
    with tracer.start_as_current_span(name, attributes=attributes or {}) as span:
        yield OperationSpan(span)


def _structure_name(args) -> Optional[str]:
    name = getattr(args[0], "name", None) if args else None
    return name if isinstance(name, str) else None


def trace_operation(operation: str):
    """
    Decorator opening a ``tkkforge.<operation>`` span.

    Args:
        operation: Span suffix, e.g. "utkk" or "boundary_matrix"
    """
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            attributes = {"operation": operation}
            structure = _structure_name(args)
            if structure:
                attributes["structure"] = structure
            with create_span(f"tkkforge.{operation}", attributes) as span:
                result = func(*args, **kwargs)
                dim = getattr(result, "dim", None)
                if isinstance(dim, int):
                    span.set_attribute("result.dimension", dim)
                return result
        return wrapper
    return decorator
