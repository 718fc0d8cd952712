"""
Tracer initialization and configuration for OpenTelemetry.

Exporters are opt-in: OTLP only when an endpoint is given (argument or
OTLP_ENDPOINT), console only when requested (argument or TRACE_CONSOLE).
"""

import logging
import os

from opentelemetry import trace
from opentelemetry.sdk.resources import SERVICE_NAME, Resource
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import BatchSpanProcessor, ConsoleSpanExporter
from opentelemetry.sdk.trace.sampling import TraceIdRatioBased

logger = logging.getLogger(__name__)

_TRACER_NAME = "fadingcap"

_tracer: trace.Tracer | None = None
_is_initialized = False


def _env_flag(name: str) -> bool:
    return os.getenv(name, "").lower() in ("true", "1", "yes")


def initialize_tracing(
    service_name: str = "fadingcap",
    otlp_endpoint: str | None = None,
    console_export: bool = False,
    sampling_rate: float = 1.0,
) -> trace.Tracer:
    """
    Initialize tracing with OpenTelemetry.

    Args:
        service_name: Name of the service for identification
        otlp_endpoint: OTLP collector endpoint (e.g., "localhost:4317")
        console_export: If True, also export spans to the console
        sampling_rate: Sampling rate 0.0-1.0 (1.0 = trace everything)

    Returns:
        Configured tracer instance

    Example:
        >>> tracer = initialize_tracing(otlp_endpoint="localhost:4317")
    """
    global _tracer, _is_initialized

    if _env_flag("OTEL_SDK_DISABLED"):
        logger.debug("OpenTelemetry SDK disabled via OTEL_SDK_DISABLED")
        _tracer = trace.get_tracer(_TRACER_NAME)
        _is_initialized = True
        return _tracer

    if _is_initialized and _tracer is not None:
        logger.warning("Tracing already initialized, returning existing tracer")
        return _tracer

    otlp_endpoint = otlp_endpoint or os.getenv("OTLP_ENDPOINT")
    console_export = console_export or _env_flag("TRACE_CONSOLE")

    if not otlp_endpoint and not console_export:
        # Leave the global no-op provider in place
        _tracer = trace.get_tracer(_TRACER_NAME)
        _is_initialized = True
        logger.debug("No trace exporters configured, tracing is a no-op")
        return _tracer

    provider = TracerProvider(
        resource=Resource(attributes={SERVICE_NAME: service_name}),
        sampler=TraceIdRatioBased(sampling_rate),
    )
    exporters = []

    if otlp_endpoint:
        try:
            from opentelemetry.exporter.otlp.proto.grpc.trace_exporter import OTLPSpanExporter

            provider.add_span_processor(
                BatchSpanProcessor(OTLPSpanExporter(endpoint=otlp_endpoint, insecure=True))
            )
            exporters.append("OTLP")
            logger.info(f"OTLP exporter configured: {otlp_endpoint}")
        except Exception as e:
            logger.warning(f"Failed to configure OTLP exporter: {e}")

    if console_export:
        provider.add_span_processor(BatchSpanProcessor(ConsoleSpanExporter()))
        exporters.append("Console")

    trace.set_tracer_provider(provider)
    _tracer = trace.get_tracer(_TRACER_NAME)
    _is_initialized = True

    logger.info(
        f"Tracing initialized: {service_name} "
        f"(exporters: {', '.join(exporters) or 'none'}, sampling: {sampling_rate})"
    )
    return _tracer


def get_tracer() -> trace.Tracer:
    """
    Get the global tracer instance.

    Falls back to the API's tracer (no-op unless a provider was installed)
    when initialize_tracing() has not been called.
    """
    global _tracer

    if _tracer is None:
        _tracer = trace.get_tracer(_TRACER_NAME)

    return _tracer


def shutdown_tracing() -> None:
    """Flush pending spans and shut the provider down."""
    global _is_initialized, _tracer

    if not _is_initialized:
        return

    try:
        provider = trace.get_tracer_provider()
        if hasattr(provider, "shutdown"):
            provider.shutdown()
        logger.debug("Tracing shutdown complete")
    except Exception as e:
        logger.error(f"Error during tracing shutdown: {e}")
    finally:
        _is_initialized = False
        _tracer = None
