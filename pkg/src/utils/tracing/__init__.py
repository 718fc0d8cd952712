"""
Tracing using OpenTelemetry.

Spans wrap the expensive numerical stages (covariance factorization,
Monte-Carlo chunks, bound optimization) so long runs can be profiled
with any OTLP collector. Without an exporter configured every helper
degrades to a no-op tracer.
"""

from .context import add_span_attributes, add_span_event, trace_operation
from .decorators import trace_function
from .tracer import get_tracer, initialize_tracing, shutdown_tracing

__all__ = [
    "initialize_tracing",
    "get_tracer",
    "shutdown_tracing",
    "trace_operation",
    "trace_function",
    "add_span_attributes",
    "add_span_event",
]
