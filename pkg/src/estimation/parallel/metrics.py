"""
Prometheus metrics for the Monte-Carlo worker pool.
"""

from prometheus_client import Counter, Gauge, Histogram

from utils.metrics import get_or_create_metric

CHUNKS_PROCESSED = get_or_create_metric(
    lambda: Counter(
        "fadingcap_chunks_processed_total",
        "Monte-Carlo chunks processed by the worker pool",
        ["task", "status"],  # success, failed, cancelled
    ),
    "fadingcap_chunks_processed_total",
)

CHUNK_TIME = get_or_create_metric(
    lambda: Histogram(
        "fadingcap_chunk_seconds",
        "Time to process one Monte-Carlo chunk",
        ["task"],
        buckets=[0.01, 0.05, 0.1, 0.5, 1, 5, 10, 30, 60],
    ),
    "fadingcap_chunk_seconds",
)

POOL_ACTIVE_WORKERS = get_or_create_metric(
    lambda: Gauge(
        "fadingcap_pool_active_workers",
        "Worker threads currently processing chunks",
    ),
    "fadingcap_pool_active_workers",
)

POOL_QUEUE_SIZE = get_or_create_metric(
    lambda: Gauge(
        "fadingcap_pool_queue_size",
        "Chunks waiting to be processed",
    ),
    "fadingcap_pool_queue_size",
)
