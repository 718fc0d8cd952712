"""
Chunked parallel execution for Monte-Carlo estimators.
"""

from .executor import ChunkExecutor
from .helpers import (
    DEFAULT_MAX_WORKERS,
    MAX_WORKERS_ENV,
    ChunkSpec,
    derive_seed,
    plan_chunks,
    resolve_worker_count,
)

__all__ = [
    "ChunkExecutor",
    "ChunkSpec",
    "DEFAULT_MAX_WORKERS",
    "MAX_WORKERS_ENV",
    "derive_seed",
    "plan_chunks",
    "resolve_worker_count",
]
