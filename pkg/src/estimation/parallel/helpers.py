"""
Chunk planning, seed derivation and worker-count resolution.

Chunk boundaries and chunk seeds depend only on the workload (sample
count, chunk size, master seed, task label), never on the worker count,
which is what makes results identical for any pool size.
"""

import hashlib
import logging
import os
from dataclasses import dataclass

logger = logging.getLogger(__name__)

MAX_WORKERS_ENV = "FADINGCAP_MAX_WORKERS"
DEFAULT_MAX_WORKERS = 4

_SEED_MASK = (1 << 63) - 1


def derive_seed(master_seed: int, *labels: object) -> int:
    """
    Child seed from a master seed and a label path.

    Uses BLAKE2b over the decimal master seed and the ``|``-joined labels,
    so the mapping is stable across Python versions and platforms
    (unlike ``hash()``).

    Args:
        master_seed: Run-level seed
        *labels: Path identifying the consumer, e.g. ("mi", row_index, "chunk", 3)

    Returns:
        Non-negative 63-bit integer seed

    Example:
        >>> derive_seed(7, "mi", 0) == derive_seed(7, "mi", 0)
        True
    """
    material = "|".join([str(int(master_seed))] + [str(label) for label in labels])
    digest = hashlib.blake2b(material.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big") & _SEED_MASK


@dataclass(frozen=True)
class ChunkSpec:
    """One slice of a Monte-Carlo workload."""

    index: int
    start: int
    size: int
    seed: int


def plan_chunks(total: int, chunk_size: int, master_seed: int, task: str) -> list[ChunkSpec]:
    """
    Split ``total`` samples into fixed-size chunks with derived seeds.

    Args:
        total: Number of samples
        chunk_size: Samples per chunk (the last chunk may be shorter)
        master_seed: Seed of the whole estimate
        task: Label mixed into every chunk seed

    Returns:
        Chunks in sample order
    """
    if total < 0:
        raise ValueError(f"sample count must be non-negative, got {total}")
    if chunk_size < 1:
        raise ValueError(f"chunk size must be positive, got {chunk_size}")

    chunks = []
    for index, start in enumerate(range(0, total, chunk_size)):
        chunks.append(
            ChunkSpec(
                index=index,
                start=start,
                size=min(chunk_size, total - start),
                seed=derive_seed(master_seed, task, "chunk", index),
            )
        )
    return chunks


def resolve_worker_count(requested: int | None = None) -> int:
    """
    Worker count for the pool.

    An explicit request wins; otherwise FADINGCAP_MAX_WORKERS, otherwise
    min(4, cpu count). The environment variable also caps explicit requests.

    Example:
        >>> # FADINGCAP_MAX_WORKERS=2
        >>> resolve_worker_count(8)
        2
    """
    cap: int | None = None
    raw = os.getenv(MAX_WORKERS_ENV)
    if raw:
        try:
            cap = max(1, int(raw))
        except ValueError:
            logger.warning(f"Ignoring non-integer {MAX_WORKERS_ENV}={raw!r}")

    if requested is not None:
        workers = max(1, int(requested))
    elif cap is not None:
        workers = cap
    else:
        workers = min(DEFAULT_MAX_WORKERS, os.cpu_count() or 1)

    if cap is not None:
        workers = min(workers, cap)
    return workers
