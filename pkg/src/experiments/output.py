"""
Artifact writing for CLI runs.

Every CSV starts with one provenance comment line::

    # tool=fadingcap version=0.1.0 command=mi seed=7 config_sha256=<hex>

and contains nothing time- or host-dependent, so identical (config, seed,
version) produce byte-identical files.
"""

import logging
import os
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any

from utils import __version__
from utils.tables import render_table, write_table_file

from .config import RunConfig

logger = logging.getLogger(__name__)

TOOL_NAME = "fadingcap"


@dataclass(frozen=True)
class Provenance:
    """What the header comment records."""

    command: str
    seed: int
    config_sha256: str
    version: str = __version__

    @classmethod
    def for_run(cls, command: str, config: RunConfig) -> "Provenance":
        return cls(command=command, seed=config.experiment.seed, config_sha256=config.sha256())

    def header(self) -> str:
        return (
            f"tool={TOOL_NAME} version={self.version} command={self.command} "
            f"seed={self.seed} config_sha256={self.config_sha256}"
        )


class ArtifactWriter:
    """
    Writes CSV (and optionally SVG) artifacts into the run's output directory.

    Args:
        config: Run configuration (output directory and formats)
        provenance: Header comment content
    """

    def __init__(self, config: RunConfig, provenance: Provenance):
        self.directory = config.output.directory
        self.formats = set(config.output.formats)
        self.provenance = provenance
        self.written: list[str] = []

    @property
    def wants_svg(self) -> bool:
        return "svg" in self.formats

    def path(self, name: str) -> str:
        return os.path.join(self.directory, name)

    def write_csv(self, name: str, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        """Write ``name`` under the output directory and return its path."""
        path = self.path(name)
        write_table_file(path, columns, rows, comments=[self.provenance.header()])
        self.written.append(path)
        logger.info(f"Wrote {path}")
        return path

    def render_csv(self, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        """The same CSV text as ``write_csv`` would produce (for stdout)."""
        return render_table(columns, rows, comments=[self.provenance.header()])
