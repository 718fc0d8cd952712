"""
Batch front door: run configuration, artifact writing and the fadingcap CLI.
"""

from .config import RunConfig
from .errors import RunConfigError, UsageError
from .output import ArtifactWriter, Provenance

__all__ = ["ArtifactWriter", "Provenance", "RunConfig", "RunConfigError", "UsageError"]
