"""
Exceptions raised by the Monte-Carlo estimators and the proof-chain audit.
"""


class EstimationError(Exception):
    """Base exception for estimation errors"""
    pass


class AlphabetTooLargeError(EstimationError):
    """Raised when |A|^n exceeds the exact-mixture enumeration limit"""

    def __init__(self, alphabet_size: int, blocklength: int, limit: int):
        self.alphabet_size = alphabet_size
        self.blocklength = blocklength
        self.limit = limit
        super().__init__(
            f"input alphabet of size {alphabet_size} at blocklength {blocklength} "
            f"gives {alphabet_size ** blocklength} sequences (limit {limit})"
        )


class NotFiniteAlphabetError(EstimationError):
    """Raised when an exact-mixture estimator is given a continuous input law"""
    pass


class AuditPointError(EstimationError):
    """Raised when a time index is outside the range an estimator supports"""
    pass


class ChunkExecutionError(EstimationError):
    """Raised when a Monte-Carlo chunk fails in the worker pool"""

    def __init__(self, chunk_index: int, cause: BaseException):
        self.chunk_index = chunk_index
        self.cause = cause
        super().__init__(f"chunk {chunk_index} failed: {type(cause).__name__}: {cause}")
