"""Exception hierarchy shared by every section of the toolkit.

Section modules define their specific errors on top of these bases; the CLI
maps the bases to exit codes in `src.handlers`.
"""


class NivenError(Exception):
    """Base class for all toolkit errors."""
    pass


class InvalidArgumentError(NivenError, ValueError):
    """An argument is outside the domain of the operation."""
    pass


class ResourceLimitError(NivenError):
    """A configured resource cap would be exceeded."""
    pass


class VerificationError(NivenError):
    """A computed value failed its own postcondition check."""
    pass


class UsageError(InvalidArgumentError):
    """Invalid or conflicting command-line options."""
    pass


class CacheCorruptionError(NivenError):
    """A recomputed value disagrees with the cached one."""

    def __init__(self, q: int, k: int, cached: str, computed: str):
        super().__init__(
            f"Cache mismatch for q={q}, k={k}: cached a_k={cached}, computed a_k={computed}"
        )
        self.q = q
        self.k = k
