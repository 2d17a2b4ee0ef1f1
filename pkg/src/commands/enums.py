"""Command-line enums."""

from enum import Enum, IntEnum


class Command(str, Enum):
    COMPUTE = "compute"
    VERIFY = "verify"
    CLASSES = "classes"
    FIGURE1 = "figure1"
    WITNESS = "witness"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"
    TEXT = "text"


class ExitCode(IntEnum):
    OK = 0
    VERIFICATION_FAILED = 1
    USAGE = 2
    RESOURCE_LIMIT = 3
    CACHE_CORRUPTION = 4
