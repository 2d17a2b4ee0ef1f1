import json
import logging

from pydantic import ValidationError

from .commands.enums import ExitCode
from .exceptions import (
    CacheCorruptionError,
    InvalidArgumentError,
    ResourceLimitError,
    VerificationError,
)


# Checked in order; the first matching base class wins.
EXIT_CODES: list[tuple[type[BaseException], ExitCode]] = [
    (CacheCorruptionError, ExitCode.CACHE_CORRUPTION),
    (ResourceLimitError, ExitCode.RESOURCE_LIMIT),
    (VerificationError, ExitCode.VERIFICATION_FAILED),
    (InvalidArgumentError, ExitCode.USAGE),
    (ValidationError, ExitCode.USAGE),
]


def exit_code_for(exc: BaseException) -> ExitCode | None:
    for cls, code in EXIT_CODES:
        if isinstance(exc, cls):
            return code
    return None


def handle_exception(exc: BaseException) -> ExitCode:
    """Logs a toolkit error and returns its exit code. Anything else is
    re-raised untouched.
    """
    code = exit_code_for(exc)
    if code is None:
        raise exc
    logging.error(
        json.dumps({"message": str(exc), "error": type(exc).__name__, "exit_code": int(code)})
    )
    return code
