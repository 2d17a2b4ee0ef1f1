from pydantic import BaseModel, Field, ValidationError, model_validator

from .exceptions import UsageError


class KRange(BaseModel):
    """Inclusive range of indices k, written `start..stop` or a single `k`."""

    start: int = Field(ge=1)
    stop: int = Field(ge=1)

    @model_validator(mode="after")
    def validate_order(self):
        if self.stop < self.start:
            raise ValueError(f"Empty range {self.start}..{self.stop}")
        return self

    def indices(self) -> range:
        return range(self.start, self.stop + 1)


def validate_k_range(text: str) -> KRange:
    """Parses and validates a k-range. Raise a `UsageError` if the range is
    not valid, e.g. reversed or nonpositive bounds.

    Args:
        text (str): `start..stop` or a single integer.

    Raises:
        UsageError: The text is not a valid range.

    Returns:
        KRange: The validated range.
    """
    start, sep, stop = text.partition("..")
    try:
        bounds = (int(start), int(stop)) if sep else (int(text), int(text))
    except ValueError as e:
        raise UsageError(f"Invalid k range {text!r}; expected START..STOP") from e
    try:
        return KRange(start=bounds[0], stop=bounds[1])
    except ValidationError as e:
        raise UsageError(f"Invalid k range {text!r}: {e.errors()[0]['msg']}") from e
