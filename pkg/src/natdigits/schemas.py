from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, model_validator


MIN_BASE = 2
MAX_BASE = 2**16

Natural = Annotated[int, Field(ge=0)]
Base = Annotated[int, Field(ge=MIN_BASE, le=MAX_BASE)]


class DigitString(BaseModel):
    """Canonical base-q representation, most-significant digit first."""

    model_config = ConfigDict(frozen=True)

    base: Base
    digits: tuple[int, ...] = Field(min_length=1)

    @model_validator(mode="after")
    def validate_canonical(self):
        if any(d < 0 or d >= self.base for d in self.digits):
            raise ValueError(f"Digits must lie in [0, {self.base - 1}]")
        if len(self.digits) > 1 and self.digits[0] == 0:
            raise ValueError("Leading zero digits are not canonical")
        return self

    def __len__(self) -> int:
        return len(self.digits)
