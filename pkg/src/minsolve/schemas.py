from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class SearchState(BaseModel):
    """A node of the digit-append graph: (residue mod m, digit sum so far)."""

    model_config = ConfigDict(frozen=True)

    residue: int = Field(ge=0)
    sum: int = Field(ge=0)


class SolverResult(BaseModel):
    """Smallest positive multiple of `modulus` whose base-q digit sum is `sigma`.

    `value` and `quotient` are absent when no such multiple exists.
    """

    model_config = ConfigDict(frozen=True)

    base: int = Field(ge=2)
    modulus: int = Field(ge=1)
    sigma: int = Field(ge=1)
    found: bool
    value: Optional[int] = None
    quotient: Optional[int] = None
    digits: tuple[int, ...] = ()
    digit_count: int = 0
    nonzero_digits: int = 0
    states: int = Field(default=0, description="Size of the distance table")
