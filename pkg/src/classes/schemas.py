from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from ..constructions.schemas import ExponentSet


class ClassQuery(BaseModel):
    """Is 2^(k+m) - 1 a sum of m distinct powers 2^j, j <= m + k - 2, mod k?"""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=3)
    m: int = Field(ge=1)
    target: int = Field(ge=0)
    window_top: int = Field(ge=0)


class ClassMembership(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int
    m: int
    member: bool
    witness: Optional[ExponentSet] = None


class ClassRecord(BaseModel):
    """Minimal class index of k with the witness found at that index.

    Bit m-1 of `memberships` is set when k was tested and found in C_m.
    """

    model_config = ConfigDict(frozen=True)

    k: int
    m_min: int = Field(ge=1)
    memberships: int
    tested_up_to: int
    witness: ExponentSet


class DensityPoint(BaseModel):
    """Running count of C_m members among odd 3 <= k <= x and 2 * count / x."""

    model_config = ConfigDict(frozen=True)

    x: int
    count: int
    ratio: float
