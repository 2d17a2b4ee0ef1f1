"""Witness records returned by the constructions."""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from .enums import ConstructionName


class ExponentSet(BaseModel):
    """Strictly increasing exponents j_1 < ... < j_r, all within [0, bound],
    with sum of 2^j_i congruent to `target` modulo `modulus`.
    """

    model_config = ConfigDict(frozen=True)

    modulus: int = Field(ge=1)
    target: int = Field(ge=0)
    exponents: tuple[int, ...]
    bound: int = Field(ge=0)

    @property
    def power_sum(self) -> int:
        return sum(1 << j for j in self.exponents)


class WitnessReport(BaseModel):
    """A constructed number and the machine-checked claims about it.

    `verified_divisibility` and `verified_bound` are None when the construction
    makes no divisibility or size claim.
    """

    model_config = ConfigDict(frozen=True)

    construction: ConstructionName
    parameters: dict[str, int]
    base: int = Field(default=2, ge=2)
    modulus: int = Field(ge=1)
    digit_sum_target: int = Field(ge=1)
    value: int = Field(ge=1)
    quotient: Optional[int] = None
    bound: Optional[int] = None
    verified_divisibility: Optional[bool] = None
    verified_digit_sum: bool
    verified_bound: Optional[bool] = None
    notes: str = ""


class C1ClosedForm(WitnessReport):
    """a_k = 2^(k+1) - 1 - 2^j_1 with j_1 = j_0 + s*t_k, for k in C_1."""

    k: int
    order: int
    j0: int
    s: int
    j1: int


class ClassClosedForm(WitnessReport):
    """a_k = 2^(k+m) - 1 - (largest C_m representation), m the class index."""

    k: int
    class_index: int
    witness: ExponentSet


class MersenneWitness(WitnessReport):
    """The multiple 2^(k+k^-) + 2^k - 2^(k-i) - 1 of k = 2^i - 1."""

    i: int
    k: int
    k_minus: int
    is_tight: bool
