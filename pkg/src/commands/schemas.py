from pathlib import Path
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

from ..constructions.enums import ConstructionName, RepresentationEngine
from ..natdigits.service import render_natural
from ..ranges import KRange
from .enums import Command, OutputFormat


# Flags each witness construction needs, besides the optional ones.
WITNESS_PARAMETERS: dict[ConstructionName, tuple[str, ...]] = {
    ConstructionName.EULER: ("k",),
    ConstructionName.THM33: ("k",),
    ConstructionName.C1: ("k",),
    ConstructionName.CM: ("k",),
    ConstructionName.MERSENNE: ("i",),
    ConstructionName.PRIME_POWER: ("m",),
    ConstructionName.LEMMA2: ("k", "x"),
}


class RunConfig(BaseModel):
    """Options of one command-line invocation, with defaults from `NivenConfig`."""

    model_config = ConfigDict(frozen=True)

    command: Command
    base: int = Field(default=2, ge=2, le=2**16)
    k_range: Optional[KRange] = None
    k: Optional[int] = Field(default=None, ge=1)
    k_max: Optional[int] = Field(default=None, ge=1)
    m: Optional[int] = Field(default=None, ge=0)
    x_max: Optional[int] = Field(default=None, ge=1)
    stride: int = Field(default=1, ge=1)
    output_format: OutputFormat = OutputFormat.CSV
    out: Optional[Path] = None
    cache_dir: Optional[Path] = None
    state_cap: int = Field(ge=1)
    threads: int = Field(ge=1)
    recheck: bool = False

    construction: Optional[ConstructionName] = None
    i: Optional[int] = Field(default=None, ge=2)
    x: Optional[int] = Field(default=None, ge=0)
    ell: int = Field(default=1, ge=1)
    engine: RepresentationEngine = RepresentationEngine.CONSTRUCTIVE
    hexadecimal: bool = False

    @model_validator(mode="after")
    def validate_flags(self):
        if self.command == Command.COMPUTE and self.k_range is None:
            raise ValueError("compute needs --k START..STOP")
        if self.command in (Command.VERIFY, Command.FIGURE1) and self.k_max is None:
            raise ValueError(f"{self.command.value} needs --max")
        if self.command == Command.CLASSES:
            if (self.k is None) == (self.x_max is None):
                raise ValueError("classes needs exactly one of --k and --scan")
            if self.x_max is not None and (self.m is None or self.m < 1):
                raise ValueError("classes --scan needs --m >= 1")
            if self.k is not None and self.m is not None:
                raise ValueError("--m applies to --scan only")
        tables = (Command.COMPUTE, Command.CLASSES, Command.FIGURE1)
        if self.command in tables and self.output_format == OutputFormat.TEXT:
            raise ValueError(f"{self.command.value} writes csv or json")
        if self.command == Command.WITNESS and self.output_format == OutputFormat.CSV:
            raise ValueError("witness writes text or json")
        if self.recheck and self.cache_dir is None:
            raise ValueError("--recheck needs the result cache")
        if self.command == Command.WITNESS:
            if self.construction is None:
                raise ValueError("witness needs a construction name")
            missing = [
                name
                for name in WITNESS_PARAMETERS[self.construction]
                if getattr(self, name) is None
            ]
            if missing:
                flags = ", ".join(f"--{name}" for name in missing)
                raise ValueError(f"witness {self.construction.value} needs {flags}")
        return self


class CacheEntry(BaseModel):
    """One stored a_k. `a_k` and `c_k` are decimal strings, `length` is the
    number of base-q digits of a_k.
    """

    model_config = ConfigDict(frozen=True)

    q: int
    k: int
    a_k: str
    c_k: str
    length: int

    def row(self) -> list[str]:
        return [str(self.q), str(self.k), self.a_k, self.c_k, str(self.length)]


class ComputeRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int
    a_k: int
    c_k: int
    digit_len: int

    @field_serializer("a_k", "c_k", when_used="json")
    def serialize_big(self, v: int) -> str:
        return render_natural(v)


class Figure1Row(BaseModel):
    """Natural logs of c_k against its lower bound, base 2."""

    model_config = ConfigDict(frozen=True)

    k: int
    ln_c_k: float
    k_ln_2: float
    ln_lower_bound: float


class ClassRow(BaseModel):
    """Minimal class index of k and the largest representation at that index."""

    model_config = ConfigDict(frozen=True)

    k: int
    m_min: int
    target: int
    exponents: str
    bit_length_a_k: int


class VerificationCheck(BaseModel):
    name: str
    passed: bool
    checked: int = 0
    failures: list[int] = Field(default_factory=list, description="Offending k values")
    detail: str = ""

    @field_validator("failures", mode="before")
    def split_failures(cls, v):
        if isinstance(v, str):
            return [int(item) for item in v.split()]
        return v


class VerificationReport(BaseModel):
    message: str
    base: int
    k_max: int
    checks: list[VerificationCheck]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


class WitnessOutput(BaseModel):
    """A witness report flattened for printing."""

    construction: str
    parameters: dict[str, int]
    base: int
    modulus: int
    digit_sum_target: int
    value: str
    binary: Optional[str] = None
    quotient: Optional[str] = None
    bound: Optional[str] = None
    verified_divisibility: Optional[bool] = None
    verified_digit_sum: bool
    verified_bound: Optional[bool] = None
    extra: dict[str, Any] = Field(default_factory=dict)
    notes: str = ""
