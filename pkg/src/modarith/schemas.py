from pydantic import BaseModel, ConfigDict, Field


class OrderResult(BaseModel):
    """Multiplicative order t of q modulo k."""

    model_config = ConfigDict(frozen=True)

    modulus: int = Field(ge=1)
    base: int = Field(ge=2)
    order: int = Field(ge=1)


class CoprimeSplit(BaseModel):
    """k = a * b with gcd(b, q) = 1 and a | q^n (n least)."""

    model_config = ConfigDict(frozen=True)

    a: int = Field(ge=1)
    b: int = Field(ge=1)
    n: int = Field(ge=0)
