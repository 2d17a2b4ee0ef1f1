"""Digit arithmetic over exact natural numbers.

Python integers already give an exact, canonical representation of the
naturals; this module adds the base-q view of them plus the few guarded
operations (partial subtraction, textual rendering) the rest of the toolkit
relies on.
"""

import re
from collections.abc import Sequence

from ..exceptions import InvalidArgumentError
from .schemas import MAX_BASE, MIN_BASE, DigitString


class InvalidBaseError(InvalidArgumentError):
    """Base outside [2, 2^16]."""
    pass


class InvalidDigitError(InvalidArgumentError):
    """Digit outside [0, q-1]."""
    pass


class NegativeResultError(InvalidArgumentError):
    """Subtraction would leave the naturals."""
    pass


def validate_base(q: int) -> int:
    if not MIN_BASE <= q <= MAX_BASE:
        raise InvalidBaseError(f"Base must lie in [{MIN_BASE}, {MAX_BASE}], got {q}")
    return q


def _validate_natural(n: int) -> None:
    if n < 0:
        raise InvalidArgumentError(f"Expected a natural number, got {n}")


# Below this size str() stays within the interpreter's int-to-str digit limit.
_DECIMAL_STR_BITS = 13_000
_CHUNK_BITS = 60


def _power_of_two_exponent(q: int) -> int:
    """Returns e with q = 2^e, or 0 when q is not a power of two."""
    return q.bit_length() - 1 if q & (q - 1) == 0 else 0


def _chunk(q: int) -> tuple[int, int]:
    """Largest power q^e below 2^60, as (q^e, e)."""
    e, p = 1, q
    while p * q < 1 << _CHUNK_BITS:
        p *= q
        e += 1
    return p, e


def _binary_groups(n: int, shift: int) -> list[int]:
    """Base-2^shift digits of n > 0, most-significant first."""
    bits = format(n, "b")
    bits = bits.zfill(-(-len(bits) // shift) * shift)
    return [int(bits[i : i + shift], 2) for i in range(0, len(bits), shift)]


def _low_digits(n: int, q: int, width: int) -> list[int]:
    """Exactly `width` base-q digits of n < q^width, least-significant first."""
    out = []
    for _ in range(width):
        n, d = divmod(n, q)
        out.append(d)
    return out


def _generic_digits(n: int, q: int) -> list[int]:
    """Base-q digits of n > 0, most-significant first, peeling one word-sized
    chunk q^e per big-integer division.
    """
    chunk, width = _chunk(q)
    digits: list[int] = []
    while n >= chunk:
        n, low = divmod(n, chunk)
        digits.extend(_low_digits(low, q, width))
    while n:
        n, d = divmod(n, q)
        digits.append(d)
    digits.reverse()
    return digits


def _digits(n: int, q: int) -> list[int]:
    if n == 0:
        return [0]
    shift = _power_of_two_exponent(q)
    if shift:
        return _binary_groups(n, shift)
    if q == 10 and n.bit_length() < _DECIMAL_STR_BITS:
        return [int(c) for c in str(n)]
    return _generic_digits(n, q)


def digit_sum(n: int, q: int) -> int:
    """Returns s_q(n), the sum of the base-q digits of n.

    Args:
        n: A natural number.
        q: The base, 2 <= q <= 2^16.

    Raises:
        InvalidBaseError: The base is out of range.

    Returns:
        int: The digit sum; zero for n = 0.
    """
    validate_base(q)
    _validate_natural(n)
    if q == 2:
        return n.bit_count()
    return sum(_digits(n, q))


def to_digits(n: int, q: int) -> DigitString:
    """Encodes n in base q, most-significant digit first.

    Raises:
        InvalidBaseError: The base is out of range.
    """
    validate_base(q)
    _validate_natural(n)
    return DigitString(base=q, digits=tuple(_digits(n, q)))


def from_digits(digits: Sequence[int] | DigitString, q: int | None = None) -> int:
    """Decodes a most-significant-first digit sequence. Leading zeros are
    accepted here even though `DigitString` never produces them.

    Raises:
        InvalidBaseError: The base is out of range.
        InvalidDigitError: A digit is outside [0, q-1].
    """
    if isinstance(digits, DigitString):
        q, digits = digits.base, digits.digits
    if q is None:
        raise InvalidBaseError("A base is required for raw digit sequences")
    validate_base(q)
    value = 0
    for position, d in enumerate(digits):
        if not 0 <= d < q:
            raise InvalidDigitError(f"Digit {d} at position {position} is not a base-{q} digit")
        value = value * q + d
    return value


def bit_length(n: int) -> int:
    """Number of binary digits of n; zero for n = 0."""
    _validate_natural(n)
    return n.bit_length()


def natural_sub(a: int, b: int) -> int:
    """Returns a - b, refusing to produce a negative value.

    Raises:
        NegativeResultError: b > a.
    """
    if b > a:
        raise NegativeResultError(f"{a} - {b} is negative")
    return a - b


def is_niven(n: int, q: int) -> bool:
    """True when n >= 1 is divisible by its base-q digit sum."""
    return n >= 1 and n % digit_sum(n, q) == 0


def render_natural(n: int, hexadecimal: bool = False) -> str:
    """Decimal text, or lowercase hexadecimal without prefix."""
    _validate_natural(n)
    if hexadecimal:
        return format(n, "x")
    if n.bit_length() < _DECIMAL_STR_BITS:
        return str(n)
    return "".join(map(str, _generic_digits(n, 10)))


_DECIMAL_PARSE_BLOCK = 1000
_DECIMAL_DIGITS = re.compile(r"[0-9]+")
_HEX_DIGITS = re.compile(r"[0-9a-fA-F]+")


def parse_natural(text: str) -> int:
    """Parses decimal text, or hexadecimal marked with a `0x` prefix.

    Raises:
        InvalidArgumentError: The text is not a natural number.
    """
    stripped = text.strip()
    if stripped.lower().startswith("0x"):
        digits = stripped[2:]
        if not _HEX_DIGITS.fullmatch(digits):
            raise InvalidArgumentError(f"Not a natural number: {text!r}")
        return int(digits, 16)
    if not _DECIMAL_DIGITS.fullmatch(stripped):
        raise InvalidArgumentError(f"Not a natural number: {text!r}")
    value = 0
    for i in range(0, len(stripped), _DECIMAL_PARSE_BLOCK):
        block = stripped[i : i + _DECIMAL_PARSE_BLOCK]
        value = value * 10 ** len(block) + int(block, 10)
    return value
