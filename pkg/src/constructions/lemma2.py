"""Representing a residue x modulo an odd k >= 3 as a sum of exactly n_k
distinct powers 2^j with 0 <= j <= n_k + k - 2.

The constructive engine starts from y = x (when x has bit n_k - 1 set) or
y = x + k, then fills the zero runs of y. A one at position j+1 above a run
of zeros j, ..., low becomes 2^j + ... + 2^low + 2^(low + t_k), using
2^low = 2^(low + t_k) (mod k). When y has n_k + 1 binary places one zero
too many remains, so the lowest run keeps its lowest zero.
"""

from ..exceptions import InvalidArgumentError, VerificationError
from ..modarith.service import ceil_log2, multiplicative_order
from .enums import RepresentationEngine
from .schemas import ExponentSet
from .search import largest_representation


class WitnessVerificationError(VerificationError):
    """A construction produced a value that fails its own claims."""
    pass


def _zero_runs(y: int, top: int) -> list[tuple[int, int]]:
    """Maximal runs of zero bits below the top bit, as (high, low), highest first."""
    runs = []
    j = top - 1
    while j >= 0:
        if y >> j & 1:
            j -= 1
            continue
        high = j
        while j >= 0 and not y >> j & 1:
            j -= 1
        runs.append((high, j + 1))
    return runs


def constructive_exponents(k: int, x: int) -> list[int]:
    n = ceil_log2(k)
    t = multiplicative_order(2, k).order
    y = x if x >> (n - 1) else x + k
    top = y.bit_length() - 1
    exponents = {j for j in range(top + 1) if y >> j & 1}
    if len(exponents) == n:
        return sorted(exponents)

    runs = _zero_runs(y, top)
    keep_one_zero = top == n
    for index, (high, low) in enumerate(runs):
        if keep_one_zero and index == len(runs) - 1:
            if high == low:
                continue
            low += 1
        exponents.remove(high + 1)
        exponents.update(range(low, high + 1))
        exponents.add(low + t)
    return sorted(exponents)


def search_exponents(k: int, x: int) -> list[int]:
    n = ceil_log2(k)
    found = largest_representation(k, n, n + k - 2, x)
    if found is None:
        raise WitnessVerificationError(f"No representation of {x} modulo {k} found")
    return found


def verify_exponent_set(witness: ExponentSet, count: int | None = None) -> None:
    """Checks distinctness, ordering, the exponent window, the size and the
    residue of a representation.

    Raises:
        WitnessVerificationError: Any of the claims fails.
    """
    exps = witness.exponents
    if any(a >= b for a, b in zip(exps, exps[1:])):
        raise WitnessVerificationError(f"Exponents {exps} are not strictly increasing")
    if exps and (exps[0] < 0 or exps[-1] > witness.bound):
        raise WitnessVerificationError(f"Exponents {exps} leave the window [0, {witness.bound}]")
    if count is not None and len(exps) != count:
        raise WitnessVerificationError(f"Expected {count} exponents, got {len(exps)}")
    if witness.power_sum % witness.modulus != witness.target % witness.modulus:
        raise WitnessVerificationError(
            f"Sum of 2^j over {exps} is not {witness.target} modulo {witness.modulus}"
        )


def lemma2_representation(
    k: int, x: int, engine: RepresentationEngine = RepresentationEngine.CONSTRUCTIVE
) -> ExponentSet:
    """Writes x as a sum modulo k of exactly n_k distinct powers 2^j with
    exponents in [0, n_k + k - 2].

    Args:
        k: Odd modulus, k >= 3.
        x: Residue in [0, k).
        engine: Constructive gap filling (default) or the DP search.

    Raises:
        InvalidArgumentError: k is even or below 3, or x is out of range.
        WitnessVerificationError: The engine returned an invalid set.

    Returns:
        ExponentSet: The verified representation.
    """
    if k < 3 or k % 2 == 0:
        raise InvalidArgumentError(f"k must be odd and at least 3, got {k}")
    if not 0 <= x < k:
        raise InvalidArgumentError(f"x must lie in [0, {k}), got {x}")

    n = ceil_log2(k)
    if engine == RepresentationEngine.CONSTRUCTIVE:
        exponents = constructive_exponents(k, x)
    else:
        exponents = search_exponents(k, x)

    witness = ExponentSet(modulus=k, target=x, exponents=tuple(exponents), bound=n + k - 2)
    verify_exponent_set(witness, count=n)
    return witness
