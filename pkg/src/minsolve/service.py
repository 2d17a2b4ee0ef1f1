"""Exact minimal solver.

A number is built most-significant digit first; appending digit d moves the
state (r, s) to ((r*q + d) mod m, s + d). A reverse breadth-first search from
the goal (0, sigma) gives, for every state, the fewest digits still needed.
The shortest solution is the numerically smallest one once its digits are
picked greedily: at every position the smallest digit whose successor is
exactly one step closer to the goal.

The distance table is a numpy int32 array indexed [sum, residue]; each BFS
layer is computed for all states at once with one fancy-index per digit.
"""

import json
import logging
from typing import Optional

import numpy as np

from ..config import config
from ..exceptions import InvalidArgumentError, ResourceLimitError, VerificationError
from ..natdigits.service import digit_sum, from_digits, validate_base
from .schemas import SearchState, SolverResult


class StateLimitExceededError(ResourceLimitError):
    """The state table would exceed the configured cap."""
    pass


class SolverConsistencyError(VerificationError):
    """A solver result failed re-verification."""
    pass


UNREACHED = -1


def _successor_residues(q: int, m: int, top_digit: int) -> list[np.ndarray]:
    shifted = np.arange(m, dtype=np.int64) * q % m
    return [(shifted + d) % m for d in range(top_digit + 1)]


def _distance_table(q: int, m: int, sigma: int) -> tuple[np.ndarray, int]:
    """Runs the reverse BFS until the first layer containing a valid leading
    digit state (d mod m, d), d >= 1.

    Returns:
        tuple[np.ndarray, int]: The distance table and the solution length,
        or length 0 when no solution exists.
    """
    top_digit = min(q - 1, sigma)
    successors = _successor_residues(q, m, top_digit)

    dist = np.full((sigma + 1, m), UNREACHED, dtype=np.int32)
    frontier = np.zeros((sigma + 1, m), dtype=bool)
    dist[sigma, 0] = 0
    frontier[sigma, 0] = True

    first_digits = np.arange(1, top_digit + 1)
    first_residues = first_digits % m

    layer = 0
    while True:
        if (dist[first_digits, first_residues] != UNREACHED).any():
            return dist, layer + 1
        # reached[s, r] holds when some digit d leads from (r, s) into the frontier.
        reached = np.zeros_like(frontier)
        for d, successor in enumerate(successors):
            reached[: sigma + 1 - d] |= frontier[d:, successor]
        reached &= dist == UNREACHED
        if not reached.any():
            return dist, 0
        layer += 1
        dist[reached] = layer
        frontier = reached


def _reconstruct(dist: np.ndarray, q: int, m: int, sigma: int, length: int) -> list[int]:
    top_digit = min(q - 1, sigma)
    first = next(d for d in range(1, top_digit + 1) if dist[d, d % m] == length - 1)
    digits = [first]
    state = SearchState(residue=first % m, sum=first)
    for remaining in range(length - 1, 0, -1):
        r, s = state.residue, state.sum
        for d in range(min(q - 1, sigma - s) + 1):
            nr = (r * q + d) % m
            if dist[s + d, nr] == remaining - 1:
                break
        else:
            raise SolverConsistencyError(
                f"No successor of {state} is {remaining - 1} steps from the goal"
            )
        digits.append(d)
        state = SearchState(residue=nr, sum=s + d)
    return digits


def verify_result(result: SolverResult) -> None:
    """Recomputes both defining conditions of a found result.

    Raises:
        SolverConsistencyError: Divisibility, digit sum or quotient is wrong.
    """
    if not result.found or result.value is None:
        return
    value = result.value
    if value <= 0 or value % result.modulus:
        raise SolverConsistencyError(f"{value} is not a positive multiple of {result.modulus}")
    if digit_sum(value, result.base) != result.sigma:
        raise SolverConsistencyError(
            f"s_{result.base}({value}) = {digit_sum(value, result.base)}, expected {result.sigma}"
        )
    if result.quotient is None or result.quotient * result.modulus != value:
        raise SolverConsistencyError(f"Quotient {result.quotient} does not reproduce {value}")


def min_multiple_with_digit_sum(
    q: int,
    m: int,
    sigma: int,
    state_cap: Optional[int] = None,
    check: Optional[bool] = None,
) -> SolverResult:
    """Finds the smallest positive n with n = 0 (mod m) and s_q(n) = sigma.

    Args:
        q: The base.
        m: The modulus, m >= 1.
        sigma: The target digit sum, sigma >= 1.
        state_cap: Maximum table size; defaults to `config.state_cap`.
        check: Re-verify the result; defaults to `config.check_results`.

    Raises:
        InvalidArgumentError: m or sigma is below 1.
        StateLimitExceededError: m * (sigma + 1) exceeds the cap.

    Returns:
        SolverResult: The minimal solution, or `found=False` when the pair is
        unrealizable (e.g. base 10, m = 3, sigma = 1).
    """
    validate_base(q)
    if m < 1 or sigma < 1:
        raise InvalidArgumentError(f"Need m >= 1 and sigma >= 1, got m={m}, sigma={sigma}")
    cap = config.state_cap if state_cap is None else state_cap
    states = m * (sigma + 1)
    if states > cap:
        raise StateLimitExceededError(
            f"{states} states for q={q}, m={m}, sigma={sigma} exceed the cap of {cap}"
        )

    dist, length = _distance_table(q, m, sigma)
    if not length:
        logging.debug(json.dumps({"message": "unrealizable", "q": q, "m": m, "sigma": sigma}))
        return SolverResult(base=q, modulus=m, sigma=sigma, found=False, states=states)

    digits = _reconstruct(dist, q, m, sigma, length)
    value = from_digits(digits, q)
    result = SolverResult(
        base=q,
        modulus=m,
        sigma=sigma,
        found=True,
        value=value,
        quotient=value // m,
        digits=tuple(digits),
        digit_count=len(digits),
        nonzero_digits=sum(1 for d in digits if d),
        states=states,
    )
    logging.debug(
        json.dumps({"message": "solved", "q": q, "m": m, "sigma": sigma, "length": length, "states": states})
    )

    if config.check_results if check is None else check:
        verify_result(result)
    return result


def minimal_niven(q: int, k: int, state_cap: Optional[int] = None) -> SolverResult:
    """a_k: the smallest positive multiple of k whose base-q digit sum is k.
    The result's quotient is c_k = a_k / k.
    """
    result = min_multiple_with_digit_sum(q, k, k, state_cap=state_cap)
    if not result.found:
        # Existence holds for every k and q; reaching this is a solver bug.
        raise SolverConsistencyError(f"No minimal Niven number found for q={q}, k={k}")
    return result
