"""Independent oracles used to certify the solver."""

from typing import Optional

from ..natdigits.service import digit_sum


def brute_force_min(q: int, m: int, sigma: int, limit: int) -> Optional[int]:
    """Smallest multiple of m not above `limit` with digit sum sigma, by a
    linear scan over the multiples of m.
    """
    for n in range(m, limit + 1, m):
        if digit_sum(n, q) == sigma:
            return n
    return None


def quotient_congruence_candidates(q: int, k: int, limit: int) -> Optional[int]:
    """Searches c_k directly, skipping quotients ruled out by the digit-sum
    congruence: q - 1 divides a_k - s_q(a_k) = (c_k - 1) * k.

    Returns:
        Optional[int]: The least admissible c <= limit with s_q(k*c) = k.
    """
    for c in range(1, limit + 1):
        if ((c - 1) * k) % (q - 1):
            continue
        if digit_sum(k * c, q) == k:
            return c
    return None
