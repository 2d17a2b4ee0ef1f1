"""Membership in the classes C_m of odd integers.

k is in C_m when 2^(k+m) - 1 = 2^j_1 + ... + 2^j_m (mod k) for some
0 <= j_1 < ... < j_m <= m + k - 2. The classes are nested, and k lies in
C_m exactly when some multiple of k with binary digit sum k has bit length
k + m, so the least such m locates the bit length of a_k.
"""

import json
import logging
from functools import partial
from typing import Optional

from ..config import config
from ..constructions.lemma2 import verify_exponent_set
from ..constructions.schemas import ExponentSet
from ..constructions.search import is_reachable, largest_representation
from ..dependencies import worker_map
from ..exceptions import InvalidArgumentError, ResourceLimitError
from ..modarith.service import ceil_log2, mod_pow, power_residues
from .schemas import ClassMembership, ClassQuery, ClassRecord, DensityPoint


class DensityBudgetExceededError(ResourceLimitError):
    """The estimated cost of a density scan exceeds the configured budget."""
    pass


def _validate_odd(k: int) -> None:
    if k < 3 or k % 2 == 0:
        raise InvalidArgumentError(f"Classes C_m are defined for odd k >= 3, got {k}")


def class_query(k: int, m: int) -> ClassQuery:
    _validate_odd(k)
    if m < 1:
        raise InvalidArgumentError(f"Class index must be at least 1, got {m}")
    return ClassQuery(k=k, m=m, target=(mod_pow(2, k + m, k) - 1) % k, window_top=m + k - 2)


def is_in_class(k: int, m: int, with_witness: bool = True) -> ClassMembership:
    """Decides k in C_m with the generic bitset DP.

    Args:
        k: Odd integer, k >= 3.
        m: Class index, m >= 1.
        with_witness: Extract the largest representation when k is a member.

    Raises:
        InvalidArgumentError: k is even or below 3, or m < 1.
    """
    query = class_query(k, m)
    if not with_witness:
        member = is_reachable(k, m, query.window_top, query.target)
        return ClassMembership(k=k, m=m, member=member)

    exponents = largest_representation(k, m, query.window_top, query.target)
    if exponents is None:
        return ClassMembership(k=k, m=m, member=False)
    witness = ExponentSet(
        modulus=k, target=query.target, exponents=tuple(exponents), bound=query.window_top
    )
    verify_exponent_set(witness, count=m)
    return ClassMembership(k=k, m=m, member=True, witness=witness)


def fast_c1(k: int) -> bool:
    """k in C_1 iff 2^(k+1) - 1 is a power residue mod k. The window [0, k-1]
    holds a full period of 2 since t_k <= k - 1.
    """
    query = class_query(k, 1)
    return query.target in set(power_residues(2, k))


def fast_c2(k: int) -> bool:
    """k in C_2 iff 2^a + 2^b = 2^(k+2) - 1 (mod k) for residues a, b of the
    exponents modulo t_k. Equal residues need two exponents a and a + t_k,
    which fit the window [0, k] only when a <= k - t_k.
    """
    query = class_query(k, 2)
    residues = power_residues(2, k)
    t = len(residues)
    exponent_of = {r: j for j, r in enumerate(residues)}
    for a, ra in enumerate(residues):
        b = exponent_of.get((query.target - ra) % k)
        if b is None:
            continue
        if a != b or a <= k - t:
            return True
    return False


def min_class_index(k: int) -> ClassRecord:
    """Smallest m with k in C_m, probing upwards: fast tests for m <= 2, the
    DP beyond. Terminates by m = n_k since every odd k >= 3 is in C_{n_k}.
    """
    _validate_odd(k)
    memberships = 0
    m_min = None
    upper = max(ceil_log2(k), 2)
    for m in range(1, upper + 1):
        if m == 1:
            member = fast_c1(k)
        elif m == 2:
            member = fast_c2(k)
        else:
            member = is_in_class(k, m, with_witness=False).member
        if member:
            memberships |= 1 << (m - 1)
            m_min = m
            break
    if m_min is None:
        raise InvalidArgumentError(f"{k} is in no class up to n_k = {upper}")

    witness = is_in_class(k, m_min).witness
    assert witness is not None
    return ClassRecord(
        k=k, m_min=m_min, memberships=memberships, tested_up_to=m_min, witness=witness
    )


def shift_witness(witness: ExponentSet) -> ExponentSet:
    """Turns a C_m witness into a C_{m+1} witness: doubling the congruence
    and adding one maps j_i to j_i + 1 and adds exponent 0.
    """
    k = witness.modulus
    shifted = ExponentSet(
        modulus=k,
        target=(2 * witness.target + 1) % k,
        exponents=(0,) + tuple(j + 1 for j in witness.exponents),
        bound=witness.bound + 1,
    )
    verify_exponent_set(shifted, count=len(witness.exponents) + 1)
    return shifted


def estimate_scan_cost(x_max: int, m: int) -> int:
    """Cost units: residues touched by the fast tests, or 64-bit word
    operations of the DP.
    """
    odd = range(3, x_max + 1, 2)
    if m <= 2:
        return sum(odd)
    return sum((k + m) * m * (k // 64 + 1) for k in odd)


def _member(m: int, k: int) -> bool:
    if m == 1:
        return fast_c1(k)
    if m == 2:
        return fast_c2(k)
    return is_in_class(k, m, with_witness=False).member


def density_scan(
    x_max: int,
    m: int,
    stride: int = 1,
    threads: Optional[int] = None,
    budget: Optional[int] = None,
) -> list[DensityPoint]:
    """Running counts #C_m(x) over odd 3 <= x <= x_max with the ratio
    2 * #C_m(x) / x, emitted for every `stride`-th odd x and the last one.

    Raises:
        InvalidArgumentError: m or stride is below 1.
        DensityBudgetExceededError: The estimated cost exceeds the budget.
    """
    if m < 1 or stride < 1:
        raise InvalidArgumentError(f"Need m >= 1 and stride >= 1, got m={m}, stride={stride}")
    limit = config.density_budget if budget is None else budget
    cost = estimate_scan_cost(x_max, m)
    if cost > limit:
        raise DensityBudgetExceededError(
            f"Density scan to {x_max} for m={m} costs about {cost} units, budget is {limit}"
        )

    ks = list(range(3, x_max + 1, 2))
    members = worker_map(partial(_member, m), ks, threads=threads)

    points = []
    count = 0
    for index, (x, member) in enumerate(zip(ks, members)):
        count += member
        if index % stride == 0 or x == ks[-1]:
            points.append(DensityPoint(x=x, count=count, ratio=2 * count / x))
    logging.info(json.dumps({"message": "density scan", "x_max": x_max, "m": m, "count": count}))
    return points
