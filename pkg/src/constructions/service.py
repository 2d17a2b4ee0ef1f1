"""Explicit witness constructions.

Each construction returns a report whose claims (divisibility, digit sum,
size bound) are recomputed here; a report never leaves this module with a
failed claim.
"""

from typing import Optional

from ..classes.service import min_class_index
from ..exceptions import InvalidArgumentError
from ..modarith.service import (
    ceil_log,
    ceil_log2,
    coprime_split,
    is_mersenne_prime,
    mod_pow,
    multiplicative_order,
    power_residues,
    q_adic_valuation,
)
from ..natdigits.service import digit_sum, validate_base
from .enums import ConstructionName, RepresentationEngine
from .lemma2 import WitnessVerificationError, lemma2_representation
from .schemas import C1ClosedForm, ClassClosedForm, MersenneWitness, WitnessReport


class NotInClassError(InvalidArgumentError):
    """k is not in the class the closed form requires."""

    def __init__(self, k: int, residue: int):
        super().__init__(f"{k} is not in C_1: 2^(k+1) - 1 = {residue} (mod {k}) is no power of 2")
        self.k = k
        self.residue = residue


def certify(
    construction: ConstructionName,
    parameters: dict[str, int],
    value: int,
    modulus: int,
    digit_sum_target: int,
    base: int = 2,
    bound: Optional[int] = None,
    within_bound: Optional[bool] = None,
    quotient: Optional[int] = None,
    notes: str = "",
) -> WitnessReport:
    """Checks a constructed value and wraps it in a report.

    Raises:
        WitnessVerificationError: Any applicable claim fails.
    """
    divisible = value > 0 and value % modulus == 0
    digits_ok = digit_sum(value, base) == digit_sum_target
    if bound is not None and within_bound is None:
        within_bound = value <= bound
    if not (divisible and digits_ok and within_bound is not False):
        raise WitnessVerificationError(
            f"{construction.value} {parameters}: divisible={divisible}, "
            f"digit_sum={digits_ok}, bound={within_bound}"
        )
    return WitnessReport(
        construction=construction,
        parameters=parameters,
        base=base,
        modulus=modulus,
        digit_sum_target=digit_sum_target,
        value=value,
        quotient=quotient if quotient is not None else value // modulus,
        bound=bound,
        verified_divisibility=divisible,
        verified_digit_sum=digits_ok,
        verified_bound=within_bound,
        notes=notes,
    )


def _repunit_multiple(q: int, b: int) -> int:
    """K = 1 + q^t + ... + q^((b-1)t) with t the order of q mod b."""
    t = multiplicative_order(q, b).order
    return sum(q ** (i * t) for i in range(b))


def euler_construction(q: int, k: int) -> WitnessReport:
    """A multiple of k with base-q digit sum k made of b ones spaced by the
    order of q mod b, repeated a times at spacing u when k = a * b is not
    coprime to q.
    """
    validate_base(q)
    if k < 1:
        raise InvalidArgumentError(f"k must be positive, got {k}")
    split = coprime_split(k, q)
    K = _repunit_multiple(q, split.b)
    if split.a == 1:
        return certify(ConstructionName.EULER, {"q": q, "k": k}, K, k, k, base=q)

    u = max(split.n, ceil_log(K, q)) + 1
    value = sum(q ** (i * u) for i in range(1, split.a + 1)) * K
    return certify(
        ConstructionName.EULER,
        {"q": q, "k": k, "a": split.a, "b": split.b, "n": split.n, "u": u},
        value,
        k,
        k,
        base=q,
    )


def _odd_multiple(d: int, ell: int) -> int:
    """n with s(n*d) = ell*d and n <= (2^(ell*d + n_d) - 1) / d, for odd d >= 3."""
    n_d = ceil_log2(d)
    M = (1 << (ell * d + n_d)) - 1
    witness = lemma2_representation(d, M % d)
    return (M - witness.power_sum) // d


def thm33_multiple(k: int, ell: int) -> WitnessReport:
    """n with s(n*k) = ell*k and n <= (2^(ell*k + n_k) - 2^mu_2(k)) / k.

    Powers of two take n = 2^(ell*k) - 1; k = 2^m * d reduces to the odd part
    d with ell' = 2^m * ell.
    """
    if k < 1 or ell < 1:
        raise InvalidArgumentError(f"Need k, ell >= 1, got k={k}, ell={ell}")
    mu = q_adic_valuation(k, 2)
    d = k >> mu
    if d == 1:
        n = (1 << (ell * k)) - 1
    else:
        n = _odd_multiple(d, ell << mu)
    bound = (1 << (ell * k + ceil_log2(k))) - (1 << mu)
    return certify(
        ConstructionName.THM33,
        {"k": k, "ell": ell},
        n * k,
        k,
        ell * k,
        bound=bound,
        quotient=n,
    )


def c1_closed_form(k: int) -> C1ClosedForm:
    """a_k = 2^(k+1) - 1 - 2^j_1 for k in C_1, where 2^(k+1) - 1 = 2^j_0
    (mod k), 0 <= j_0 < t_k, and j_1 = j_0 + s*t_k is the largest such
    exponent not above k - 1.

    Raises:
        InvalidArgumentError: k is even or below 3.
        NotInClassError: k is not in C_1.
    """
    if k < 3 or k % 2 == 0:
        raise InvalidArgumentError(f"k must be odd and at least 3, got {k}")
    residues = power_residues(2, k)
    t = len(residues)
    target = (mod_pow(2, k + 1, k) - 1) % k
    try:
        j0 = residues.index(target)
    except ValueError:
        raise NotInClassError(k, target) from None

    s = (k - 1 - j0) // t
    j1 = j0 + s * t
    value = (1 << (k + 1)) - 1 - (1 << j1)
    report = certify(
        ConstructionName.C1,
        {"k": k},
        value,
        k,
        k,
        bound=(1 << (k + 1)) - 1,
        within_bound=(1 << k) - 1 < value < (1 << (k + 1)) - 1,
    )
    return C1ClosedForm(**report.model_dump(), k=k, order=t, j0=j0, s=s, j1=j1)


def class_closed_form(k: int) -> ClassClosedForm:
    """a_k for any odd k >= 3: with m its minimal class index, a_k is
    2^(k+m) - 1 minus the largest C_m representation.
    """
    record = min_class_index(k)
    m = record.m_min
    value = (1 << (k + m)) - 1 - record.witness.power_sum
    report = certify(
        ConstructionName.CM,
        {"k": k, "m": m},
        value,
        k,
        k,
        bound=(1 << (k + m)) - 1,
        within_bound=(1 << (k + m - 1)) - 1 < value < (1 << (k + m)) - 1,
    )
    return ClassClosedForm(**report.model_dump(), k=k, class_index=m, witness=record.witness)


def mersenne_value(i: int) -> MersenneWitness:
    """The multiple 2^(k+k^-) + 2^k - 2^(k-i) - 1 of k = 2^i - 1 with binary
    digit sum k, where k^- is the least positive residue of -k modulo i.
    It equals a_k when k is a Mersenne prime.
    """
    if i < 2:
        raise InvalidArgumentError(f"i must be at least 2, got {i}")
    k = (1 << i) - 1
    k_minus = (-k) % i
    value = (1 << (k + k_minus)) + (1 << k) - (1 << (k - i)) - 1
    tight = is_mersenne_prime(i)
    report = certify(
        ConstructionName.MERSENNE,
        {"i": i},
        value,
        k,
        k,
        notes="equals a_k" if tight else "upper bound for a_k",
    )
    return MersenneWitness(**report.model_dump(), i=i, k=k, k_minus=k_minus, is_tight=tight)


def prime_power_formula(q: int, m: int) -> WitnessReport:
    """a_(q^m) = q^m (2 q^alpha - 1) with alpha = (q^m - 1)/(q - 1) for q > 2,
    and a_(2^m) = 2^m (2^(2^m) - 1).
    """
    validate_base(q)
    if m < 0:
        raise InvalidArgumentError(f"m must be nonnegative, got {m}")
    k = q**m
    if q == 2:
        value = k * ((1 << k) - 1)
    else:
        alpha = (k - 1) // (q - 1)
        value = k * (2 * q**alpha - 1)
    return certify(ConstructionName.PRIME_POWER, {"q": q, "m": m}, value, k, k, base=q)


def lemma2_report(
    k: int, x: int, engine: RepresentationEngine = RepresentationEngine.CONSTRUCTIVE
) -> WitnessReport:
    """The representation of x modulo k rendered as a report whose value is
    the power sum itself.
    """
    witness = lemma2_representation(k, x, engine)
    value = witness.power_sum
    if value % k != x:
        raise WitnessVerificationError(f"Power sum {value} is not {x} modulo {k}")
    return WitnessReport(
        construction=ConstructionName.LEMMA2,
        parameters={"k": k, "x": x},
        modulus=k,
        digit_sum_target=len(witness.exponents),
        value=value,
        verified_digit_sum=digit_sum(value, 2) == len(witness.exponents),
        notes=(
            f"exponents {' '.join(map(str, witness.exponents))} in [0, {witness.bound}]; "
            f"residue {x} mod {k}"
        ),
    )
