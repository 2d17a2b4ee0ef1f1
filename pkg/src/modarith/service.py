"""Modular arithmetic utilities.

Orders are found by a direct scan of powers; every modulus used by the
toolkit is small (k up to ~10^5), so no factorization is needed.
"""

from math import gcd

from ..exceptions import InvalidArgumentError
from .schemas import CoprimeSplit, OrderResult


class InvalidModulusError(InvalidArgumentError):
    """Modulus must be at least 1."""
    pass


class NotCoprimeError(InvalidArgumentError):
    """Base and modulus share a factor, so no multiplicative order exists."""
    pass


PRIME_TEST_LIMIT = 2**32
_MILLER_RABIN_BASES = (2, 7, 61)


def mod_pow(b: int, e: int, m: int) -> int:
    """Returns b^e mod m.

    Raises:
        InvalidModulusError: m < 1.
    """
    if m < 1:
        raise InvalidModulusError(f"Modulus must be positive, got {m}")
    if e < 0:
        raise InvalidArgumentError(f"Exponent must be nonnegative, got {e}")
    return pow(b, e, m)


def multiplicative_order(q: int, k: int) -> OrderResult:
    """Smallest t >= 1 with q^t = 1 (mod k); t = 1 for k = 1.

    Raises:
        NotCoprimeError: gcd(q, k) > 1.
    """
    if k < 1:
        raise InvalidModulusError(f"Modulus must be positive, got {k}")
    if k == 1:
        return OrderResult(modulus=k, base=q, order=1)
    if gcd(q, k) != 1:
        raise NotCoprimeError(f"gcd({q}, {k}) = {gcd(q, k)}; the order is undefined")
    x = q % k
    t = 1
    while x != 1:
        x = x * q % k
        t += 1
    return OrderResult(modulus=k, base=q, order=t)


def power_residues(q: int, k: int) -> list[int]:
    """One full period q^0, q^1, ..., q^(t-1) reduced modulo k, gcd(q, k) = 1."""
    t = multiplicative_order(q, k).order
    residues = [1 % k]
    for _ in range(t - 1):
        residues.append(residues[-1] * q % k)
    return residues


def ceil_log2(k: int) -> int:
    """n_k: the smallest positive integer with k <= 2^n_k (so n_1 = 1).

    Raises:
        InvalidArgumentError: k < 1.
    """
    if k < 1:
        raise InvalidArgumentError(f"n_k is defined for k >= 1, got {k}")
    if k == 1:
        return 1
    return (k - 1).bit_length()


def ceil_log(n: int, q: int) -> int:
    """Least e >= 0 with q^e >= n, computed exactly."""
    if n < 1 or q < 2:
        raise InvalidArgumentError(f"ceil_log needs n >= 1 and q >= 2, got n={n}, q={q}")
    e, p = 0, 1
    while p < n:
        p *= q
        e += 1
    return e


def q_adic_valuation(k: int, q: int) -> int:
    """Largest alpha with q^alpha | k."""
    if k < 1 or q < 2:
        raise InvalidArgumentError(f"Valuation needs k >= 1 and q >= 2, got k={k}, q={q}")
    alpha = 0
    while k % q == 0:
        k //= q
        alpha += 1
    return alpha


def coprime_split(k: int, q: int) -> CoprimeSplit:
    """Splits k = a * b with gcd(b, q) = 1 and every prime of a dividing q.

    The q-part a is peeled off by iterated gcds, so q is never factored.
    """
    if k < 1 or q < 2:
        raise InvalidArgumentError(f"Split needs k >= 1 and q >= 2, got k={k}, q={q}")
    a, b = 1, k
    g = gcd(b, q)
    while g > 1:
        b //= g
        a *= g
        g = gcd(b, q)
    n, p = 0, 1
    while p % a:
        p *= q
        n += 1
    return CoprimeSplit(a=a, b=b, n=n)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n < 2^32.

    Raises:
        InvalidArgumentError: n is at least 2^32.
    """
    if n >= PRIME_TEST_LIMIT:
        raise InvalidArgumentError(f"Primality is only decided below 2^32, got {n}")
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MILLER_RABIN_BASES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_mersenne_prime(i: int) -> bool:
    """Lucas-Lehmer test of 2^i - 1; exact for every i >= 2."""
    if i < 2:
        return False
    if i == 2:
        return True
    if not is_prime(i):
        return False
    m = (1 << i) - 1
    s = 4
    for _ in range(i - 2):
        s = (s * s - 2) % m
    return s == 0
