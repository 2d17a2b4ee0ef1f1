"""Subset-sum search over distinct powers of two modulo k.

reach[c] is a bitset over residues: bit r is set when r is the residue of a
sum of exactly c distinct powers 2^j drawn from the exponents seen so far.
Taking exponent j rotates reach[c-1] left by 2^j mod k inside a k-bit word.
"""

from typing import Optional


def _rotate(bits: int, shift: int, k: int, mask: int) -> int:
    return ((bits << shift) | (bits >> (k - shift))) & mask


def _step(reach: list[int], p: int, k: int, mask: int) -> list[int]:
    nxt = reach.copy()
    for c in range(len(reach) - 1, 0, -1):
        if reach[c - 1]:
            nxt[c] |= _rotate(reach[c - 1], p, k, mask)
    return nxt


def is_reachable(k: int, count: int, top: int, target: int) -> bool:
    """Decides whether `target` is a sum of exactly `count` distinct powers
    2^j, 0 <= j <= top, modulo k. Keeps only the current layer.
    """
    mask = (1 << k) - 1
    reach = [1] + [0] * count
    p = 1 % k
    for _ in range(top + 1):
        reach = _step(reach, p, k, mask)
        p = p * 2 % k
    return bool(reach[count] >> target & 1)


def largest_representation(k: int, count: int, top: int, target: int) -> Optional[list[int]]:
    """Returns the lexicographically largest exponent set (hence the largest
    power sum) of size `count` in [0, top] hitting `target` modulo k, or
    None when there is none.
    """
    mask = (1 << k) - 1
    layers = [[1] + [0] * count]
    powers = []
    p = 1 % k
    for _ in range(top + 1):
        powers.append(p)
        layers.append(_step(layers[-1], p, k, mask))
        p = p * 2 % k

    if not layers[top + 1][count] >> target & 1:
        return None

    exponents = []
    c, r = count, target
    for j in range(top, -1, -1):
        if c == 0:
            break
        previous = (r - powers[j]) % k
        if layers[j][c - 1] >> previous & 1:
            exponents.append(j)
            c -= 1
            r = previous
    exponents.reverse()
    return exponents
