"""Exact primality below 2^64 and small number-theoretic searches.

The membership oracle for the primes language calls is_prime on the
integer value of a binary word, so it has to be fast and exact. Below
2^64 the Miller-Rabin test with fixed witness sets is a proven
deterministic test; the thresholds used here are the classical ones, so
small inputs get away with very few witness rounds.
"""

from __future__ import annotations

from typing import Optional

from .errors import StatelabError, UnsupportedError

TWO_64 = 1 << 64

# (bound, witnesses): the witness set decides primality exactly for all
# n < bound. The final set covers everything below 2^64.
_MR_LADDER = (
    (2047, (2,)),
    (1373653, (2, 3)),
    (25326001, (2, 3, 5)),
    (3215031751, (2, 3, 5, 7)),
    (4759123141, (2, 7, 61)),
    (2152302898747, (2, 3, 5, 7, 11)),
    (3474749660383, (2, 3, 5, 7, 11, 13)),
    (341550071728321, (2, 3, 5, 7, 11, 13, 17)),
    (TWO_64, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality for 0 <= n < 2^64."""
    if n < 0:
        raise StatelabError("primality is defined for naturals")
    if n >= TWO_64:
        raise UnsupportedError(f"{n} >= 2^64; witness set not exact there")
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for bound, witnesses in _MR_LADDER:
        if n < bound:
            break
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sieve(limit: int) -> bytearray:
    """Byte table t with t[k] = 1 iff k is prime, for 0 <= k <= limit."""
    table = bytearray([1]) * (limit + 1)
    for k in (0, 1):
        if k <= limit:
            table[k] = 0
    for p in range(2, int(limit**0.5) + 1):
        if table[p]:
            table[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return table


def find_isolated_prime(a: int, n_bits: int, limit: int) -> Optional[int]:
    """Smallest k in [1, limit] making p = a + 2^n * k an isolated prime.

    Isolated means p is the only prime in the closed interval
    [p - 2^n, p + 2^n]. a must be odd and below 2^n. Returns None when
    the search range is exhausted (limit = 0 searches nothing).
    """
    if a < 1 or a % 2 == 0:
        raise StatelabError(f"a = {a} is not a positive odd residue")
    step = 1 << n_bits
    if a >= step:
        raise StatelabError(f"a = {a} is not below 2^{n_bits}")
    for k in range(1, limit + 1):
        p = a + step * k
        if is_prime(p) and _isolated(p, step):
            return k
    return None


def _isolated(p: int, radius: int) -> bool:
    for q in range(max(p - radius, 2), p + radius + 1):
        if q != p and is_prime(q):
            return False
    return True
