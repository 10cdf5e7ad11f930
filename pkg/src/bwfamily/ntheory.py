"""Integer helpers: Miller-Rabin, multiplicative order, squarefree parts."""

from __future__ import annotations

import math
import random
from typing import Optional

from sympy import factorint

# bases {2..17} are exact below 341_550_071_728_321
_DETERMINISTIC_BOUND = 341_550_071_728_321
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int, rounds: int = 64, rng: Optional[random.Random] = None) -> bool:
    """Miller-Rabin; deterministic below 3.4e14, otherwise ``rounds`` random
    bases drawn from ``rng`` (seeded for reproducibility)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _DETERMINISTIC_BOUND:
        return all(_strong_probable_prime(n, a, d, s) for a in _DETERMINISTIC_BASES)
    rng = rng or random.Random(n)
    return all(_strong_probable_prime(n, rng.randrange(2, n - 1), d, s) for _ in range(rounds))


class EmbeddingDegreeExceeded(ValueError):
    def __init__(self, order: int, bound: int):
        super().__init__(f"embedding degree {order} exceeds bound {bound}")
        self.order = order
        self.bound = bound


def multiplicative_order(a: int, m: int) -> int:
    """Order of ``a`` modulo a prime ``m`` by descending through the
    divisors of ``m - 1``."""
    a %= m
    if a == 0:
        raise ValueError(f"{a} is not a unit modulo {m}")
    order = m - 1
    for p in factorint(m - 1):
        while order % p == 0 and pow(a, order // p, m) == 1:
            order //= p
    return order


def embedding_degree(q: int, r: int, k_max: int) -> int:
    """Smallest ``k`` with ``r | q^k - 1``."""
    if q % r == 0:
        raise ValueError(f"r={r} divides q={q}")
    k = multiplicative_order(q, r)
    if k > k_max:
        raise EmbeddingDegreeExceeded(k, k_max)
    return k


def squarefree_decompose(n: int) -> tuple:
    """``(D, y)`` with ``n == D * y**2`` and ``D`` squarefree (``n > 0``)."""
    if n <= 0:
        raise ValueError("n must be positive")
    D, y = 1, 1
    for p, e in factorint(n).items():
        y *= p ** (e // 2)
        if e % 2:
            D *= p
    return D, y


def exact_isqrt(n: int) -> Optional[int]:
    if n < 0:
        return None
    s = math.isqrt(n)
    return s if s * s == n else None
