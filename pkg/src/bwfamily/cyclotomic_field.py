"""Arithmetic in Q[x]/(Phi_l(x)), quadratic characters and Gauss sums.

``x`` maps to a fixed primitive ``l``-th root of unity ``zeta_l``; every
other root of unity used here is a power of it (``zeta_p = zeta_l**(l/p)``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from sympy import factorint, isprime

from .polynomial import Polynomial, cyclotomic, poly_divrem, poly_xgcd


class CycloElement:
    """Residue class of a rational polynomial modulo ``Phi_l``."""

    __slots__ = ("l", "rep")

    def __init__(self, l: int, rep):
        if l < 1:
            raise ValueError("modulus index must be positive")
        if not isinstance(rep, Polynomial):
            rep = Polynomial([rep])
        self.l = l
        self.rep = _reduce(rep, l)

    @classmethod
    def zeta(cls, l: int, power: int = 1) -> "CycloElement":
        return cls(l, _zeta_power(l, power % l))

    @classmethod
    def one(cls, l: int) -> "CycloElement":
        return cls(l, Polynomial([1]))

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElement(self.l, Polynomial([other]))
        if not isinstance(other, CycloElement):
            return NotImplemented
        if other.l != self.l:
            raise ValueError(f"mismatched cyclotomic fields: l={self.l} vs l={other.l}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CycloElement(self.l, self.rep + other.rep)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CycloElement(self.l, self.rep - other.rep)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return CycloElement(self.l, -self.rep)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElement(self.l, self.rep * other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CycloElement(self.l, self.rep * other.rep)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElement(self.l, self.rep / other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CycloElement.one(self.l)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self) -> "CycloElement":
        return element_inverse(self)

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.rep == Polynomial([other])
        if isinstance(other, CycloElement):
            return self.l == other.l and self.rep == other.rep
        return NotImplemented

    def __hash__(self):
        return hash((self.l, self.rep))

    def __repr__(self):
        return f"CycloElement(l={self.l}, rep={self.rep})"

    def to_json(self) -> dict:
        return {"l": self.l, "rep": self.rep.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "CycloElement":
        return cls(int(data["l"]), Polynomial.from_json(data["rep"]))


@lru_cache(maxsize=4096)
def _zeta_power(l: int, n: int) -> Polynomial:
    phi = cyclotomic(l)
    if n < phi.degree:
        return Polynomial.monomial(n)
    return poly_divrem(Polynomial.monomial(n), phi)[1]


def _reduce(p: Polynomial, l: int) -> Polynomial:
    phi = cyclotomic(l)
    if p.is_zero() or p.degree < phi.degree:
        return p
    return poly_divrem(p, phi)[1]


def element_arith(u: CycloElement, v: CycloElement, op: str) -> CycloElement:
    if op == "add":
        return u + v
    if op == "sub":
        return u - v
    if op == "mul":
        return u * v
    raise ValueError(f"unknown operation {op!r}")


def element_inverse(u: CycloElement) -> CycloElement:
    if u.is_zero():
        raise ZeroDivisionError("zero has no inverse")
    g, s, _ = poly_xgcd(u.rep, cyclotomic(u.l))
    if not g.is_constant():
        raise ArithmeticError(f"non-unit gcd {g} with Phi_{u.l}")
    return CycloElement(u.l, s)


# -- characters and Gauss sums -------------------------------------------


def _require_odd_prime(p: int):
    if p < 3 or not isprime(p):
        raise ValueError(f"{p} is not an odd prime")


def legendre(a: int, p: int) -> int:
    """Quadratic residue symbol (a/p) by Euler's criterion."""
    _require_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@dataclass(frozen=True)
class CharacterTable:
    """The quadratic character modulo an odd prime."""

    p: int
    values: dict = field(repr=False)

    @classmethod
    def build(cls, p: int) -> "CharacterTable":
        return cls(p, {a: legendre(a, p) for a in range(p)})

    def __call__(self, a: int) -> int:
        return self.values[a % self.p]


def gauss_sum(p: int, l: int) -> CycloElement:
    """``sum_a chi_p(a) zeta_p^a`` inside Q(mu_l); squares to ``(-1)^((p-1)/2) p``."""
    _require_odd_prime(p)
    if l % p:
        raise ValueError(f"zeta_{p} is not in Q(mu_{l}): {p} does not divide {l}")
    step = l // p
    coeffs = [0] * (step * (p - 1) + 1)
    for a in range(1, p):
        coeffs[a * step] = legendre(a, p)
    return CycloElement(l, Polynomial(coeffs))


def is_squarefree(n: int) -> bool:
    return n >= 1 and all(e == 1 for e in factorint(n).values())


def sqrt_minus_D_exists(D: int, l: int) -> bool:
    """Whether ``sqrt(-D)`` lies in Q(mu_l) for squarefree ``D``."""
    if not is_squarefree(D):
        raise ValueError(f"D={D} is not a squarefree positive integer")
    if l < 1:
        raise ValueError("l must be positive")
    if l % 4 == 0:
        return (l // 4) % D == 0
    return l % D == 0 and D % 4 == 3


def admissible_discriminants(l: int) -> list:
    """All squarefree ``D`` with ``sqrt(-D)`` in Q(mu_l), ascending."""
    return [D for D in range(1, l + 1) if is_squarefree(D) and sqrt_minus_D_exists(D, l)]


@lru_cache(maxsize=1024)
def sqrt_minus_D(D: int, l: int) -> CycloElement:
    """An element ``s`` of Q(mu_l) with ``s*s == -D``.

    Built as a product of Gauss sums for the odd primes of ``D``, times
    ``zeta_8 + zeta_8^-1`` when ``D`` is even, then rotated by ``zeta_4`` if
    the square came out as ``+D``.  The sign of ``s`` is not canonical.
    """
    if not sqrt_minus_D_exists(D, l):
        raise ValueError(f"sqrt(-{D}) is not in Q(mu_{l})")
    s = CycloElement.one(l)
    for p in sorted(factorint(D)):
        if p == 2:
            s = s * (CycloElement.zeta(l, l // 8) + CycloElement.zeta(l, -(l // 8)))
        else:
            s = s * gauss_sum(p, l)
    sq = s * s
    if sq == D:
        if l % 4:
            raise ArithmeticError(f"square is +{D} but zeta_4 is not in Q(mu_{l})")
        s = s * CycloElement.zeta(l, l // 4)
        sq = s * s
    if sq != -D:
        raise ArithmeticError(f"sqrt(-{D}) construction failed in Q(mu_{l})")
    return s


def primitive_root_image(l: int, k: int, g: int) -> CycloElement:
    """``zeta_l^((l/k) g)``, a primitive ``k``-th root of unity."""
    if k < 1 or l % k:
        raise ValueError(f"k={k} does not divide l={l}")
    if math.gcd(g, k) != 1:
        raise ValueError(f"gcd(g={g}, k={k}) != 1")
    return CycloElement.zeta(l, (l // k) * g)
