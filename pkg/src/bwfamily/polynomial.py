"""Dense univariate polynomials over the rationals.

Coefficients are stored in ascending order as :class:`fractions.Fraction`
values; ``coeffs[i]`` is the coefficient of ``x**i``.  Instances are
immutable and always normalized (no trailing zeros), so equality is
structural.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


class _NegInfinity:
    """Degree of the zero polynomial.

    Orders below every integer but refuses arithmetic, so code that forgets
    the zero case fails loudly instead of computing with ``-1``.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NEG_INF"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("NEG_INF")

    def _no_arith(self, *_):
        raise TypeError("arithmetic on the degree of the zero polynomial")

    __add__ = __radd__ = __sub__ = __rsub__ = _no_arith
    __mul__ = __rmul__ = __truediv__ = __floordiv__ = _no_arith
    __index__ = __int__ = _no_arith


NEG_INF = _NegInfinity()


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c.strip())
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


class Polynomial:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_as_fraction(v) for v in coeffs]
        while c and not c[-1]:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def _raw(cls, coeffs: list) -> "Polynomial":
        # caller guarantees Fraction entries; only strips trailing zeros
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        p = object.__new__(cls)
        p._c = tuple(coeffs)
        return p

    @classmethod
    def constant(cls, c: Number) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c: Number = 1) -> "Polynomial":
        if n < 0:
            raise ValueError("negative exponent")
        return cls([0] * n + [c])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    # -- basic properties -------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else NEG_INF

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._c):
            return self._c[i]
        return Fraction(0)

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Polynomial([other])._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw([-v for v in self._c])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial()
            return Polynomial._raw([v * other for v in self._c])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if not u:
                continue
            for j, v in enumerate(b):
                if v:
                    out[i + j] += u * v
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            if not c:
                raise ZeroDivisionError("polynomial division by zero scalar")
            c = Fraction(c)
            return Polynomial._raw([v / c for v in self._c])
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        return poly_divrem(self, other)

    def __floordiv__(self, other):
        return poly_divrem(self, other)[0]

    def __mod__(self, other):
        return poly_divrem(self, other)[1]

    # -- evaluation and calculus -------------------------------------------

    def __call__(self, x):
        if isinstance(x, Polynomial):
            return self.compose(x)
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def compose(self, g: "Polynomial") -> "Polynomial":
        acc = Polynomial()
        for c in reversed(self._c):
            acc = acc * g + Polynomial([c])
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial._raw([i * self._c[i] for i in range(1, len(self._c))])

    def monic(self) -> "Polynomial":
        if not self._c:
            return self
        return self / self._c[-1]

    def denominator_lcm(self) -> int:
        return math.lcm(1, *(c.denominator for c in self._c))

    def primitive_integer_coeffs(self) -> list:
        """Integer coefficient list of the primitive associate with positive
        leading coefficient."""
        if not self._c:
            return []
        den = self.denominator_lcm()
        ints = [int(c * den) for c in self._c]
        g = math.gcd(*ints)
        if ints[-1] < 0:
            g = -g
        return [v // g for v in ints]

    # -- (de)serialization --------------------------------------------------

    def to_json(self) -> list:
        return [str(c) for c in self._c]

    @classmethod
    def from_json(cls, data: Sequence) -> "Polynomial":
        try:
            return cls(Fraction(str(v)) for v in data)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed polynomial coefficients {list(data)!r}") from exc

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Parse comma-separated ascending coefficients, e.g. ``"1,6,18,36,36"``."""
        parts = [p for p in text.replace(" ", "").split(",")]
        if not text.strip() or any(p == "" for p in parts):
            raise ValueError(f"malformed polynomial {text!r}")
        return cls.from_json(parts)

    def __repr__(self):
        return f"Polynomial({list(self.to_json())!r})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "x") -> str:
        if not self._c:
            return "0"
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a) if a.denominator == 1 else f"{a}"
            else:
                mono = var if i == 1 else f"{var}^{i}"
                if a == 1:
                    body = mono
                elif a.denominator == 1:
                    body = f"{a}{mono}"
                else:
                    body = f"({a}){mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_sub(a: Polynomial, b: Polynomial) -> Polynomial:
    return a - b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def poly_divrem(a: Polynomial, b: Polynomial) -> tuple:
    """Return ``(quotient, remainder)`` with ``a == q*b + rem`` and
    ``deg rem < deg b``."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    if len(rem) - 1 < db:
        return Polynomial(), a
    bc = b.coeffs
    lead = bc[-1]
    monic = lead == 1
    quot = [Fraction(0)] * (len(rem) - db)
    for i in range(len(rem) - 1 - db, -1, -1):
        c = rem[i + db]
        if not c:
            continue
        if not monic:
            c = c / lead
        quot[i] = c
        for j in range(db):
            if bc[j]:
                rem[i + j] -= c * bc[j]
        rem[i + db] = Fraction(0)
    return Polynomial._raw(quot), Polynomial._raw(rem[:db])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, poly_divrem(a, b)[1]
    return a.monic()


def poly_xgcd(a: Polynomial, b: Polynomial) -> tuple:
    """Extended Euclid: ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` monic."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    r0, r1 = a, b
    s0, s1 = Polynomial([1]), Polynomial()
    t0, t1 = Polynomial(), Polynomial([1])
    while not r1.is_zero():
        q, r = poly_divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.leading_coefficient
    return r0 / lc, s0 / lc, t0 / lc


def _divisors(n: int) -> list:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Polynomial:
    """The ``n``-th cyclotomic polynomial, obtained by dividing ``x^n - 1`` by
    ``Phi_d`` for every proper divisor ``d`` of ``n``."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    num = Polynomial.monomial(n) - 1
    for d in _divisors(n)[:-1]:
        num, rem = poly_divrem(num, cyclotomic(d))
        assert rem.is_zero()
    return num


def substitute_power(f: Polynomial, a: int) -> Polynomial:
    """Return ``f(x**a)``."""
    if a < 1:
        raise ValueError("substitution exponent must be positive")
    if a == 1 or f.is_constant():
        return f
    out = [Fraction(0)] * ((len(f.coeffs) - 1) * a + 1)
    for i, c in enumerate(f.coeffs):
        out[i * a] = c
    return Polynomial._raw(out)


def is_in_power_subring(f: Polynomial, a: int) -> bool:
    """True iff ``f`` lies in ``Q[x**a]``."""
    if a < 1:
        raise ValueError("a must be positive")
    return all(i % a == 0 for i, c in enumerate(f.coeffs) if c)


def high_terms(f: Polynomial, min_degree: int) -> Polynomial:
    """Terms of ``f`` with degree at least ``min_degree``."""
    c = list(f.coeffs)
    for i in range(min(min_degree, len(c))):
        c[i] = Fraction(0)
    return Polynomial._raw(c)


def rational_sqrt(c: Fraction):
    """Exact square root of a non-negative rational, or ``None``."""
    c = Fraction(c)
    if c < 0:
        return None
    n, d = math.isqrt(c.numerator), math.isqrt(c.denominator)
    if n * n == c.numerator and d * d == c.denominator:
        return Fraction(n, d)
    return None


def rational_root(c: Fraction, e: int):
    """Exact ``e``-th root of a rational, or ``None``."""
    c = Fraction(c)
    if e == 1:
        return c
    sign = 1
    if c < 0:
        if e % 2 == 0:
            return None
        sign, c = -1, -c

    def iroot(n):
        if n < 2:
            return n
        x = 1 << -(-n.bit_length() // e)
        while True:
            y = ((e - 1) * x + n // x ** (e - 1)) // e
            if y >= x:
                break
            x = y
        return x if x ** e == n else None

    n, d = iroot(c.numerator), iroot(c.denominator)
    if n is None or d is None:
        return None
    return sign * Fraction(n, d)


def poly_sqrt(f: Polynomial):
    """Exact square root ``s`` with ``s*s == f`` and positive leading
    coefficient, or ``None`` if ``f`` is not a square in ``Q[x]``."""
    if f.is_zero():
        return Polynomial()
    n = f.degree
    if n % 2:
        return None
    lead = rational_sqrt(f.leading_coefficient)
    if lead is None:
        return None
    m = n // 2
    s = [Fraction(0)] * (m + 1)
    s[m] = lead
    fc = f.coeffs
    # coefficient of x^(m+i) in s^2 determines s_i, from the top down
    for i in range(m - 1, -1, -1):
        acc = fc[m + i]
        for j in range(i + 1, m):
            acc -= s[j] * s[m + i - j]
        s[i] = acc / (2 * lead)
    root = Polynomial._raw(s)
    return root if root * root == f else None


def content_and_integrality(f: Polynomial) -> tuple:
    """Return ``(L, residues)`` where ``L`` is the lcm of the coefficient
    denominators and ``residues`` the sorted residues ``a mod L`` with
    ``f(a)`` an integer.  ``f(a) in Z`` depends only on ``a mod L``."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    L = f.denominator_lcm()
    residues = tuple(a for a in range(L) if f(Fraction(a)).denominator == 1)
    return L, residues


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result
