"""Irreducibility over Q and perfect-power detection.

The irreducibility test first looks for a cheap certificate modulo small
primes and only then falls back to a full factorization over Z (sympy's
Zassenhaus implementation).
"""

from __future__ import annotations

import math

import sympy
from sympy import primerange

from .polynomial import Polynomial, poly_divrem, poly_gcd, rational_root

_CERT_PRIMES = tuple(primerange(3, 400))
_X = sympy.Symbol("x")


# -- dense polynomials over F_p as ascending int lists ---------------------


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv = pow(m[-1], -1, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv % p
        if c:
            off = i - dm
            for j in range(dm + 1):
                a[off + j] = (a[off + j] - c * m[j]) % p
    return _trim(a[:dm])


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return _trim([v % p for v in out])


def _fp_sub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _fp_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _fp_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [v * inv % p for v in a]
    return a


def _fp_divexact(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        c = a[i + db] * inv % p
        q[i] = c
        if c:
            for j in range(db + 1):
                a[i + j] = (a[i + j] - c * b[j]) % p
    return _trim(q)


def _fp_powmod(base, e, m, p):
    result = [1]
    base = _fp_mod(base, m, p)
    while e:
        if e & 1:
            result = _fp_mod(_fp_mul(result, base, p), m, p)
        e >>= 1
        if e:
            base = _fp_mod(_fp_mul(base, base, p), m, p)
    return result


def _fp_derivative(a, p):
    return _trim([i * a[i] % p for i in range(1, len(a))])


def factor_degrees_mod_p(coeffs, p):
    """Degrees of the irreducible factors of a squarefree polynomial over
    F_p (distinct-degree factorization).  ``coeffs`` are integers, ascending,
    with leading coefficient prime to ``p``."""
    f = _trim([c % p for c in coeffs])
    degrees = []
    h = [0, 1]
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _fp_powmod(h, p, f, p)
        g = _fp_gcd(f, _fp_sub(h, [0, 1], p), p)
        if len(g) > 1:
            degrees.extend([d] * ((len(g) - 1) // d))
            f = _fp_divexact(f, g, p)
            h = _fp_mod(h, f, p)
    if len(f) > 1:
        degrees.append(len(f) - 1)
    return sorted(degrees)


def _subset_sums(degrees):
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def irreducible_over_Q(f: Polynomial) -> bool:
    """Exact irreducibility verdict for a non-constant rational polynomial."""
    if f.is_constant():
        raise ValueError("irreducibility is undefined for constants")
    ints = f.primitive_integer_coeffs()
    n = len(ints) - 1
    if n == 1:
        return True
    if ints[0] == 0:
        return False
    F = Polynomial(ints)
    if not poly_gcd(F, F.derivative()).is_constant():
        return False

    possible = set(range(1, n // 2 + 1))
    for p in _CERT_PRIMES:
        if ints[-1] % p == 0:
            continue
        fp = _trim([c % p for c in ints])
        if len(_fp_gcd(fp, _fp_derivative(fp, p), p)) > 1:
            continue  # p divides the discriminant
        degs = factor_degrees_mod_p(ints, p)
        if len(degs) == 1:
            return True
        possible &= _subset_sums(degs)
        if not possible:
            return True

    # every small prime leaves a factor degree open: factor over Z
    _, factors = sympy.Poly(list(reversed(ints)), _X).factor_list()
    return len(factors) == 1 and factors[0][1] == 1


# -- squarefree decomposition / perfect powers -------------------------------


def squarefree_decomposition(f: Polynomial) -> tuple:
    """Yun's algorithm: ``(c, [(a_i, i), ...])`` with ``f == c * prod a_i**i``,
    each ``a_i`` monic, squarefree, non-constant and pairwise coprime."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    c = f.leading_coefficient
    if f.is_constant():
        return c, []
    g = f.monic()
    parts = []
    d1 = g.derivative()
    a0 = poly_gcd(g, d1)
    b = poly_divrem(g, a0)[0]
    cc = poly_divrem(d1, a0)[0]
    d = cc - b.derivative()
    i = 1
    while not b.is_constant():
        a = poly_gcd(b, d)
        if not a.is_constant():
            parts.append((a, i))
        b = poly_divrem(b, a)[0]
        cc = poly_divrem(d, a)[0]
        d = cc - b.derivative()
        i += 1
    return c, parts


def poly_perfect_power(f: Polynomial) -> tuple:
    """Return ``(g, e)`` with ``f == g**e`` and ``e`` maximal; ``(f, 1)`` when
    ``f`` is not a proper power over Q."""
    if f.is_constant():
        raise ValueError("perfect-power detection needs a non-constant polynomial")
    c, parts = squarefree_decomposition(f)
    e = math.gcd(*(i for _, i in parts))
    for e_try in sorted((k for k in range(2, e + 1) if e % k == 0), reverse=True):
        root = rational_root(c, e_try)
        if root is None:
            continue
        g = Polynomial([root])
        for a, i in parts:
            g = g * a ** (i // e_try)
        return g, e_try
    return f, 1


def format_factored(f: Polynomial, var: str = "x") -> str:
    """Render ``f`` as ``c*prod(a_i)^i`` using its squarefree decomposition,
    e.g. ``(1/3)(x+1)^2``."""
    c, parts = squarefree_decomposition(f)
    pieces = []
    for a, i in parts:
        body = a.format(var).replace(" ", "")
        if a.degree > 1 or len([v for v in a.coeffs if v]) > 1:
            body = f"({body})"
        pieces.append(body + (f"^{i}" if i > 1 else ""))
    prefix = "" if c == 1 else ("-" if c == -1 else f"({c})")
    return prefix + "".join(pieces)
