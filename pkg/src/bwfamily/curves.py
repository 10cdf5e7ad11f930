"""Concrete curves from polynomial families.

Evaluates a family at integer ``x0``, certifies the parameters, and builds
``E: Y^2 = X^3 + A X + B`` over ``F_q`` with ``q + 1 - t`` points.  CM
construction covers ``D = 1`` (j = 1728) and ``D = 3`` (j = 0) by sweeping
twists; other discriminants are handled by exhaustive search for small
``q`` only.
"""

from __future__ import annotations

import math
import os
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from sympy.ntheory import sqrt_mod

from .family import FamilyCandidate
from .ntheory import (
    EmbeddingDegreeExceeded,
    embedding_degree,
    exact_isqrt,
    is_probable_prime,
    squarefree_decompose,
)

BRUTE_FORCE_LIMIT = 10_000
SWEEP_BOUND = 64
CERT_POINTS = 20


class Rejection(Exception):
    """An argument ``x0`` that does not give a usable curve."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class CurveNotFound(RuntimeError):
    pass


# -- curve arithmetic -----------------------------------------------------


def _add(P, Q, A, q):
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if (y1 + y2) % q == 0:
            return None
        lam = (3 * x1 * x1 + A) * pow(2 * y1, -1, q) % q
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, q) % q
    x3 = (lam * lam - x1 - x2) % q
    return x3, (lam * (x1 - x3) - y1) % q


def scalar_mul(n: int, P, A: int, q: int):
    result = None
    addend = P
    while n:
        if n & 1:
            result = _add(result, addend, A, q)
        n >>= 1
        if n:
            addend = _add(addend, addend, A, q)
    return result


def random_point(A: int, B: int, q: int, rng: random.Random):
    while True:
        x = rng.randrange(q)
        rhs = (x * x * x + A * x + B) % q
        if rhs == 0:
            return x, 0
        if pow(rhs, (q - 1) // 2, q) == 1:
            y = sqrt_mod(rhs, q)
            return x, (y if rng.random() < 0.5 else q - y)


def is_nonsingular(A: int, B: int, q: int) -> bool:
    return (4 * A ** 3 + 27 * B ** 2) % q != 0


def count_points(A: int, B: int, q: int) -> int:
    """``#E(F_q)`` by direct enumeration (small ``q`` only)."""
    if q >= BRUTE_FORCE_LIMIT * 10:
        raise ValueError(f"q={q} too large for exhaustive counting")
    roots = Counter(y * y % q for y in range(q))
    return 1 + sum(roots[(x * x * x + A * x + B) % q] for x in range(q))


def twist_traces(t: int, y: int, D: int) -> list:
    """Traces of all twists sharing the CM order of ``Q(sqrt(-D))`` with
    ``4q = t^2 + D y^2``."""
    traces = {t, -t}
    if D == 1:
        traces |= {y, -y}
    elif D == 3:
        for v in (t + 3 * y, t - 3 * y):
            if v % 2 == 0:
                traces |= {v // 2, -v // 2}
    return sorted(traces)


def _certify(A, B, q, n, other_orders, rng) -> str:
    """``match`` when ``n`` is the only twist order consistent with random
    points, ``mismatch`` when a point is not killed by ``n``."""
    undecided = set(other_orders)
    for _ in range(CERT_POINTS):
        P = random_point(A, B, q, rng)
        if scalar_mul(n, P, A, q) is not None:
            return "mismatch"
        undecided = {N for N in undecided if scalar_mul(N, P, A, q) is None}
    return "match" if not undecided else "inconclusive"


def construct_curve(q: int, t: int, D: int, rng: Optional[random.Random] = None) -> tuple:
    """``(A, B)`` for a curve over ``F_q`` with exactly ``q + 1 - t`` points."""
    rng = rng or random.Random(0)
    if q <= 3 or not is_probable_prime(q):
        raise ValueError(f"q={q} must be a prime > 3")
    disc = 4 * q - t * t
    if disc < 0:
        raise ValueError(f"|t|={abs(t)} violates the Hasse bound for q={q}")
    n = q + 1 - t

    if D in (1, 3):
        if disc % D or exact_isqrt(disc // D) is None:
            raise ValueError(f"4q - t^2 = {disc} is not {D}*y^2")
        y = exact_isqrt(disc // D)
        others = sorted({q + 1 - T for T in twist_traces(t, y, D)} - {n})
        for c in range(1, SWEEP_BOUND + 1):
            if c % q == 0:
                continue
            A, B = (0, c) if D == 3 else (c, 0)
            verdict = _certify(A, B, q, n, others, rng)
            if verdict == "inconclusive" and q < BRUTE_FORCE_LIMIT:
                verdict = "match" if count_points(A, B, q) == n else "mismatch"
            if verdict == "match":
                if q < BRUTE_FORCE_LIMIT and count_points(A, B, q) != n:
                    raise ArithmeticError(f"certified curve ({A}, {B}) over F_{q} has wrong order")
                return A, B
        raise CurveNotFound(f"no twist with {n} points among {SWEEP_BOUND} coefficients (q={q}, t={t}, D={D})")

    if q >= BRUTE_FORCE_LIMIT:
        raise CurveNotFound(f"D={D} needs exhaustive search, only available for q < {BRUTE_FORCE_LIMIT}")
    for A in range(q):
        for B in range(1, q):
            if is_nonsingular(A, B, q) and count_points(A, B, q) == n:
                return A, B
    raise CurveNotFound(f"no curve over F_{q} with {n} points")


# -- instances ------------------------------------------------------------


def pairing_friendly(q: int, r: int, k: int) -> bool:
    """``r >= sqrt(q)`` and ``k < log2(r) / 8``, compared exactly."""
    return r * r >= q and r > 1 << (8 * k)


@dataclass
class CurveInstance:
    x0: int
    q: int
    r: int
    t: int
    h: int
    y: int
    D: int
    curve_coeffs: tuple
    k_verified: int
    rho_numeric: float
    pairing_friendly: bool

    def to_json(self) -> dict:
        return {
            "x0": str(self.x0),
            "q": str(self.q),
            "r": str(self.r),
            "t": str(self.t),
            "h": str(self.h),
            "y": str(self.y),
            "D": str(self.D),
            "curve_coeffs": [str(c) for c in self.curve_coeffs],
            "k_verified": str(self.k_verified),
            "rho_numeric": self.rho_numeric,
            "pairing_friendly": self.pairing_friendly,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CurveInstance":
        ints = {k: int(data[k]) for k in ("x0", "q", "r", "t", "h", "y", "D", "k_verified")}
        return cls(
            curve_coeffs=tuple(int(c) for c in data["curve_coeffs"]),
            rho_numeric=float(data["rho_numeric"]),
            pairing_friendly=bool(data["pairing_friendly"]),
            **ints,
        )


def _as_int(v: Fraction, name: str) -> int:
    if Fraction(v).denominator != 1:
        raise Rejection(f"{name}(x0) is not an integer")
    return int(v)


def evaluate_family(fam: FamilyCandidate, x0: int, y: Optional[int] = None,
                    rng: Optional[random.Random] = None) -> dict:
    """Integer parameters ``q, r, t, h, y, D`` at ``x0``, or :class:`Rejection`.

    Sparse families carry no polynomial ``y``; then ``y`` must be supplied
    or ``4q - t^2`` is split as ``D y^2`` by trial for ``q < 10^4``.
    """
    X = Fraction(x0)
    q = _as_int(fam.q(X), "q")
    r = _as_int(fam.r(X), "r")
    t = _as_int(fam.t(X), "t")
    if q < 0 or r < 0:
        raise Rejection("negative q or r")
    if q < 5:
        raise Rejection("q < 5")
    if not is_probable_prime(r, rng=rng):
        raise Rejection("r composite")
    if not is_probable_prime(q, rng=rng):
        raise Rejection("q composite")
    order = q + 1 - t
    if order % r:
        raise Rejection("r does not divide q+1-t")
    h = order // r
    disc = 4 * q - t * t
    if disc <= 0:
        raise Rejection("4q - t^2 <= 0")
    D = fam.D
    if y is None and fam.y is not None:
        y = abs(_as_int(fam.y(X), "y"))
    if y is None:
        if q >= BRUTE_FORCE_LIMIT:
            raise Rejection("sparse family: integer y required for q >= 10^4")
        D, y = squarefree_decompose(disc)
    if D * y * y != disc:
        raise Rejection("D*y^2 != 4q - t^2")
    return {"q": q, "r": r, "t": t, "h": h, "y": y, "D": D}


def make_instance(fam: FamilyCandidate, x0: int, rng: Optional[random.Random] = None,
                  y: Optional[int] = None, k_max: Optional[int] = None) -> CurveInstance:
    rng = rng or random.Random(x0)
    p = evaluate_family(fam, x0, y=y, rng=rng)
    q, r, t, D = p["q"], p["r"], p["t"], p["D"]
    if (fam.k * q) % r == 0:
        raise Rejection("r divides kq")
    try:
        k = embedding_degree(q, r, k_max or fam.k)
    except EmbeddingDegreeExceeded as exc:
        raise Rejection(f"embedding degree exceeds bound ({exc.order})") from exc
    if k != fam.k:
        raise Rejection(f"embedding degree {k} != {fam.k}")
    try:
        A, B = construct_curve(q, t, D, rng)
    except (CurveNotFound, ValueError) as exc:
        raise Rejection(f"curve construction failed: {exc}") from exc
    return CurveInstance(
        x0=x0, q=q, r=r, t=t, h=p["h"], y=p["y"], D=D, curve_coeffs=(A, B),
        k_verified=k, rho_numeric=math.log(q) / math.log(r),
        pairing_friendly=pairing_friendly(q, r, k),
    )


def verify_instance(inst: CurveInstance, rng: Optional[random.Random] = None) -> dict:
    """Re-check every parameter and curve property; returns name -> bool."""
    rng = rng or random.Random(inst.x0)
    q, r, t, h, y, D = inst.q, inst.r, inst.t, inst.h, inst.y, inst.D
    A, B = inst.curve_coeffs
    checks = {}
    checks["q_prime"] = q > 3 and is_probable_prime(q, rng=rng)
    checks["r_prime"] = is_probable_prime(r, rng=rng)
    checks["r_divides_order"] = h * r == q + 1 - t
    checks["cm_equation"] = D * y * y == 4 * q - t * t
    checks["hasse_bound"] = t * t <= 4 * q
    try:
        checks["embedding_degree"] = embedding_degree(q, r, inst.k_verified) == inst.k_verified
    except ValueError:
        checks["embedding_degree"] = False
    checks["r_not_dividing_kq"] = (inst.k_verified * q) % r != 0
    checks["pairing_friendly_flag"] = pairing_friendly(q, r, inst.k_verified) == inst.pairing_friendly
    checks["rho_numeric"] = r > 1 and abs(math.log(q) / math.log(r) - inst.rho_numeric) < 1e-12
    checks["nonsingular"] = checks["q_prime"] and is_nonsingular(A, B, q)
    n = q + 1 - t
    if not checks["nonsingular"]:
        checks["curve_order"] = False
    elif q < BRUTE_FORCE_LIMIT:
        checks["curve_order"] = count_points(A, B, q) == n
    else:
        checks["curve_order"] = all(
            scalar_mul(n, random_point(A, B, q, rng), A, q) is None for _ in range(CERT_POINTS)
        )
    checks["subgroup_of_order_r"] = checks["curve_order"] and checks["r_divides_order"]
    checks["passed"] = all(checks.values())
    return checks


@dataclass
class SearchResult:
    instances: list = field(default_factory=list)
    rejections: Counter = field(default_factory=Counter)

    def to_json(self) -> dict:
        return {
            "instances": [i.to_json() for i in self.instances],
            "rejections": dict(sorted(self.rejections.items())),
        }


def _search_one(args):
    fam, x0, seed = args
    rng = random.Random(f"{seed}:{x0}")
    try:
        inst = make_instance(fam, x0, rng)
    except Rejection as exc:
        return x0, None, exc.reason
    checks = verify_instance(inst, random.Random(f"{seed}:{x0}:verify"))
    if not checks["passed"]:
        failed = ",".join(k for k, v in checks.items() if not v and k != "passed")
        return x0, None, f"verification failed: {failed}"
    return x0, inst, None


def search_instances(fam: FamilyCandidate, x_from: int, x_to: int, seed: int = 0,
                     threads: Optional[int] = None) -> SearchResult:
    """All accepted instances for ``x_from <= x0 <= x_to``."""
    if threads is None:
        threads = int(os.environ.get("FORGE_THREADS", "1") or 1)
    jobs = [(fam, x0, seed) for x0 in range(x_from, x_to + 1)]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_search_one, jobs, chunksize=max(1, len(jobs) // (4 * threads))))
    else:
        results = [_search_one(job) for job in jobs]
    out = SearchResult()
    for _, inst, reason in results:
        if inst is not None:
            out.instances.append(inst)
        else:
            out.rejections[reason] += 1
    return out
