"""Exhaustive desk-scale scans for rho = 1 over cyclotomic families.

Each scanned candidate is the reduced Brezing-Weng pair ``(t, y)`` modulo
``r = Phi_l``; reduction minimizes ``max(deg t, deg y)`` and hence rho, so a
scan that finds no reduced candidate with rho = 1 covers every lift as well.
Candidates that do reach rho = 1 are materialized and checked against the
full definition; only complete ones count as violations.
"""

from __future__ import annotations

import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from sympy import isprime, primerange

from .cyclotomic_field import admissible_discriminants, is_squarefree, sqrt_minus_D_exists
from .family import brezing_weng, brezing_weng_ty, fraction_str, rho_bound_from_ty
from .polynomial import cyclotomic, euler_phi

MODES = ("theorem1_i", "theorem1_ii", "theorem2")

DEFAULT_PMAX = 31
DEFAULT_DK_MAX = 60
DEFAULT_Q_MAX = 13


class ScanSpecError(ValueError):
    pass


@dataclass(frozen=True)
class ScanSpec:
    mode: str
    k_set: tuple = ()
    d_set: Optional[tuple] = None
    p_set: tuple = ()
    q_max: int = DEFAULT_Q_MAX
    dk_max: Optional[int] = None
    D_policy: Union[str, int] = "all-admissible"

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "k_set": list(self.k_set),
            "d_set": None if self.d_set is None else list(self.d_set),
            "p_set": list(self.p_set),
            "q_max": self.q_max,
            "dk_max": self.dk_max,
            "D_policy": self.D_policy,
        }


@dataclass(frozen=True)
class ScanRow:
    k: int
    d: int
    l: int
    D: int
    g: int
    deg_t: int
    deg_y: int
    rho: Fraction


@dataclass
class ScanReport:
    spec: ScanSpec
    rows: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    rho_one_excluded: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def candidates_examined(self) -> int:
        return len(self.rows)

    @property
    def rho_histogram(self) -> dict:
        return dict(sorted(Counter(row.rho for row in self.rows).items()))

    @property
    def min_rho(self) -> Optional[Fraction]:
        return min((row.rho for row in self.rows), default=None)

    @property
    def max_rho(self) -> Optional[Fraction]:
        return max((row.rho for row in self.rows), default=None)

    @property
    def confirmed(self) -> bool:
        return not self.violations

    def per_k(self) -> dict:
        out = {}
        for k in _spec_ks(self.spec, self.rows):
            rhos = [row.rho for row in self.rows if row.k == k]
            entry = {"examined": len(rhos), "min_rho": min(rhos) if rhos else None}
            if k in self.notes:
                entry["note"] = self.notes[k]
            out[k] = entry
        return out

    def to_json(self) -> dict:
        def opt(x):
            return None if x is None else fraction_str(x)

        return {
            "spec": self.spec.to_json(),
            "candidates_examined": self.candidates_examined,
            "rho_histogram": {fraction_str(k): v for k, v in self.rho_histogram.items()},
            "min_rho": opt(self.min_rho),
            "max_rho": opt(self.max_rho),
            "per_k": {
                str(k): {**v, "min_rho": opt(v["min_rho"])} for k, v in self.per_k().items()
            },
            "violations": [c.to_json() for c in self.violations],
            "rho_one_excluded": self.rho_one_excluded,
            "confirmed": self.confirmed,
        }

    def to_tsv(self) -> str:
        lines = ["k\td\tD\tg\tdeg_t\tdeg_y\trho"]
        for row in self.rows:
            lines.append(
                f"{row.k}\t{row.d}\t{row.D}\t{row.g}\t{row.deg_t}\t{row.deg_y}\t{fraction_str(row.rho)}"
            )
        return "\n".join(lines) + "\n"


def _spec_ks(spec: ScanSpec, rows) -> list:
    seen = list(dict.fromkeys(row.k for row in rows))
    for k in spec.k_set:
        if k not in seen:
            seen.append(k)
    return sorted(seen)


# -- parameter helpers ----------------------------------------------------


def inequality_filter(p: int, Q: int, k: int) -> bool:
    """``(p - 2) Q + 1 < phi(k)``."""
    if k not in (p * Q, 2 * p * Q):
        raise ValueError(f"k={k} is neither pQ nor 2pQ for p={p}, Q={Q}")
    return (p - 2) * Q + 1 < euler_phi(k)


def reduce_theorem2_parameters(d: int, k: int) -> tuple:
    """Strip ``gcd(d, k)`` and square factors from ``d``.

    Returns ``(d_reduced, exponent)`` with ``d == d_reduced * exponent`` and
    ``Phi_{dk}(x) == Phi_{d_reduced k}(x**exponent)``; ``d_reduced`` is
    squarefree and coprime to ``k``.  A square factor ``a^2`` leaves one
    ``a`` behind (``Phi_{a^2 d' k}(x) = Phi_{a d' k}(x^a)``).
    """
    if d < 1 or k < 1:
        raise ValueError("d and k must be positive")
    exponent = 1
    while True:
        e = math.gcd(d, k)
        if e >= 2:
            d //= e
            exponent *= e
            continue
        a = next((p for p in primerange(2, math.isqrt(d) + 1) if d % (p * p) == 0), None)
        if a is None:
            return d, exponent
        d //= a
        exponent *= a


def admissible_d(k: int, dk_max: int) -> list:
    """Squarefree ``d`` coprime to ``k`` with ``d k <= dk_max``."""
    return [d for d in range(1, dk_max // k + 1) if is_squarefree(d) and math.gcd(d, k) == 1]


def theorem1_i_degrees(pmax: int = DEFAULT_PMAX) -> list:
    ks = {1, 2}
    for p in primerange(2, pmax + 1):
        if p == 2 or p % 4 == 3:
            ks.update((p, 2 * p))
    return sorted(ks)


def _is_theorem1_i_degree(k: int) -> bool:
    if k in (1, 2):
        return True
    for p in (k, k // 2 if k % 2 == 0 else None):
        if p and isprime(p) and (p == 2 or p % 4 == 3):
            return True
    return False


def validate_spec(spec: ScanSpec):
    if spec.mode not in MODES:
        raise ScanSpecError(f"unknown scan mode {spec.mode!r}")
    if isinstance(spec.D_policy, int) and not is_squarefree(spec.D_policy):
        raise ScanSpecError(f"fixed D={spec.D_policy} is not squarefree")
    if spec.mode == "theorem1_i":
        for k in spec.k_set:
            if k < 1 or not _is_theorem1_i_degree(k):
                raise ScanSpecError(f"k={k} is not in {{1, 2, p, 2p}} with p = 2 or p = 3 mod 4")
    elif spec.mode == "theorem1_ii":
        if spec.q_max < 2:
            raise ScanSpecError("Q range needs q_max >= 2")
        for p in spec.p_set:
            if not (isprime(p) and p >= 7 and p % 4 == 3):
                raise ScanSpecError(f"p={p} must be a prime >= 7 with p = 3 mod 4")
    else:
        for k in spec.k_set:
            if k < 1:
                raise ScanSpecError(f"k={k} must be positive")
            for d in spec.d_set or ():
                if not is_squarefree(d) or math.gcd(d, k) != 1:
                    raise ScanSpecError(
                        f"d={d} must be squarefree and coprime to k={k}; "
                        f"reduce it first (reduce_theorem2_parameters gives {reduce_theorem2_parameters(d, k)})"
                    )


# -- task enumeration -----------------------------------------------------


def _discriminants(spec: ScanSpec, l: int) -> list:
    if isinstance(spec.D_policy, int):
        return [spec.D_policy] if sqrt_minus_D_exists(spec.D_policy, l) else []
    return admissible_discriminants(l)


def _tasks(spec: ScanSpec):
    """Stable enumeration of ``(k, d, l, D, g)`` tuples."""
    tasks = []
    if spec.mode == "theorem1_i":
        for k in sorted(spec.k_set):
            for D in _discriminants(spec, k):
                for g in range(1, max(k, 2)):
                    if math.gcd(g, k) == 1:
                        tasks.append((k, 1, k, D, g))
    elif spec.mode == "theorem1_ii":
        for p in sorted(spec.p_set):
            for Q in range(2, spec.q_max + 1):
                for k in (p * Q, 2 * p * Q):
                    if inequality_filter(p, Q, k) and sqrt_minus_D_exists(p, k):
                        tasks.append((k, 1, k, p, 1))
    else:
        for k in sorted(spec.k_set):
            ds = spec.d_set if spec.d_set is not None else admissible_d(k, spec.dk_max or DEFAULT_DK_MAX)
            for d in sorted(ds):
                l = d * k
                if spec.dk_max is not None and l > spec.dk_max:
                    continue
                phi = euler_phi(l)
                for D in _discriminants(spec, l):
                    g = 1
                    while d * g < phi:
                        if math.gcd(g, k) == 1:
                            tasks.append((k, d, l, D, g))
                        g += 1
    return tasks


def _evaluate(task):
    k, d, l, D, g = task
    t, y = brezing_weng_ty(k, D, l, g)
    rho = rho_bound_from_ty(t, y, cyclotomic(l), D)
    row = ScanRow(k=k, d=d, l=l, D=D, g=g, deg_t=t.degree, deg_y=y.degree, rho=rho)
    extra = None
    if rho == 1:
        cand = brezing_weng(k, D, l, g)
        extra = cand
    return row, extra


def _thread_count(threads: Optional[int]) -> int:
    if threads is None:
        threads = int(os.environ.get("FORGE_THREADS", "1") or 1)
    return max(1, threads)


def run_scan(spec: ScanSpec, threads: Optional[int] = None) -> ScanReport:
    validate_spec(spec)
    tasks = _tasks(spec)
    n = _thread_count(threads)
    if n > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(_evaluate, tasks, chunksize=max(1, len(tasks) // (4 * n))))
    else:
        results = [_evaluate(task) for task in tasks]

    report = ScanReport(spec=spec)
    for row, cand in results:
        report.rows.append(row)
        if cand is None:
            continue
        if cand.is_complete:
            report.violations.append(cand)
        else:
            reasons = cand.conditions.reasons if cand.conditions else ["q(x) is constant"]
            report.rho_one_excluded.append(
                {"k": row.k, "d": row.d, "D": row.D, "g": row.g, "q": cand.q.to_json(), "reasons": reasons}
            )
    for k in spec.k_set:
        l = k
        if euler_phi(l) == 1 and spec.mode == "theorem1_i":
            report.notes[k] = (
                "deg r = 1: any non-constant q has deg q = 2 max(deg t, deg y) >= 2, so rho >= 2"
            )
    return report


def scan_theorem1(spec: ScanSpec, threads: Optional[int] = None) -> ScanReport:
    if spec.mode not in ("theorem1_i", "theorem1_ii"):
        raise ScanSpecError(f"scan_theorem1 cannot run mode {spec.mode!r}")
    return run_scan(spec, threads)


def scan_theorem2(spec: ScanSpec, threads: Optional[int] = None) -> ScanReport:
    if spec.mode != "theorem2":
        raise ScanSpecError(f"scan_theorem2 cannot run mode {spec.mode!r}")
    return run_scan(spec, threads)
