"""Brezing-Weng construction and verification of complete families.

A family is a triple ``(t, r, q)`` of rational polynomials.  It is complete
for embedding degree ``k`` and CM discriminant ``D`` when

(i)   ``r`` represents primes,
(ii)  ``q`` represents primes (irreducible; see ``check_q_condition``),
(iii) ``r | q + 1 - t``,
(iv)  ``r | Phi_k(t - 1)``,
(v)   ``D*y^2 == 4q - t^2`` for some ``y`` in Q[x].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .cyclotomic_field import (
    is_squarefree,
    primitive_root_image,
    sqrt_minus_D,
    sqrt_minus_D_exists,
)
from .irreducibility import format_factored, irreducible_over_Q, poly_perfect_power
from .polynomial import (
    Polynomial,
    content_and_integrality,
    cyclotomic,
    poly_divrem,
    poly_sqrt,
)

YES = "yes-heuristic"
NO = "no"
NEVER_INTEGER = "never-integer"

SAMPLE_WIDTH = 64


def fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(s) -> Fraction:
    return Fraction(str(s))


# -- represents primes ----------------------------------------------------


def _integer_sample(f: Polynomial, L: int, residues, count: int):
    """First ``count`` integer values of ``f`` at ``x = 0, 1, 2, ...`` taken
    from the integral residue classes, plus ``deg f + 1`` consecutive
    points of every class so the gcd is exact."""
    per_class = f.degree + 1
    values = []
    for res in residues:
        values.extend(int(f(Fraction(res + L * j))) for j in range(per_class))
    x = 0
    extra = []
    while len(extra) < count:
        if x % L in residues:
            extra.append(int(f(Fraction(x))))
        x += 1
    return extra + values


def represents_primes(f: Polynomial) -> dict:
    """Heuristic 'represents primes' verdict with evidence.

    The verdict is ``no`` for reducible polynomials, non-positive leading
    coefficients and a value gcd above 1; ``never-integer`` when no integer
    argument gives an integer value; otherwise ``yes-heuristic``.
    """
    if f.is_constant():
        raise ValueError("represents_primes needs a non-constant polynomial")
    if not irreducible_over_Q(f):
        return {"verdict": NO, "reason": "reducible"}
    if f.leading_coefficient <= 0:
        return {"verdict": NO, "reason": "non-positive leading coefficient"}
    L, residues = content_and_integrality(f)
    if not residues:
        return {"verdict": NEVER_INTEGER, "reason": f"no integer values (period {L})"}
    values = _integer_sample(f, L, residues, SAMPLE_WIDTH)
    g = math.gcd(*values)
    evidence = {"period": L, "integral_residues": list(residues), "value_gcd": g}
    if g != 1:
        return {"verdict": NO, "reason": f"all integer values divisible by {g}", **evidence}
    return {"verdict": YES, **evidence}


# -- condition report -----------------------------------------------------


@dataclass
class ConditionReport:
    represents_primes_r: dict
    q_power_of_prime_rep: dict
    divisibility_iii: bool
    divisibility_iv: bool
    cm_equation_v: bool
    h: Optional[Polynomial] = None
    y: Optional[Polynomial] = None
    cm_witness: Optional[Polynomial] = None
    y_represents_integers: Optional[bool] = None
    joint_integral_residues: Optional[dict] = None
    reasons: list = field(default_factory=list)

    @property
    def condition_i(self) -> bool:
        return self.represents_primes_r["verdict"] == YES

    @property
    def condition_ii(self) -> bool:
        return self.q_power_of_prime_rep["passed"]

    @property
    def is_complete(self) -> bool:
        return (
            self.condition_i
            and self.condition_ii
            and self.divisibility_iii
            and self.divisibility_iv
            and self.cm_equation_v
        )

    @property
    def is_sparse_candidate(self) -> bool:
        return (
            self.condition_i
            and self.condition_ii
            and self.divisibility_iii
            and self.divisibility_iv
            and not self.cm_equation_v
        )

    def to_json(self) -> dict:
        q_rep = dict(self.q_power_of_prime_rep)
        q_rep["base"] = q_rep["base"].to_json()
        return {
            "i_represents_primes_r": self.represents_primes_r,
            "ii_q_power_of_prime_rep": q_rep,
            "iii_r_divides_q_plus_1_minus_t": self.divisibility_iii,
            "iv_r_divides_phi_k_of_t_minus_1": self.divisibility_iv,
            "v_cm_equation": self.cm_equation_v,
            "h": None if self.h is None else self.h.to_json(),
            "y": None if self.y is None else self.y.to_json(),
            "cm_witness": None if self.cm_witness is None else self.cm_witness.to_json(),
            "y_represents_integers": self.y_represents_integers,
            "joint_integral_residues": self.joint_integral_residues,
            "is_complete": self.is_complete,
            "is_sparse_candidate": self.is_sparse_candidate,
            "reasons": list(self.reasons),
        }


def check_q_condition(q: Polynomial) -> dict:
    """Condition (ii).

    ``q`` is split as ``base**exponent``; the condition passes only when
    ``q`` itself is irreducible and represents primes.  Proper powers such as
    ``(x+1)^2`` are reported with their base but fail.
    """
    base, e = poly_perfect_power(q)
    if e > 1:
        return {
            "passed": False,
            "base": base,
            "exponent": e,
            "base_verdict": represents_primes(base)["verdict"],
            "reason": f"q(x) reducible: {format_factored(q)}",
        }
    verdict = represents_primes(q)
    out = {"passed": verdict["verdict"] == YES, "base": q, "exponent": 1, "base_verdict": verdict["verdict"]}
    if not out["passed"]:
        if verdict.get("reason") == "reducible":
            out["reason"] = f"q(x) reducible: {format_factored(q)}"
        else:
            out["reason"] = f"q(x) does not represent primes: {verdict.get('reason', verdict['verdict'])}"
    return out


def cyclotomic_of_shift_mod(k: int, t: Polynomial, r: Polynomial) -> Polynomial:
    """``Phi_k(t - 1) mod r`` by Horner's rule with reduction."""
    u = poly_divrem(t - 1, r)[1]
    acc = Polynomial()
    for c in reversed(cyclotomic(k).coeffs):
        acc = poly_divrem(acc * u + Polynomial([c]), r)[1]
    return acc


def _joint_residues(polys) -> dict:
    L = math.lcm(*(p.denominator_lcm() for p in polys))
    res = [a for a in range(L) if all(p(Fraction(a)).denominator == 1 for p in polys)]
    return {"period": L, "residues": res}


def verify_family(t: Polynomial, r: Polynomial, q: Polynomial, k: int, D: int) -> ConditionReport:
    """Check the five conditions of a complete family independently."""
    if r.is_constant() or q.is_constant():
        raise ValueError("r(x) and q(x) must be non-constant")
    if k < 1:
        raise ValueError("embedding degree must be positive")
    if not is_squarefree(D):
        raise ValueError(f"D={D} is not a squarefree positive integer")
    reasons = []

    r_verdict = represents_primes(r)
    if r_verdict["verdict"] != YES:
        reasons.append(f"r(x) does not represent primes: {r_verdict.get('reason', r_verdict['verdict'])}")

    q_rep = check_q_condition(q)
    if not q_rep["passed"]:
        reasons.append(q_rep["reason"])

    h, rem = poly_divrem(q + 1 - t, r)
    cond_iii = rem.is_zero()
    if not cond_iii:
        h = None
        reasons.append("r(x) does not divide q(x)+1-t(x)")

    cond_iv = cyclotomic_of_shift_mod(k, t, r).is_zero()
    if not cond_iv:
        reasons.append(f"r(x) does not divide Phi_{k}(t(x)-1)")

    w = (q * 4 - t * t) / D
    y = poly_sqrt(w)
    cond_v = y is not None
    witness = None
    y_int = None
    if cond_v:
        y_int = bool(y.is_zero() or content_and_integrality(y)[1])
        joint = _joint_residues([t, r, q, y])
    else:
        witness = w
        reasons.append(f"(4q(x)-t(x)^2)/{D} = {w} is not a square in Q[x]")
        joint = _joint_residues([t, r, q])

    return ConditionReport(
        represents_primes_r=r_verdict,
        q_power_of_prime_rep=q_rep,
        divisibility_iii=cond_iii,
        divisibility_iv=cond_iv,
        cm_equation_v=cond_v,
        h=h,
        y=y,
        cm_witness=witness,
        y_represents_integers=y_int,
        joint_integral_residues=joint,
        reasons=reasons,
    )


# -- rho ------------------------------------------------------------------


def rho_of(t: Polynomial, r: Polynomial, q: Polynomial) -> Fraction:
    """``deg q / deg r``."""
    if r.is_constant():
        raise ValueError("r(x) must be non-constant")
    if q.is_zero():
        raise ValueError("q(x) must be non-zero")
    return Fraction(q.degree, r.degree)


def rho_bound_from_ty(t: Polynomial, y: Polynomial, r: Polynomial, D: int = 1) -> Fraction:
    """``2 max(deg y, deg t) / deg r`` for ``t``, ``y`` reduced modulo ``r``."""
    if r.is_constant():
        raise ValueError("r(x) must be non-constant")
    if t.is_zero() and y.is_zero():
        raise ValueError("t and y are both zero")
    if t.degree >= r.degree or y.degree >= r.degree:
        raise ValueError("t and y must be reduced modulo r")
    return Fraction(2 * max(t.degree, y.degree), r.degree)


# -- candidates -----------------------------------------------------------


@dataclass
class FamilyCandidate:
    k: int
    D: int
    l: int
    g: int
    t: Polynomial
    r: Polynomial
    q: Polynomial
    y: Optional[Polynomial]
    h: Optional[Polynomial]
    rho: Fraction
    conditions: Optional[ConditionReport] = None

    @property
    def is_complete(self) -> bool:
        return self.conditions is not None and self.conditions.is_complete

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "D": self.D,
            "l": self.l,
            "g": self.g,
            "t": self.t.to_json(),
            "r": self.r.to_json(),
            "q": self.q.to_json(),
            "y": None if self.y is None else self.y.to_json(),
            "h": None if self.h is None else self.h.to_json(),
            "rho": fraction_str(self.rho),
            "conditions": None if self.conditions is None else self.conditions.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict, reverify: bool = True) -> "FamilyCandidate":
        def poly(key):
            v = data.get(key)
            return None if v is None else Polynomial.from_json(v)

        t, r, q = poly("t"), poly("r"), poly("q")
        if t is None or r is None or q is None:
            raise ValueError("family JSON needs t, r and q")
        k, D = int(data["k"]), int(data["D"])
        cand = cls(
            k=k,
            D=D,
            l=int(data.get("l", 0)),
            g=int(data.get("g", 0)),
            t=t,
            r=r,
            q=q,
            y=poly("y"),
            h=poly("h"),
            rho=parse_fraction(data["rho"]) if "rho" in data else rho_of(t, r, q),
        )
        if reverify:
            cand.conditions = verify_family(t, r, q, k, D)
            if cand.y is None and cand.conditions.y is not None:
                cand.y = cand.conditions.y
            if cand.h is None and cand.conditions.h is not None:
                cand.h = cand.conditions.h
        return cand


def family_from_triple(t: Polynomial, r: Polynomial, q: Polynomial, k: int, D: int) -> FamilyCandidate:
    """Verification-only candidate for a given (possibly non-cyclotomic) triple."""
    report = verify_family(t, r, q, k, D)
    return FamilyCandidate(
        k=k, D=D, l=0, g=0, t=t, r=r, q=q,
        y=report.y, h=report.h, rho=rho_of(t, r, q), conditions=report,
    )


def brezing_weng_ty(k: int, D: int, l: int, g: int) -> tuple:
    """Reduced ``(t, y)`` of the construction without assembling ``q``."""
    if k < 1 or l % k:
        raise ValueError(f"k={k} must divide l={l}")
    if math.gcd(g, k) != 1:
        raise ValueError(f"gcd(g={g}, k={k}) != 1")
    if not sqrt_minus_D_exists(D, l):
        raise ValueError(f"sqrt(-{D}) is not in Q(mu_{l})")
    zeta = primitive_root_image(l, k, g)
    s = sqrt_minus_D(D, l)
    # 1/s == s/(-D) since s^2 == -D
    y = (zeta - 1) * s / (-D)
    return zeta.rep + 1, y.rep


def brezing_weng(k: int, D: int, l: int, g: int, verify: bool = True) -> FamilyCandidate:
    """Brezing-Weng family with ``r = Phi_l`` and ``t - 1 -> zeta_k^g``.

    Candidates failing (i)/(ii) are still returned, with the verdicts
    attached, so theorem scans can audit them.
    """
    t, y = brezing_weng_ty(k, D, l, g)
    r = cyclotomic(l)
    q = (y * y * D + t * t) / 4
    h, rem = poly_divrem(q + 1 - t, r)
    if not rem.is_zero():
        raise ArithmeticError(f"r(x) does not divide q+1-t for k={k} D={D} l={l} g={g}")
    cand = FamilyCandidate(k=k, D=D, l=l, g=g, t=t, r=r, q=q, y=y, h=h, rho=rho_of(t, r, q))
    if verify and not r.is_constant() and not q.is_constant():
        cand.conditions = verify_family(t, r, q, k, D)
    return cand
