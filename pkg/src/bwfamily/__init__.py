"""Brezing-Weng families of pairing-friendly curves and their rho-values."""

__version__ = "0.1.0"

from .cyclotomic_field import CycloElement, gauss_sum, legendre, sqrt_minus_D, sqrt_minus_D_exists
from .family import ConditionReport, FamilyCandidate, brezing_weng, rho_of, verify_family
from .polynomial import Polynomial, cyclotomic

__all__ = [
    "ConditionReport",
    "CycloElement",
    "FamilyCandidate",
    "Polynomial",
    "brezing_weng",
    "cyclotomic",
    "gauss_sum",
    "legendre",
    "rho_of",
    "sqrt_minus_D",
    "sqrt_minus_D_exists",
    "verify_family",
]
