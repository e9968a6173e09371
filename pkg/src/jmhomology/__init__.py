"""Exact triply graded characters of Jucys-Murphy braid closures.

The character is computed two ways, as a sum over standard Young tableaux
of residue chains and as a descending iterated residue integral, and the
two are expected to agree exactly.
"""

from ._backend import BACKEND
from .engine import evaluate_full, evaluate_syt_sum, evaluate_tableau, integrand
from .homology import JMVector, Superpolynomial, jm_to_exponents, positivity_scan, superpolynomial
from .symbolic import FactoredRat, LaurentMonomial, LaurentPoly

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "FactoredRat",
    "JMVector",
    "LaurentMonomial",
    "LaurentPoly",
    "Superpolynomial",
    "evaluate_full",
    "evaluate_syt_sum",
    "evaluate_tableau",
    "integrand",
    "jm_to_exponents",
    "positivity_scan",
    "superpolynomial",
]
