"""Exact Laurent polynomial and binomial-factored rational arithmetic."""

from .laurent import (
    BASE_VARIABLES,
    LaurentMonomial,
    LaurentPoly,
    gens,
    poly,
    specialize_qt,
    var_index,
    var_name,
    z_index,
)
from .rational import BinomialFactor, FactoredRat, frat_mul, frat_substitute, frat_sum
from .residue import pole_set, residue_dlog


def poly_arith(op: str, f: LaurentPoly, g: LaurentPoly | None = None) -> LaurentPoly:
    """Functional form of the ring operations: ``add``, ``mul`` or ``neg``."""
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "neg":
        return -f
    raise ValueError(f"unknown operation {op!r}")


__all__ = [
    "BASE_VARIABLES",
    "BinomialFactor",
    "FactoredRat",
    "LaurentMonomial",
    "LaurentPoly",
    "frat_mul",
    "frat_substitute",
    "frat_sum",
    "gens",
    "pole_set",
    "poly",
    "poly_arith",
    "residue_dlog",
    "specialize_qt",
    "var_index",
    "var_name",
    "z_index",
]
