"""Representation numbers of diagonal quadratic forms, primitive counts, and twisted divisor sums."""

from .arith import FactoredInteger, divisors, factorize, mobius
from .catalog import FormulaSpec, FormulaTerm, builtin_catalog, evaluate_formula, primitive_eisenstein_part
from .characters import DirichletCharacter, kron, parse_character
from .eisenfit import enumerate_triples, fit, infer_level
from .repnums import DiagonalForm, count_primitive, count_representations, rep_series
from .twisted_sums import mobius_weighted_sum_closed, sigma_twisted

__version__ = "0.1.0"

__all__ = [
    "DiagonalForm",
    "DirichletCharacter",
    "FactoredInteger",
    "FormulaSpec",
    "FormulaTerm",
    "builtin_catalog",
    "count_primitive",
    "count_representations",
    "divisors",
    "enumerate_triples",
    "evaluate_formula",
    "factorize",
    "fit",
    "infer_level",
    "kron",
    "mobius",
    "mobius_weighted_sum_closed",
    "parse_character",
    "primitive_eisenstein_part",
    "rep_series",
    "sigma_twisted",
]
