"""Matrix-F5 Gröbner bases over prime fields with exact operation counts."""

from . import bounds, f5engine, field, macaulay, monomial, oracle, polynomial, regularity, sysfile
from .f5engine import F5Result, Signature, run
from .field import DEFAULT_PRIME, PrimeField
from .monomial import Monomial
from .polynomial import Polynomial, parse

__version__ = "0.1.0"

__all__ = [
    "bounds", "f5engine", "field", "macaulay", "monomial", "oracle", "polynomial", "regularity",
    "sysfile", "F5Result", "Signature", "run", "DEFAULT_PRIME", "PrimeField", "Monomial",
    "Polynomial", "parse",
]
