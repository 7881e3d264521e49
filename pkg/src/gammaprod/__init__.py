"""High-precision verification of Gamma-function product identities.

Evaluates ln Gamma at exact rationals with arbitrary precision and checks a
family of product identities (coprime-residue products, midpoint products,
Farey-sequence products, and their sine / cyclotomic-polynomial equivalents)
both numerically and by exact integer arithmetic.
"""

from gammaprod.numeric import PrecisionContext, bernoulli, lngamma_rational
from gammaprod.sequences import farey
from gammaprod.identities import CATALOG, run_check

__all__ = [
    "PrecisionContext",
    "bernoulli",
    "lngamma_rational",
    "farey",
    "CATALOG",
    "run_check",
]
