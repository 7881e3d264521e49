"""Exact reduced rationals, coprime residue enumeration and Farey sequences.

``fractions.Fraction`` serves as the canonical reduced-rational type; the
Farey generator uses the classical next-term recurrence and a quadratic
brute-force enumeration kept around purely as a test oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

_FAREY_BOUND = 10**5


def reduce(k: int, n: int) -> Fraction:
    """Canonical reduced fraction k/n; rejects n <= 0."""
    if n <= 0:
        raise ValueError("denominator must be positive, got %r" % (n,))
    if k < 0:
        raise ValueError("numerator must be non-negative, got %r" % (k,))
    return Fraction(k, n)


def coprime_residues(n: int) -> list[int]:
    """Ascending k in [1, n] with gcd(k, n) = 1; length phi(n); [1] for n=1."""
    if n < 1:
        raise ValueError("n must be >= 1, got %r" % (n,))
    if n == 1:
        return [1]
    return [k for k in range(1, n + 1) if math.gcd(k, n) == 1]


@dataclass(frozen=True)
class FareySequence:
    """Reduced fractions in the open interval (0,1) with denominator <= N.

    The endpoints 0/1 and 1/1 are excluded (the recurrence still seeds on
    them internally).
    """

    N: int
    elements: tuple[Fraction, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def farey_pairs(N: int) -> Iterator[tuple[int, int]]:
    """Lazily yield (num, den) of F_N in increasing order via the next-term
    recurrence, endpoints excluded.  Pairs are already in lowest terms."""
    if N < 2 or N > _FAREY_BOUND:
        raise ValueError("farey order must satisfy 2 <= N <= %d, got %r" % (_FAREY_BOUND, N))
    a, b, c, d = 0, 1, 1, N
    while c < d:  # stop before 1/1
        yield c, d
        t = (N + b) // d
        a, b, c, d = c, d, t * c - a, t * d - b


def farey(N: int) -> FareySequence:
    """F_N by the next-term recurrence."""
    return FareySequence(N, tuple(Fraction(p, q) for p, q in farey_pairs(N)))


def farey_bruteforce(N: int) -> FareySequence:
    """F_N by reduce / deduplicate / sort over all k/n.  Quadratic; oracle only."""
    if N < 2 or N > _FAREY_BOUND:
        raise ValueError("farey order must satisfy 2 <= N <= %d, got %r" % (_FAREY_BOUND, N))
    seen = {Fraction(k, n) for n in range(2, N + 1) for k in range(1, n)}
    return FareySequence(N, tuple(sorted(seen)))
