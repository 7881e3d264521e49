"""Arbitrary-precision real arithmetic substrate and two independent
ln-Gamma evaluators.

The substrate is mpmath's binary floating point (``mpf``); every operation
runs at ``prec_bits + guard_bits`` and results are rounded back to
``prec_bits``.  The primary evaluator is a shifted Stirling series with exact
rational Bernoulli coefficients; the secondary evaluator sums the Weierstrass
product series and is used only as a low-precision cross-check oracle.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import mp, mpf


class SeriesDivergenceError(RuntimeError):
    """Stirling terms started growing before reaching tolerance.

    Can only happen if the shift threshold is miscomputed, i.e. an internal
    bug, so this is deliberately not a ValueError.
    """


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision in bits plus guard bits carried internally."""

    prec_bits: int = 256
    guard_bits: int = 32

    def __post_init__(self):
        if self.prec_bits < 64:
            raise ValueError("prec_bits must be >= 64, got %r" % (self.prec_bits,))
        if self.guard_bits < 0:
            raise ValueError("guard_bits must be >= 0, got %r" % (self.guard_bits,))

    @property
    def total_bits(self) -> int:
        return self.prec_bits + self.guard_bits


# ---------------------------------------------------------------------------
# Bernoulli numbers (exact rationals, computed once, immutable thereafter)

_bernoulli_table: list[Fraction] = [Fraction(1), Fraction(-1, 2)]
_bernoulli_lock = threading.Lock()


def bernoulli(two_j: int) -> Fraction:
    """Exact Bernoulli number B_{two_j} for even two_j >= 2.

    Uses the defining convolution recurrence
    sum_{k=0}^{m} C(m+1, k) B_k = 0 over exact rationals; results are cached.
    """
    if two_j < 2 or two_j % 2 != 0:
        raise ValueError("index must be even and >= 2, got %r" % (two_j,))
    if two_j >= len(_bernoulli_table):
        with _bernoulli_lock:
            while len(_bernoulli_table) <= two_j:
                m = len(_bernoulli_table)
                acc = sum(
                    Fraction(math.comb(m + 1, k)) * _bernoulli_table[k]
                    for k in range(m)
                )
                _bernoulli_table.append(-acc / (m + 1))
    return _bernoulli_table[two_j]


# Stirling series coefficients B_{2j} / (2j (2j-1)) as mpf, keyed by working
# precision; extended lazily.
_stirling_coeffs: dict[int, list] = {}
_coeff_lock = threading.Lock()


def _stirling_coeff(j: int, total_bits: int):
    with _coeff_lock:
        coeffs = _stirling_coeffs.setdefault(total_bits, [])
        while len(coeffs) < j:
            jj = len(coeffs) + 1
            c = bernoulli(2 * jj) / (2 * jj * (2 * jj - 1))
            with mp.workprec(total_bits):
                coeffs.append(mpf(c.numerator) / c.denominator)
        return coeffs[j - 1]


def stirling_shift_threshold(ctx: PrecisionContext) -> int:
    """Minimum argument for the Stirling series to converge below 2^-total.

    The remainder behaves like e^(-2 pi z); 0.12 ~ ln2/(2 pi) with margin.
    """
    return max(10, math.ceil(0.12 * ctx.total_bits) + 5)


def _to_mpf_exact(x):
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpf(x)


def lngamma_stirling(x, ctx: PrecisionContext):
    """ln Gamma(x) for real x > 0, absolute error <= 2^(-prec_bits+8).

    Shifts x upward past the convergence threshold, evaluates the Stirling
    expansion (z-1/2) ln z - z + ln(2 pi)/2 + sum B_{2j}/(2j(2j-1) z^(2j-1)),
    then subtracts log of the shift product Gamma(x+s)/Gamma(x).
    """
    total = ctx.total_bits
    with mp.workprec(total):
        xf = _to_mpf_exact(x)
        if xf <= 0:
            raise ValueError("lngamma requires x > 0, got %s" % (x,))
        sigma = stirling_shift_threshold(ctx)
        shift = 0 if xf >= sigma else int(mp.ceil(sigma - xf))
        z = xf + shift

        tol = mpf(2) ** (-total)
        result = (z - mpf(1) / 2) * mp.log(z) - z + mp.log(2 * mp.pi) / 2
        w = 1 / z
        u = w * w
        prev_mag = mp.inf
        max_terms = 4 * sigma
        for j in range(1, max_terms + 1):
            term = _stirling_coeff(j, total) * w
            mag = abs(term)
            if mag < tol:
                result += term
                break
            if mag > prev_mag:
                raise SeriesDivergenceError(
                    "Stirling terms diverging at j=%d for z=%s" % (j, z)
                )
            result += term
            prev_mag = mag
            w *= u
        else:
            raise SeriesDivergenceError(
                "Stirling series did not reach tolerance in %d terms" % max_terms
            )

        if shift:
            prod = xf
            for k in range(1, shift):
                prod *= xf + k
            result -= mp.log(prod)
    with mp.workprec(ctx.prec_bits):
        return +result


@lru_cache(maxsize=None)
def _lngamma_rational_cached(num: int, den: int, prec_bits: int, guard_bits: int):
    ctx = PrecisionContext(prec_bits, guard_bits)
    with mp.workprec(ctx.total_bits):
        xf = mpf(num) / den
    return lngamma_stirling(xf, ctx)


def lngamma_rational(r: Fraction, ctx: PrecisionContext):
    """ln Gamma at an exact rational r > 0; cached per (r, precision)."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError("lngamma requires a positive rational, got %s" % (r,))
    return _lngamma_rational_cached(r.numerator, r.denominator, ctx.prec_bits, ctx.guard_bits)


def lngamma_weierstrass(r: Fraction, J: int, ctx: PrecisionContext):
    """Independent ln Gamma oracle from the Weierstrass product series.

    Sums -gamma z - log z + sum_{j<=J} (z/j - log(1+z/j)) with the analytic
    tail estimate z^2/(2J) added.  Returns (value, tail_bound) where the true
    tail differs from the estimate by at most tail_bound = z^2/J.
    """
    r = Fraction(r)
    if not (0 < r <= 1):
        raise ValueError("Weierstrass oracle requires 0 < r <= 1, got %s" % (r,))
    if J < 10:
        raise ValueError("J must be >= 10, got %r" % (J,))
    total = ctx.total_bits
    with mp.workprec(total):
        z = _to_mpf_exact(r)
        acc = -mp.euler * z - mp.log(z)
        for j in range(1, J + 1):
            q = z / j
            acc += q - mp.log(1 + q)
        acc += z * z / (2 * J)
        tail_bound = z * z / J
    with mp.workprec(ctx.prec_bits):
        return +acc, +tail_bound


def sin_pi_rational(r: Fraction, ctx: PrecisionContext):
    """sin(pi r) for any rational r, absolute error <= 2^(-prec_bits+4).

    Argument reduction is done exactly in rational arithmetic: reduce mod 2,
    fold into [0, 1/2] via sin(pi(1-t)) = sin(pi t) and sign symmetry, then
    evaluate once in floating point.
    """
    t = Fraction(r) % 2
    sign = 1
    if t > 1:
        t -= 1
        sign = -1
    if t > Fraction(1, 2):
        t = 1 - t
    with mp.workprec(ctx.total_bits):
        val = sign * mp.sin(mp.pi * _to_mpf_exact(t))
    with mp.workprec(ctx.prec_bits):
        return +val


def log2pi(ctx: PrecisionContext):
    """ln(2 pi) at working precision (shared by every identity RHS)."""
    with mp.workprec(ctx.total_bits):
        v = mp.log(2 * mp.pi)
    with mp.workprec(ctx.prec_bits):
        return +v
