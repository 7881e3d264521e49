"""Left and right sides of every product identity, in the log domain.

Each check returns a VerificationRecord with both sides rendered as decimal
strings, the residual, and a pass flag against the tolerance model
tolerance(p, m) = m * 2^(-p+16) for an identity summing m transcendental
terms.  Products are never exponentiated except for display: Gamma-product
magnitudes overflow any fixed-range float long before n reaches our caps.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf, nstr

from gammaprod import numbertheory as nt
from gammaprod.cyclotomic import cyclotomic_at_one
from gammaprod.numeric import PrecisionContext, lngamma_rational, sin_pi_rational
from gammaprod.sequences import coprime_residues, farey_pairs

N_CAP_DEFAULT = 512
FAREY_CAP_DEFAULT = 300


@dataclass
class VerificationRecord:
    identity_id: str
    parameter: int
    prec_bits: int
    lhs: str
    rhs: str
    abs_err: str
    rel_err: str
    passed: bool
    elapsed_ms: int


def tolerance(prec_bits: int, n_terms: int):
    """m * 2^(-p+16): linear accumulation bound with a generous constant."""
    return mpf(max(1, n_terms)) * mpf(2) ** (-prec_bits + 16)


def _digits(prec_bits: int) -> int:
    return max(20, math.ceil(prec_bits * 0.30103))


def _record(identity_id, parameter, ctx, lhs, rhs, n_terms, t0,
            extra_residuals=(), exact_ok=True):
    with mp.workprec(ctx.total_bits):
        abs_err = abs(lhs - rhs)
        for r in extra_residuals:
            if r > abs_err:
                abs_err = r
        scale = max(abs(lhs), abs(rhs))
        rel_err = abs_err / scale if scale > 0 else abs_err
        ok = exact_ok and abs_err <= tolerance(ctx.prec_bits, n_terms)
    d = _digits(ctx.prec_bits)
    return VerificationRecord(
        identity_id=identity_id,
        parameter=parameter,
        prec_bits=ctx.prec_bits,
        lhs=nstr(lhs, d),
        rhs=nstr(rhs, d),
        abs_err=nstr(abs_err, 12),
        rel_err=nstr(rel_err, 12),
        passed=bool(ok),
        elapsed_ms=int(round((time.perf_counter() - t0) * 1000)),
    )


def _check_range(name, value, lo, hi):
    if not (lo <= value <= hi):
        raise ValueError("%s requires %d <= parameter <= %d, got %r" % (name, lo, hi, value))


def _log2pi():
    return mp.log(2 * mp.pi)


def eq1_check(n: int, ctx: PrecisionContext) -> VerificationRecord:
    """prod_{k=1..n} Gamma(k/n) = (2 pi)^((n-1)/2) / sqrt(n), in logs."""
    _check_range("eq1", n, 1, N_CAP_DEFAULT)
    t0 = time.perf_counter()
    with mp.workprec(ctx.total_bits):
        lhs = mp.fsum(lngamma_rational(Fraction(k, n), ctx) for k in range(1, n + 1))
        rhs = mpf(n - 1) / 2 * _log2pi() - mp.log(n) / 2
    return _record("eq1", n, ctx, lhs, rhs, n, t0)


def theorem1_direct(n: int, ctx: PrecisionContext) -> VerificationRecord:
    """prod over coprime k of Gamma(k/n) = (2 pi)^(phi(n)/2) e^(-Lambda(n)/2)."""
    _check_range("theorem1_direct", n, 2, N_CAP_DEFAULT)
    t0 = time.perf_counter()
    with mp.workprec(ctx.total_bits):
        lhs = _coprime_lngamma_sum(n, ctx)
        rhs = _theorem1_rhs(n, ctx)
    return _record("theorem1_direct", n, ctx, lhs, rhs, nt.phi(n), t0)


def _coprime_lngamma_sum(n: int, ctx: PrecisionContext):
    return mp.fsum(lngamma_rational(Fraction(k, n), ctx) for k in coprime_residues(n))


def _theorem1_rhs(n: int, ctx: PrecisionContext):
    # Lambda(n) rendered from its exact LogVector, never from floats
    return mpf(nt.phi(n)) / 2 * _log2pi() - nt.mangoldt(n).to_mpf(ctx) / 2


def theorem1_inversion(n: int, ctx: PrecisionContext) -> VerificationRecord:
    """The proof route: R(n) = sum_{d|n} mu(d) F(n/d) with F in closed form.

    Uses no Gamma evaluations; compared against both the closed-form RHS and
    the direct coprime sum, and the worse residual is recorded.
    """
    _check_range("theorem1_inversion", n, 2, N_CAP_DEFAULT)
    t0 = time.perf_counter()
    with mp.workprec(ctx.total_bits):
        log2pi = _log2pi()

        def closed_form_F(d: int):
            return mpf(d - 1) / 2 * log2pi - mp.log(d) / 2

        inv = nt.mobius_invert(closed_form_F, n)
        rhs = _theorem1_rhs(n, ctx)
        direct = _coprime_lngamma_sum(n, ctx)
        extra = (abs(inv - direct),)
    return _record("theorem1_inversion", n, ctx, inv, rhs, nt.phi(n), t0,
                   extra_residuals=extra)


def midpoint_check(n: int, ctx: PrecisionContext) -> VerificationRecord:
    """prod_{k=1..n} Gamma((2k-1)/(2n)) = (2 pi)^(n/2) / sqrt(2), in logs."""
    _check_range("midpoint", n, 1, N_CAP_DEFAULT)
    t0 = time.perf_counter()
    with mp.workprec(ctx.total_bits):
        lhs = mp.fsum(
            lngamma_rational(Fraction(2 * k - 1, 2 * n), ctx) for k in range(1, n + 1)
        )
        rhs = mpf(n) / 2 * _log2pi() - mp.log(2) / 2
    return _record("midpoint", n, ctx, lhs, rhs, n, t0)


def geometric_mean_check(n: int, ctx: PrecisionContext) -> VerificationRecord:
    """Midpoint Riemann mean of ln Gamma minus ln(2 pi)/2.

    The midpoint identity forces the deviation to be exactly -(ln 2)/(2n),
    which exhibits convergence of the mean to the integral value ln(2 pi)/2.
    """
    if n < 1 or n > 10**4:
        raise ValueError("geometric_mean requires 1 <= n <= 10^4, got %r" % (n,))
    t0 = time.perf_counter()
    with mp.workprec(ctx.total_bits):
        mean = mp.fsum(
            lngamma_rational(Fraction(2 * k - 1, 2 * n), ctx) for k in range(1, n + 1)
        ) / n
        deviation = mean - _log2pi() / 2
        expected = -mp.log(2) / (2 * n)
    return _record("geometric_mean", n, ctx, deviation, expected, n, t0)


def farey_product_check(N: int, ctx: PrecisionContext) -> VerificationRecord:
    """prod_{r in F_N} Gamma(r)/sqrt(2 pi) = lcm[1..N]^(-1/2), in logs.

    The RHS is anchored to the exact big integer: psi(N)'s exponent vector is
    first checked against lcm[1..N] with no floating point at all.
    """
    _check_range("farey_product", N, 2, FAREY_CAP_DEFAULT)
    t0 = time.perf_counter()
    psi = nt.chebyshev_psi(N)
    exact_ok = psi.to_integer() == nt.lcm_upto(N)
    count = 0
    with mp.workprec(ctx.total_bits):
        total = mp.mpf(0)
        for p, q in farey_pairs(N):
            total += lngamma_rational(Fraction(p, q), ctx)
            count += 1
        lhs = total - count * _log2pi() / 2
        rhs = -psi.to_mpf(ctx) / 2
    return _record("farey_product", N, ctx, lhs, rhs, count, t0, exact_ok=exact_ok)


def psi_lcm_check(N: int, ctx: PrecisionContext | None = None) -> VerificationRecord:
    """Exact test, no floats: exponent vector of lcm[1..N] equals psi(N)."""
    if N < 1:
        raise ValueError("psi_lcm requires N >= 1, got %r" % (N,))
    ctx = ctx or PrecisionContext()
    t0 = time.perf_counter()
    psi = nt.chebyshev_psi(N)
    lcm = nt.lcm_upto(N)
    equal = psi.to_integer() == lcm
    with mp.workprec(ctx.total_bits):
        lhs = psi.to_mpf(ctx)
        rhs = mp.log(lcm)
    rec = _record("psi_lcm", N, ctx, lhs, rhs, 1, t0, exact_ok=equal)
    if equal:
        # the verdict is the exact integer comparison, not the rendering
        rec.abs_err = "0.0"
        rec.rel_err = "0.0"
        rec.passed = True
    else:
        rec.passed = False
    return rec


def sine_lcm_check(N: int, ctx: PrecisionContext) -> VerificationRecord:
    """lcm[1..N] = (1/2) (prod_{r in F_N, r <= 1/2} 2 sin(pi r))^2, in logs."""
    _check_range("sine_lcm", N, 2, FAREY_CAP_DEFAULT)
    t0 = time.perf_counter()
    count = 0
    with mp.workprec(ctx.total_bits):
        log2 = mp.log(2)
        total = mp.mpf(0)
        for p, q in farey_pairs(N):
            if 2 * p > q:  # r > 1/2
                break
            total += log2 + mp.log(sin_pi_rational(Fraction(p, q), ctx))
            count += 1
        lhs = nt.chebyshev_psi(N).to_mpf(ctx)
        rhs = -log2 + 2 * total
    return _record("sine_lcm", N, ctx, lhs, rhs, count, t0)


def sine_cyclotomic_check(n: int, ctx: PrecisionContext) -> VerificationRecord:
    """prod over coprime k < n of 2 sin(pi k/n) = Phi_n(1), in logs.

    Also cross-checks the coprime Gamma product against the sine sum via the
    reflection formula as an internal identity.
    """
    _check_range("sine_cyclotomic", n, 2, N_CAP_DEFAULT)
    t0 = time.perf_counter()
    phi_n = nt.phi(n)
    at_one = cyclotomic_at_one(n)
    with mp.workprec(ctx.total_bits):
        log2 = mp.log(2)
        sine_sum = mp.fsum(
            log2 + mp.log(sin_pi_rational(Fraction(k, n), ctx))
            for k in coprime_residues(n)
            if k < n
        )
        rhs = mp.log(at_one)
        gamma_sum = _coprime_lngamma_sum(n, ctx)
        reflection_resid = abs(
            2 * gamma_sum + sine_sum - phi_n * (mp.log(mp.pi) + log2)
        )
    return _record("sine_cyclotomic", n, ctx, sine_sum, rhs, 2 * phi_n, t0,
                   extra_residuals=(reflection_resid,))


# identity id -> (check function, parameter family, minimum parameter);
# family "n" walks denominators, "N" walks Farey orders
CATALOG = {
    "eq1": (eq1_check, "n", 1),
    "theorem1_direct": (theorem1_direct, "n", 2),
    "theorem1_inversion": (theorem1_inversion, "n", 2),
    "midpoint": (midpoint_check, "n", 1),
    "geometric_mean": (geometric_mean_check, "n", 1),
    "farey_product": (farey_product_check, "N", 2),
    "psi_lcm": (psi_lcm_check, "N", 1),
    "sine_lcm": (sine_lcm_check, "N", 2),
    "sine_cyclotomic": (sine_cyclotomic_check, "n", 2),
}


def run_check(identity_id: str, parameter: int, ctx: PrecisionContext) -> VerificationRecord:
    """Dispatch one identity check by catalog id."""
    try:
        fn, _, _ = CATALOG[identity_id]
    except KeyError:
        raise ValueError("unknown identity %r" % (identity_id,)) from None
    return fn(parameter, ctx)
