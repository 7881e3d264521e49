"""Exact integer and rational arithmetic functions: factorization, totient,
Mobius, von Mangoldt, divisor sums, Mobius inversion, lcm ranges and the
Chebyshev psi function.

Logarithmic quantities are kept exact as ``LogVector`` (integer combinations
of log p), so identities involving Lambda(n) and log lcm can be verified with
no floating point at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from mpmath import mp

from gammaprod.numeric import PrecisionContext

_FACTOR_BOUND = 2**63

# increments of a 2-3-5 wheel starting from 7
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n as ((p, e), ...) with p strictly increasing.

    Trial division with a 2-3-5 wheel; n is capped at 2^63, which covers
    every input this package ever produces.
    """
    if n < 1:
        raise ValueError("factorize requires n >= 1, got %r" % (n,))
    if n > _FACTOR_BOUND:
        raise ValueError("factorize input exceeds bound 2^63: %r" % (n,))
    out = []
    for p in (2, 3, 5):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    p, i = 7, 0
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += _WHEEL[i]
        i = (i + 1) % 8
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def phi(n: int) -> int:
    """Euler's totient via the factorization formula prod p^(e-1)(p-1)."""
    result = 1
    for p, e in factorize(n):
        result *= p ** (e - 1) * (p - 1)
    return result


def mobius(n: int) -> int:
    """Mobius mu: 0 on non-squarefree n, else (-1)^(number of prime factors)."""
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


class LogVector:
    """Exact integer combination sum c_p * log p over primes p.

    The zero vector represents log 1.  Supports +, -, integer scaling, exact
    equality, exponentiation back to an integer, and rendering as an mpf.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.coeffs = {p: c for p, c in (coeffs or {}).items() if c != 0}

    def __add__(self, other: "LogVector") -> "LogVector":
        merged = dict(self.coeffs)
        for p, c in other.coeffs.items():
            merged[p] = merged.get(p, 0) + c
        return LogVector(merged)

    def __sub__(self, other: "LogVector") -> "LogVector":
        merged = dict(self.coeffs)
        for p, c in other.coeffs.items():
            merged[p] = merged.get(p, 0) - c
        return LogVector(merged)

    def __mul__(self, k: int) -> "LogVector":
        return LogVector({p: c * k for p, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, LogVector) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_integer(self) -> int:
        """Exact exp of the vector, prod p^c_p; requires c_p >= 0."""
        if any(c < 0 for c in self.coeffs.values()):
            raise ValueError("negative exponent, not an integer: %s" % (self,))
        result = 1
        for p, c in self.coeffs.items():
            result *= p**c
        return result

    def to_mpf(self, ctx: PrecisionContext):
        with mp.workprec(ctx.total_bits):
            acc = mp.mpf(0)
            for p, c in sorted(self.coeffs.items()):
                acc += c * mp.log(p)
        with mp.workprec(ctx.prec_bits):
            return +acc

    def __repr__(self):
        if not self.coeffs:
            return "LogVector(0)"
        parts = ["%d*log %d" % (c, p) for p, c in sorted(self.coeffs.items())]
        return "LogVector(%s)" % " + ".join(parts)


ZERO_LOGVECTOR = LogVector()


def mangoldt(n: int) -> LogVector:
    """von Mangoldt Lambda(n) as an exact LogVector: log p if n = p^r, else 0."""
    fac = factorize(n)
    if len(fac) == 1:
        return LogVector({fac[0][0]: 1})
    return ZERO_LOGVECTOR


def log_as_vector(n: int) -> LogVector:
    """log n as an exact LogVector (coefficients = prime exponents of n)."""
    return LogVector({p: e for p, e in factorize(n)})


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def mobius_invert(f, n: int):
    """sum_{d | n} mu(d) * f(n/d), for f valued in any abelian group.

    Works uniformly for ints, Fractions, LogVectors and mpf values.
    """
    if n < 1:
        raise ValueError("mobius_invert requires n >= 1, got %r" % (n,))
    acc = f(n)  # d = 1 term
    for d in divisors(n)[1:]:
        mu = mobius(d)
        if mu == 1:
            acc = acc + f(n // d)
        elif mu == -1:
            acc = acc - f(n // d)
    return acc


def primes_upto(n: int) -> list[int]:
    """Primes <= n by Eratosthenes sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(2, n + 1) if sieve[p]]


_LCM_BOUND = 10**5


def lcm_upto(N: int) -> int:
    """Exact lcm[1..N] as prod_{p <= N} p^floor(log_p N)."""
    if N < 1 or N > _LCM_BOUND:
        raise ValueError("lcm_upto requires 1 <= N <= %d, got %r" % (_LCM_BOUND, N))
    result = 1
    for p in primes_upto(N):
        pe = p
        while pe * p <= N:
            pe *= p
        result *= pe
    if N <= 2000:
        # cheap enough to cross-check against the gcd route
        assert result == lcm_upto_iterated(N), "lcm paths disagree at N=%d" % N
    return result


def lcm_upto_iterated(N: int) -> int:
    """lcm[1..N] by iterated gcd, the independent slow route."""
    if N < 1:
        raise ValueError("requires N >= 1, got %r" % (N,))
    result = 1
    for k in range(2, N + 1):
        result = result * k // math.gcd(result, k)
    return result


def chebyshev_psi(N: int) -> LogVector:
    """psi(N) = sum_{n <= N} Lambda(n) as an exact LogVector.

    Equals the exponent vector of lcm[1..N]: coefficient floor(log_p N) on
    each prime p <= N.
    """
    if N < 1:
        raise ValueError("chebyshev_psi requires N >= 1, got %r" % (N,))
    coeffs = {}
    for p in primes_upto(N):
        e, pe = 1, p
        while pe * p <= N:
            pe *= p
            e += 1
        coeffs[p] = e
    return LogVector(coeffs)


@dataclass(frozen=True)
class ArithmeticFunctionTable:
    """Sieved phi, mu and Lambda up to n_max, immutable once built.

    Index 0 is padding; entries are valid for 1 <= n <= n_max.
    """

    n_max: int
    phi: tuple[int, ...]
    mu: tuple[int, ...]
    mangoldt: tuple[LogVector, ...]

    @classmethod
    def build(cls, n_max: int) -> "ArithmeticFunctionTable":
        if n_max < 1:
            raise ValueError("n_max must be >= 1, got %r" % (n_max,))
        spf = list(range(n_max + 1))  # smallest prime factor
        for p in range(2, math.isqrt(n_max) + 1):
            if spf[p] == p:
                for m in range(p * p, n_max + 1, p):
                    if spf[m] == m:
                        spf[m] = p
        phis = [0] * (n_max + 1)
        mus = [0] * (n_max + 1)
        lams = [ZERO_LOGVECTOR] * (n_max + 1)
        if n_max >= 1:
            phis[1] = mus[1] = 1
        for n in range(2, n_max + 1):
            p = spf[n]
            m, e = n, 0
            while m % p == 0:
                m //= p
                e += 1
            if m == 1:
                phis[n] = p ** (e - 1) * (p - 1)
                mus[n] = -1 if e == 1 else 0
                lams[n] = LogVector({p: 1})
            else:
                phis[n] = phis[m] * p ** (e - 1) * (p - 1)
                mus[n] = -mus[m] if e == 1 else 0
        return cls(n_max, tuple(phis), tuple(mus), tuple(lams))
