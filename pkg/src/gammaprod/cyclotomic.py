"""Exact integer-coefficient polynomials and cyclotomic polynomials Phi_n.

Phi_n(1) is the exact-arithmetic counterpart of exp(Lambda(n)): p when n is a
power of the prime p, and 1 otherwise.  All arithmetic is over Python big
integers; divisions are checked and fail loudly on a nonzero remainder.
"""

from __future__ import annotations

import threading

from gammaprod.numbertheory import divisors, factorize, mobius

_CYCLO_BOUND = 10**4


class ExactDivisionError(ArithmeticError):
    """Polynomial division left a nonzero remainder where none was possible."""


class IntPolynomial:
    """Dense integer polynomial; coeffs[i] is the coefficient of x^i.

    No trailing zero coefficients; the zero polynomial has empty coeffs.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_mul(self, other)

    def __repr__(self):
        return "IntPolynomial(%r)" % (list(self.coeffs),)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = "x" if mag == 1 else "%d*x" % mag
            else:
                body = "x^%d" % i if mag == 1 else "%d*x^%d" % (mag, i)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Exact product (schoolbook; operand degrees here stay small)."""
    if a.is_zero() or b.is_zero():
        return IntPolynomial()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca:
            for j, cb in enumerate(b.coeffs):
                out[i + j] += ca * cb
    return IntPolynomial(out)


def poly_divexact(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Exact quotient a / b for monic b; raises ExactDivisionError otherwise."""
    if b.is_zero() or b.coeffs[-1] != 1:
        raise ValueError("divisor must be monic, got %r" % (b,))
    if a.is_zero():
        return IntPolynomial()
    if a.degree < b.degree:
        raise ExactDivisionError("degree of %r below divisor %r" % (a, b))
    rem = list(a.coeffs)
    db = b.degree
    q = [0] * (a.degree - db + 1)
    for i in range(a.degree - db, -1, -1):
        c = rem[i + db]
        q[i] = c
        if c:
            for j, bc in enumerate(b.coeffs):
                rem[i + j] -= c * bc
    if any(rem):
        raise ExactDivisionError("nonzero remainder dividing %r by %r" % (a, b))
    return IntPolynomial(q)


# -- sparse binomial helpers used by the cyclotomic recurrence ---------------
# Multiplying or exact-dividing by x^d - 1 costs O(degree), so Phi_n for
# squarefree n is built entirely from these passes.


def _mul_binomial(a: list[int], d: int) -> list[int]:
    out = [0] * d + a
    for i, c in enumerate(a):
        out[i] -= c
    return out


def _divexact_binomial(a: list[int], d: int) -> list[int]:
    deg = len(a) - 1
    if deg < d:
        raise ExactDivisionError("degree %d below binomial degree %d" % (deg, d))
    q = [0] * (deg - d + 1)
    for i in range(deg - d, -1, -1):
        q[i] = a[i + d] + (q[i + d] if i + d < len(q) else 0)
    for j in range(d):
        if a[j] + (q[j] if j < len(q) else 0) != 0:
            raise ExactDivisionError("nonzero remainder dividing by x^%d - 1" % d)
    return q


_cyclo_memo: dict[int, IntPolynomial] = {}
_cyclo_lock = threading.Lock()


def _cyclotomic_squarefree(n: int) -> IntPolynomial:
    # Phi_n = prod_{d|n} (x^d - 1)^mu(n/d): form the full numerator first,
    # then peel off each denominator binomial (each division stays exact
    # because every Phi_e multiplicity remains non-negative throughout).
    pos = [d for d in divisors(n) if mobius(n // d) == 1]
    neg = [d for d in divisors(n) if mobius(n // d) == -1]
    coeffs = [1]
    for d in pos:
        coeffs = _mul_binomial(coeffs, d)
    for d in neg:
        coeffs = _divexact_binomial(coeffs, d)
    return IntPolynomial(coeffs)


def cyclotomic_poly(n: int) -> IntPolynomial:
    """Phi_n: monic, integer coefficients, degree phi(n); memoized.

    Non-squarefree n reduces to the radical via Phi_n(x) = Phi_rad(x^(n/rad)).
    """
    if n < 1 or n > _CYCLO_BOUND:
        raise ValueError("cyclotomic order must satisfy 1 <= n <= %d, got %r" % (_CYCLO_BOUND, n))
    cached = _cyclo_memo.get(n)
    if cached is not None:
        return cached
    rad = 1
    for p, _ in factorize(n):
        rad *= p
    if n == 1:
        poly = IntPolynomial([-1, 1])
    elif rad == n:
        poly = _cyclotomic_squarefree(n)
    else:
        base = cyclotomic_poly(rad)
        step = n // rad
        inflated = [0] * (step * base.degree + 1)
        for i, c in enumerate(base.coeffs):
            inflated[i * step] = c
        poly = IntPolynomial(inflated)
    with _cyclo_lock:
        _cyclo_memo.setdefault(n, poly)
    return poly


def cyclotomic_at_one(n: int) -> int:
    """Phi_n(1) for n >= 2: equals p when n = p^r and 1 otherwise.

    Only the radical's polynomial is needed, since x = 1 is fixed by the
    inflation substitution.
    """
    if n < 2:
        raise ValueError("requires n >= 2 (Phi_1(1) = 0 is excluded), got %r" % (n,))
    rad = 1
    for p, _ in factorize(n):
        rad *= p
    return sum(cyclotomic_poly(rad).coeffs)
