import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammaprod.numbertheory import (
    ArithmeticFunctionTable,
    LogVector,
    ZERO_LOGVECTOR,
    chebyshev_psi,
    divisors,
    factorize,
    lcm_upto,
    lcm_upto_iterated,
    log_as_vector,
    mangoldt,
    mobius,
    mobius_invert,
    phi,
)


def phi_bruteforce(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


class TestFactorize:
    def test_one(self):
        assert factorize(1) == ()

    def test_twelve(self):
        assert factorize(12) == ((2, 2), (3, 1))

    def test_prime(self):
        assert factorize(97) == ((97, 1),)

    @given(st.integers(min_value=1, max_value=10**6))
    @settings(max_examples=200)
    def test_reconstructs(self, n):
        prod = 1
        prev_p = 0
        for p, e in factorize(n):
            assert p > prev_p and e >= 1
            prev_p = p
            prod *= p**e
        assert prod == n

    def test_rejects(self):
        with pytest.raises(ValueError):
            factorize(0)
        with pytest.raises(ValueError):
            factorize(2**63 + 1)


class TestPhiMuMangoldt:
    def test_phi_examples(self):
        assert phi(1) == 1
        assert phi(12) == phi_bruteforce(12) == 4
        assert phi(1024) == phi_bruteforce(1024) == 512

    def test_mobius_examples(self):
        assert mobius(1) == 1
        assert mobius(6) == 1
        assert mobius(12) == 0

    def test_mangoldt_examples(self):
        assert mangoldt(1) == ZERO_LOGVECTOR
        assert mangoldt(8) == LogVector({2: 1})
        assert mangoldt(6) == ZERO_LOGVECTOR


class TestDivisors:
    def test_examples(self):
        assert divisors(1) == [1]
        assert divisors(12) == [1, 2, 3, 4, 6, 12]
        assert divisors(49) == [1, 7, 49]

    @given(st.integers(min_value=1, max_value=5000))
    @settings(max_examples=100)
    def test_matches_scan(self, n):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


class TestMobiusInvert:
    def test_identity_gives_phi(self):
        assert mobius_invert(lambda d: d, 12) == 4 == phi(12)

    def test_constant_one_vanishes(self):
        assert mobius_invert(lambda d: 1, 6) == 0

    def test_log_gives_mangoldt(self):
        assert mobius_invert(log_as_vector, 8) == LogVector({2: 1})

    def test_round_trip_random(self):
        # f(n) = sum_{d|n} g(d)  =>  inversion of f recovers g(n) exactly
        rng = random.Random(991)
        for _ in range(200):
            n = rng.randint(1, 10**4)
            g = {d: rng.randint(-50, 50) for d in divisors(n)}

            def f(m):
                return sum(g[d] for d in divisors(m))

            assert mobius_invert(f, n) == g[n]

    def test_works_with_fractions(self):
        # sum mu(d) (n/d)/n = phi(n)/n
        n = 30
        assert mobius_invert(lambda d: Fraction(d, n), n) == Fraction(phi(n), n)


class TestDivisorSumInvariants:
    def test_totient_sum(self):
        for n in range(1, 301):
            assert sum(phi(d) for d in divisors(n)) == n

    def test_mobius_sum(self):
        for n in range(1, 301):
            assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)

    def test_third_sum_exact(self):
        for n in range(1, 301):
            assert mobius_invert(log_as_vector, n) == mangoldt(n)


class TestLcmAndPsi:
    def test_lcm_examples(self):
        assert lcm_upto(1) == 1
        assert lcm_upto(10) == 2520
        assert lcm_upto(20) == 232792560

    def test_lcm_paths_agree(self):
        for N in (1, 2, 17, 100, 500):
            assert lcm_upto(N) == lcm_upto_iterated(N)

    def test_lcm_rejects(self):
        with pytest.raises(ValueError):
            lcm_upto(0)
        with pytest.raises(ValueError):
            lcm_upto(10**5 + 1)

    def test_psi_examples(self):
        assert chebyshev_psi(1) == ZERO_LOGVECTOR
        assert chebyshev_psi(10) == LogVector({2: 3, 3: 2, 5: 1, 7: 1})
        assert chebyshev_psi(4) == LogVector({2: 2, 3: 1})

    def test_psi_matches_mangoldt_sum(self):
        for N in (1, 2, 30, 100):
            acc = ZERO_LOGVECTOR
            for n in range(1, N + 1):
                acc = acc + mangoldt(n)
            assert chebyshev_psi(N) == acc

    def test_psi_exponent_vector_is_lcm(self):
        for N in (1, 10, 50, 300):
            assert chebyshev_psi(N).to_integer() == lcm_upto(N)


class TestLogVector:
    def test_group_laws(self):
        a = LogVector({2: 3, 5: -1})
        b = LogVector({2: -3, 3: 2})
        assert a + b == LogVector({3: 2, 5: -1})
        assert a - a == ZERO_LOGVECTOR
        assert 2 * a == LogVector({2: 6, 5: -2})
        assert (0 * a).is_zero()

    def test_to_integer_rejects_negative(self):
        with pytest.raises(ValueError):
            LogVector({2: -1}).to_integer()


class TestArithmeticFunctionTable:
    def test_matches_pointwise_functions(self):
        table = ArithmeticFunctionTable.build(2000)
        assert table.phi[1] == table.mu[1] == 1
        assert table.mangoldt[1].is_zero()
        for n in range(1, 2001):
            assert table.phi[n] == phi(n)
            assert table.mu[n] == mobius(n)
            assert table.mangoldt[n] == mangoldt(n)
