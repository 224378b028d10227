"""Brute-force integration path and Legendre-basis projection."""

import random
from fractions import Fraction

from legoverlap import (
    Polynomial,
    integrate_over_interval,
    legendre,
    legendre_project,
    overlap_oracle,
)


def test_integrate_monomials():
    assert integrate_over_interval(Polynomial([1])) == 2
    assert integrate_over_interval(Polynomial([0, 1])) == 0
    assert integrate_over_interval(Polynomial([0, 0, 1])) == Fraction(2, 3)
    assert integrate_over_interval(Polynomial()) == 0


def test_oracle_reproduces_reference_values():
    assert overlap_oracle(0, 1, 0, 1) == 2
    assert overlap_oracle(0, 2, 0, 2) == 6
    assert overlap_oracle(10, 3, 10, 3) == 19641872250


def test_oracle_orthogonality():
    for n in range(19):
        for m in range(19):
            expected = Fraction(2, 2 * n + 1) if n == m else 0
            assert overlap_oracle(n, m, 0, 0) == expected, (n, m)


def test_oracle_integrand_parity():
    """Odd total parity integrates to zero, straight from the expansion."""
    for n in range(10):
        for m in range(10):
            for q in range(3):
                for k in range(3):
                    if (n + m + q + k) % 2:
                        assert overlap_oracle(n, m, q, k) == 0, (n, m, q, k)


def test_projection_examples():
    assert legendre_project(legendre(5)) == [0, 0, 0, 0, 0, 1]
    assert legendre_project(legendre(2).differentiate()) == [0, 3]
    assert legendre_project(Polynomial()) == []


def test_projection_round_trip_random_polynomials():
    rng = random.Random(20260809)
    for _ in range(25):
        degree = rng.randrange(0, 16)
        coeffs = [
            Fraction(rng.randrange(-50, 51), rng.randrange(1, 13))
            for _ in range(degree + 1)
        ]
        p = Polynomial(coeffs)
        rebuilt = Polynomial()
        for j, a in enumerate(legendre_project(p)):
            rebuilt = rebuilt + a * legendre(j)
        assert rebuilt == p


def test_projection_of_derivative_stops_below_degree():
    """P'_n expands in P_0 .. P_{n-1} only."""
    for n in range(1, 13):
        coeffs = legendre_project(legendre(n).differentiate())
        assert len(coeffs) == n
        assert coeffs[-1] != 0
