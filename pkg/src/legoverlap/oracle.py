"""Brute-force symbolic ground truth for the closed-form overlaps.

Everything here works directly on exact coefficient vectors: expand,
differentiate, multiply, integrate term by term.  It deliberately never
imports the closed-form module, so the two evaluation paths only meet in
the test suite and the verification sweep.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .legendre import Polynomial, legendre

__all__ = ["integrate_over_interval", "overlap_oracle", "legendre_project"]


def integrate_over_interval(p: Polynomial) -> Fraction:
    """Definite integral of p over [-1, 1]: term-wise 2/(p+1) for even powers."""
    total = Fraction(0)
    for power, c in enumerate(p.coeffs):
        if power % 2 == 0 and c:
            total += c * Fraction(2, power + 1)
    return total


@lru_cache(maxsize=None)
def _legendre_derivative(n: int, order: int) -> Polynomial:
    return legendre(n).differentiate(order)


@lru_cache(maxsize=None)
def overlap_oracle(n: int, m: int, q: int, k: int) -> Fraction:
    """Integral of P_n^(q) P_m^(k) over [-1, 1] by literal expansion."""
    return integrate_over_interval(_legendre_derivative(n, q) * _legendre_derivative(m, k))


def legendre_project(p: Polynomial) -> list[Fraction]:
    """Coefficients a_j with p = sum_j a_j P_j.

    Computed as a_j = (2j+1)/2 * integral of p P_j; the returned list has
    degree(p)+1 entries (empty for the zero polynomial) and reconstructs p
    exactly.
    """
    if p.degree is None:
        return []
    return [
        Fraction(2 * j + 1, 2) * integrate_over_interval(p * legendre(j))
        for j in range(p.degree + 1)
    ]
