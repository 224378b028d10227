"""Exact Legendre polynomials over rational coefficients.

Polynomials are stored densely: ``coeffs[p]`` multiplies ``x**p``.  All
coefficients are ``fractions.Fraction`` instances, so evaluation,
differentiation, and products are exact; nothing in this module rounds.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

__all__ = ["Polynomial", "legendre", "parity_sign"]

Scalar = int | Fraction


class Polynomial:
    """Dense polynomial with exact rational coefficients.

    Immutable; trailing zero coefficients are stripped on construction so
    the zero polynomial is always the empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int | None:
        """Degree of the polynomial, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Polynomial is immutable")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return Polynomial()
            # Naive convolution; quadratic but exact and easy to audit.
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        return Polynomial([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def differentiate(self, k: int = 1) -> "Polynomial":
        """k-fold derivative; the zero polynomial once k exceeds the degree."""
        if k < 0:
            raise ValueError("derivative order must be non-negative")
        cs = self.coeffs
        for _ in range(k):
            if len(cs) <= 1:
                return Polynomial()
            cs = tuple(p * cs[p] for p in range(1, len(cs)))
        return Polynomial(cs)

    def __call__(self, x: Scalar) -> Fraction:
        """Exact evaluation at x by Horner's scheme."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@lru_cache(maxsize=None)
def legendre(n: int) -> Polynomial:
    """Legendre polynomial P_n with exact rational coefficients.

    Built by the Bonnet recurrence (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}
    starting from P_0 = 1 and P_1 = x, normalized so that P_n(1) = 1.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    if n == 0:
        return Polynomial([1])
    prev, cur = Polynomial([1]), Polynomial([0, 1])
    for j in range(1, n):
        shifted = Polynomial((Fraction(0),) + cur.coeffs)  # x * P_j
        prev, cur = cur, Fraction(2 * j + 1, j + 1) * shifted - Fraction(j, j + 1) * prev
    return cur


def parity_sign(n: int, k: int) -> int:
    """Sign in P_n^(k)(-x) = (-1)**(n+k) P_n^(k)(x): +1 iff n+k is even."""
    return 1 if (n + k) % 2 == 0 else -1
