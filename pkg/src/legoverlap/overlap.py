"""Closed-form overlap integrals of differentiated Legendre polynomials.

Evaluates the integral over [-1, 1] of P_n^(q)(x) P_m^(k)(x) without ever
expanding a polynomial: repeated integration by parts reduces everything
to parity filters, step-function degree gates, and alternating sums of
endpoint values P^(d)(1) = (d+N)! / (2^d d! (N-d)!).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import NamedTuple

__all__ = [
    "OverlapQuery",
    "OverlapResult",
    "VanishingReason",
    "theta",
    "parity_filter",
    "classify_vanishing",
    "overlap_p_dp",
    "overlap_p_ddp",
    "overlap_p_dk",
    "overlap_dp_dp",
    "overlap_general",
    "boundary_term_sum",
]


def theta(x: int) -> int:
    """Right-continuous step function: 1 for x > 0, 0 for x <= 0."""
    return 1 if x > 0 else 0


def parity_filter(s: int) -> int:
    """1 - (-1)**s: equals 2 for odd s and 0 for even s."""
    return 2 if s % 2 else 0


class VanishingReason(enum.Enum):
    """Why an overlap integral is zero (NONE for nonzero values)."""

    NONE = "none"
    PARITY = "parity"
    DEGREE_CONSTRAINT = "degree_constraint"
    DERIVATIVE_ANNIHILATION = "derivative_annihilation"


class OverlapQuery(NamedTuple):
    """One overlap integral: degrees n, m and derivative orders q, k."""

    n: int
    m: int
    q: int
    k: int


@dataclass(frozen=True)
class OverlapResult:
    value: Fraction
    vanishing_reason: VanishingReason


def classify_vanishing(n: int, m: int, q: int, k: int, value: Fraction) -> VanishingReason:
    """Attribute a zero value to its structural cause.

    When several causes apply the ranking is annihilation > parity >
    degree constraint; a nonzero value is always NONE.
    """
    if q > n or k > m:
        return VanishingReason.DERIVATIVE_ANNIHILATION
    if (n + m + q + k) % 2:
        return VanishingReason.PARITY
    if value == 0:
        return VanishingReason.DEGREE_CONSTRAINT
    return VanishingReason.NONE


def _check_query(n: int, m: int, q: int, k: int) -> None:
    if n < 0 or m < 0 or q < 0 or k < 0:
        raise ValueError("all overlap indices must be non-negative")


def _scaled_endpoint(d: int, deg: int) -> int:
    """(d+deg)! / (d! (deg-d)!), i.e. 2^d * P_deg^(d)(1).

    Zero once d > deg: the factorial in the denominator would have a
    negative argument, matching the annihilated derivative.
    """
    if d > deg:
        return 0
    return factorial(d + deg) // (factorial(d) * factorial(deg - d))


def _orthogonality(n: int, m: int) -> OverlapResult:
    value = Fraction(2, 2 * n + 1) if n == m else Fraction(0)
    return OverlapResult(value, classify_vanishing(n, m, 0, 0, value))


def overlap_p_dp(n: int, m: int) -> OverlapResult:
    """Integral of P_n P'_m: 2 when n+m is odd and n < m, otherwise 0."""
    _check_query(n, m, 0, 1)
    value = Fraction(theta(m - n) * parity_filter(n + m))
    return OverlapResult(value, classify_vanishing(n, m, 0, 1, value))


def overlap_p_ddp(n: int, m: int) -> OverlapResult:
    """Integral of P_n P''_m: m(m+1) - n(n+1) when n+m is even and n < m-1, else 0."""
    _check_query(n, m, 0, 2)
    gate = theta((m - 1) - n) * parity_filter(n + m + 1)
    value = gate * (Fraction(m * (m + 1), 2) - Fraction(n * (n + 1), 2))
    return OverlapResult(value, classify_vanishing(n, m, 0, 2, value))


def overlap_p_dk(n: int, m: int, k: int) -> OverlapResult:
    """Integral of P_n P_m^(k) for any k >= 1.

    The value is the alternating endpoint-ladder sum

        theta((m-(k-1)) - n) [1 - (-1)^(n+m+k-1)] / 2^(k-1)
            * sum_{j=1..k} (-1)^(j-1) 2^(j-1) P_n^(j-1)(1) 2^(k-j) P_m^(k-j)(1)

    which stays valid verbatim on degenerate inputs thanks to the
    zero-for-negative-factorial convention in the endpoint terms.
    k = 0 falls back to plain orthogonality.
    """
    _check_query(n, m, 0, k)
    if k == 0:
        return _orthogonality(n, m)
    gate = theta((m - (k - 1)) - n) * parity_filter(n + m + k - 1)
    total = 0
    if gate:
        for j in range(1, k + 1):
            total += (-1) ** (j - 1) * _scaled_endpoint(j - 1, n) * _scaled_endpoint(k - j, m)
    value = Fraction(gate * total, 1 << (k - 1))
    return OverlapResult(value, classify_vanishing(n, m, 0, k, value))


def overlap_dp_dp(n: int, m: int) -> OverlapResult:
    """Integral of P'_n P'_m: min(n,m)(min(n,m)+1) when n+m is even, else 0."""
    _check_query(n, m, 1, 1)
    gate = theta((m - 1) - n)
    value = parity_filter(n + m + 1) * (
        Fraction(m * (m + 1), 2) * (1 - gate) + Fraction(n * (n + 1), 2) * gate
    )
    return OverlapResult(value, classify_vanishing(n, m, 1, 1, value))


def overlap_general(n: int, m: int, q: int, k: int) -> OverlapResult:
    """Integral of P_n^(q) P_m^(k) for arbitrary non-negative indices.

    Shifting all q derivatives off the first factor leaves an endpoint
    ladder plus (-1)^q times the single-sided integral of P_n P_m^(k+q),
    itself an endpoint ladder behind a degree gate:

        [1 - (-1)^(n+m+k+q-1)] / 2^(k+q-1) * (
            sum_{j=1..q}   (-1)^(j-1) E(q-j, n) E(k+j-1, m)
          + (-1)^q theta((m-(k+q-1)) - n)
            sum_{j=1..k+q} (-1)^(j-1) E(j-1, n) E(k+q-j, m) )

    with E(d, N) = (d+N)!/(d! (N-d)!).  Degenerate q > n or k > m inputs
    come out zero through the same convention.  The pure orthogonality
    case q = k = 0 is dispatched separately (2/(2n+1) times delta_nm);
    the derivative-transfer expansion needs at least one differentiation.
    """
    _check_query(n, m, q, k)
    if q == 0 and k == 0:
        return _orthogonality(n, m)
    pf = parity_filter(n + m + q + k - 1)
    total = 0
    if pf:
        for j in range(1, q + 1):
            total += (-1) ** (j - 1) * _scaled_endpoint(q - j, n) * _scaled_endpoint(k + j - 1, m)
        if theta((m - (k + q - 1)) - n):
            tail = 0
            for j in range(1, k + q + 1):
                tail += (-1) ** (j - 1) * _scaled_endpoint(j - 1, n) * _scaled_endpoint(k + q - j, m)
            total += (-1) ** q * tail
    value = Fraction(pf * total, 1 << (k + q - 1))
    return OverlapResult(value, classify_vanishing(n, m, q, k, value))


def boundary_term_sum(n: int, m: int, q: int, k: int) -> Fraction:
    """Evaluated endpoint ladder from shifting q derivatives across the product.

    This is the first summand of the braces in overlap_general including the
    shared parity/2-power prefactor; it vanishes whenever n+m+q+k is odd.
    Meaningful for q >= 1 (an empty ladder, hence 0, for q = 0).
    """
    _check_query(n, m, q, k)
    pf = parity_filter(n + m + q + k - 1)
    total = 0
    if pf:
        for j in range(1, q + 1):
            total += (-1) ** (j - 1) * _scaled_endpoint(q - j, n) * _scaled_endpoint(k + j - 1, m)
    return Fraction(pf * total, 1 << max(k + q - 1, 0))
