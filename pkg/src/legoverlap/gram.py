"""Gram matrices of derivative overlaps, with JSON and CSV serialization.

Entry [n][m] holds the exact integral of P_n^(q) P_m^(k) over [-1, 1].
Values serialize as strings ("p/q", or a plain decimal integer when the
denominator is 1) because they routinely exceed both 64-bit integers and
double precision.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .oracle import overlap_oracle
from .overlap import overlap_general

__all__ = ["GramMatrix", "build_gram_matrix", "format_exact", "parse_exact"]

METHODS = ("closed_form", "oracle")


def format_exact(value: Fraction) -> str:
    """Render exactly: decimal integer when the denominator is 1, else 'p/q'."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_exact(text: str) -> Fraction:
    """Inverse of format_exact."""
    return Fraction(text)


@dataclass(frozen=True)
class GramMatrix:
    q: int
    k: int
    n_max: int
    m_max: int
    method: str
    entries: tuple[tuple[Fraction, ...], ...]

    def to_json(self) -> str:
        return json.dumps(
            {
                "q": self.q,
                "k": self.k,
                "n_max": self.n_max,
                "m_max": self.m_max,
                "method": self.method,
                "entries": [[format_exact(v) for v in row] for row in self.entries],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "GramMatrix":
        data = json.loads(text)
        return cls(
            q=data["q"],
            k=data["k"],
            n_max=data["n_max"],
            m_max=data["m_max"],
            method=data["method"],
            entries=tuple(tuple(parse_exact(v) for v in row) for row in data["entries"]),
        )

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n\\m"] + [str(m) for m in range(self.m_max + 1)])
        for n, row in enumerate(self.entries):
            writer.writerow([str(n)] + [format_exact(v) for v in row])
        return out.getvalue()


def build_gram_matrix(
    q: int, k: int, n_max: int, m_max: int, method: str = "closed_form"
) -> GramMatrix:
    """Assemble the (n_max+1) x (m_max+1) matrix of overlaps for fixed (q, k).

    Entries are filled row-major; method selects the closed-form evaluator
    or the brute-force oracle (both exact, so the results are identical).
    """
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    if n_max < 0 or m_max < 0:
        raise ValueError("degree bounds must be non-negative")
    if method == "closed_form":
        entry = lambda n, m: overlap_general(n, m, q, k).value
    else:
        entry = lambda n, m: overlap_oracle(n, m, q, k)
    entries = tuple(
        tuple(entry(n, m) for m in range(m_max + 1)) for n in range(n_max + 1)
    )
    return GramMatrix(q, k, n_max, m_max, method, entries)
