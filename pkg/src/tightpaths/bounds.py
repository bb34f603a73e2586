"""Closed-form extremal bounds, evaluated exactly.

All values are ``Fraction`` multiples of binomial coefficients, except the
improved odd-r bound, whose square root is carried as a :class:`Surd`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import Union

from .core import DomainError

KINDS = (
    "trivial",
    "kalai",
    "tight_path",
    "perles",
    "zigzag",
    "stack_leading",
    "small_k",
    "odd_improved",
)

NOTES = {
    "trivial": "ex(n, tight k-path) <= (k-1) C(n, r-1)",
    "kalai": "conjectured: ex(n, tight k-path) <= (k-1)/r C(n, r-1)",
    "tight_path": "ex(n, tight k-path); (k-1)/2 for even r, (k + floor((k-1)/r))/2 for odd r, times C(n, r-1)",
    "perles": "ex_cyc(n, k-zigzag) for graphs <= (k-1) n / 2",
    "zigzag": "ex_cyc(n, k-zigzag) <= (k-1)(r-1)/r C(n, r-1)",
    "stack_leading": "leading term of ex_cyc(n, k-stack) = (k-1)(r-1) C(n, r-1) + O(n^(r-2))",
    "small_k": "ex(n, tight k-path) <= k^2/(2r) C(n, r-1) when r >= k-1",
    "odd_improved": "asymptotic only (n sufficiently large): (sqrt a + sqrt b)^2 / r C(n, r-1)",
}


@dataclass(frozen=True)
class Surd:
    """The number ``rational + coeff * sqrt(radicand)``."""

    rational: Fraction
    coeff: Fraction
    radicand: int

    def __float__(self) -> float:
        return float(self.rational) + float(self.coeff) * self.radicand ** 0.5

    def __str__(self) -> str:
        return f"{self.rational} + {self.coeff}*sqrt({self.radicand})"


Value = Union[Fraction, Surd]


def requirements(kind: str, n: int, r: int, k: int) -> list[str]:
    """Preconditions of ``kind`` violated by (n, r, k); empty when usable."""
    if kind not in KINDS:
        raise DomainError(f"unknown bound kind {kind!r}")
    bad = []
    if r < 2:
        bad.append("r >= 2")
    if k < 1:
        bad.append("k >= 1")
    if n < r:
        bad.append("n >= r")
    if kind == "perles" and r != 2:
        bad.append("r = 2")
    if kind in ("zigzag", "stack_leading") and r % 2:
        bad.append("r even")
    if kind == "small_k" and r < k - 1:
        bad.append("r >= k - 1")
    if kind == "odd_improved" and (r < 3 or r % 2 == 0):
        bad.append("r odd and r >= 3")
    return bad


def evaluate_bound(kind: str, n: int, r: int, k: int) -> Value:
    bad = requirements(kind, n, r, k)
    if bad:
        raise DomainError(f"{kind} bound requires {', '.join(bad)} (got n={n}, r={r}, k={k})")
    C = comb(n, r - 1)
    if kind == "trivial":
        return Fraction((k - 1) * C)
    if kind == "kalai":
        return Fraction(k - 1, r) * C
    if kind == "tight_path":
        if r % 2 == 0:
            return Fraction(k - 1, 2) * C
        return Fraction(k + (k - 1) // r, 2) * C
    if kind == "perles":
        return Fraction((k - 1) * n, 2)
    if kind == "zigzag":
        return Fraction((k - 1) * (r - 1), r) * C
    if kind == "stack_leading":
        return Fraction((k - 1) * (r - 1) * C)
    if kind == "small_k":
        return Fraction(k * k, 2 * r) * C
    # odd_improved: (a + b + 2 sqrt(ab)) C / r
    a = (k - 1) // r
    b = Fraction((r - 1) * (k - 1 - a), 2)
    ab = a * b
    scale = Fraction(C, r)
    if ab.denominator == 1:
        root = isqrt(ab.numerator)
        if root * root == ab.numerator:
            return (a + b + 2 * root) * scale
        return Surd((a + b) * scale, 2 * scale, ab.numerator)
    # only reachable with even r - 1, which odd r rules out
    raise AssertionError("a*b is an integer for odd r")


def as_float(value: Value) -> float:
    return float(value)


def bound_table(n: int, r: int, k: int) -> list[dict]:
    rows = []
    for kind in KINDS:
        bad = requirements(kind, n, r, k)
        row = {"kind": kind, "applicable": not bad, "requires": bad, "note": NOTES[kind]}
        if not bad:
            value = evaluate_bound(kind, n, r, k)
            row["value"] = str(value)
            row["float"] = float(value)
        rows.append(row)
    return rows
