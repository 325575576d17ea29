"""Which lengths become integers for a given integer radii pair.

The ladder, from weakest to strongest:

* ``NON_SQUARE_PRODUCT``: R1*R2 is not a square, so T1T2 is irrational.
* ``TANGENT_INTEGRAL``: R1 = d*r1**2, R2 = d*r2**2 with gcd(r1, r2) = 1;
  T1T2 and IM are integers.
* ``CEVIAN_INTEGRAL``: additionally r1**2 + r2**2 = r3**2, so x1, x2 are
  integers and every other length is rational.
* ``FULLY_INTEGRAL``: additionally r3*(r1**2 - r2**2) divides d; all
  fourteen lengths are integers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidInput, InvalidRadii
from .triples import check_triple, square_product_decompose

__all__ = [
    "RATIONAL_LENGTH_NAMES",
    "IntegralityReport",
    "Tier",
    "classify",
    "necessity_check",
    "rational_lengths",
]


class Tier(enum.Enum):
    NON_SQUARE_PRODUCT = "NonSquareProduct"
    TANGENT_INTEGRAL = "TangentIntegral"
    CEVIAN_INTEGRAL = "CevianIntegral"
    FULLY_INTEGRAL = "FullyIntegral"

    def __str__(self):
        return self.value


RATIONAL_LENGTH_NAMES = (
    "T1T2", "x1", "x2", "a1", "a2", "h1", "h2",
    "x1mh1", "x2mh2", "IM", "C2K", "T2K", "C1K", "T1K",
)


@lru_cache(maxsize=4096)
def _unit_fractions(r1: int, r2: int, r3: int) -> tuple[tuple[str, int, int], ...]:
    # (name, numerator, denominator) of each length at delta = 1, unreduced
    check_triple(r1, r2, r3)
    diff = r1 * r1 - r2 * r2
    return (
        ("T1T2", 2 * r1 * r2, 1),
        ("x1", r1 * r3, 1),
        ("x2", r2 * r3, 1),
        ("a1", 2 * r2 * r1**2, r3),
        ("a2", 2 * r1 * r2**2, r3),
        ("h1", r1**3, r3),
        ("h2", r2**3, r3),
        ("x1mh1", r1 * r2**2, r3),
        ("x2mh2", r2 * r1**2, r3),
        ("IM", r1 * r2, 1),
        ("C2K", r2**2 * r3**2, diff),
        ("T2K", 2 * r2**3 * r1, diff),
        ("C1K", r1**2 * r3**2, diff),
        ("T1K", 2 * r1**3 * r2, diff),
    )


def rational_lengths(delta: int, r1: int, r2: int, r3: int) -> dict[str, Fraction]:
    if not isinstance(delta, int) or delta < 1:
        raise InvalidInput(f"delta must be a positive integer, got {delta!r}")
    return {name: Fraction(delta * num, den) for name, num, den in _unit_fractions(r1, r2, r3)}


def necessity_check(r1: int, r2: int, r3: int, delta: int) -> bool:
    """True iff all fourteen lengths are integers for this ``delta``.

    Decided by testing each fraction directly, never by the divisibility
    shortcut it is meant to confirm.
    """
    for _, num, den in _unit_fractions(r1, r2, r3):
        if delta * num % den:
            return False
    return True


@dataclass(frozen=True)
class IntegralityReport:
    R1: int
    R2: int
    tier: Tier
    delta: int | None = None
    r1: int | None = None
    r2: int | None = None
    r3: int | None = None
    t: int | None = None
    lengths: dict[str, Fraction] | None = None

    def to_dict(self) -> dict:
        out: dict = {"tier": self.tier.value}
        if self.delta is not None:
            out["delta"] = self.delta
            out["r"] = [self.r1, self.r2] + ([self.r3] if self.r3 is not None else [])
        if self.t is not None:
            out["t"] = self.t
        if self.lengths is not None:
            out["lengths"] = {k: str(v) for k, v in self.lengths.items()}
        return out

    def summary(self) -> str:
        if self.tier is Tier.NON_SQUARE_PRODUCT:
            return f"{self.tier}"
        if self.tier is Tier.TANGENT_INTEGRAL:
            return f"{self.tier} delta={self.delta} (r1,r2)=({self.r1},{self.r2})"
        triple = f"triple=({self.r1},{self.r2},{self.r3})"
        if self.tier is Tier.CEVIAN_INTEGRAL:
            return f"{self.tier} delta={self.delta} {triple}"
        return f"{self.tier} t={self.t} delta={self.delta} {triple}"


def classify(R1: int, R2: int) -> IntegralityReport:
    for v in (R1, R2):
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise InvalidInput(f"radii must be positive integers, got {R1!r}, {R2!r}")
    if R1 <= R2:
        raise InvalidRadii(f"require R1 > R2, got R1={R1}, R2={R2}")

    split = square_product_decompose(R1, R2)
    if split is None:
        return IntegralityReport(R1, R2, Tier.NON_SQUARE_PRODUCT)
    delta, r1, r2 = split

    hyp_sq = r1 * r1 + r2 * r2
    r3 = math.isqrt(hyp_sq)
    if r3 * r3 != hyp_sq:
        return IntegralityReport(R1, R2, Tier.TANGENT_INTEGRAL, delta, r1, r2)

    lengths = rational_lengths(delta, r1, r2, r3)
    step = r3 * (r1 * r1 - r2 * r2)
    if delta % step:
        return IntegralityReport(R1, R2, Tier.CEVIAN_INTEGRAL, delta, r1, r2, r3, None, lengths)
    return IntegralityReport(
        R1, R2, Tier.FULLY_INTEGRAL, delta, r1, r2, r3, delta // step, lengths
    )
