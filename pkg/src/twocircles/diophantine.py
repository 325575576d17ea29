"""Bounded searches for the two quartics that decide whether the diagonals
C1T2 and C2T1 can be rational, plus per-triple irrationality certificates.

    plus14:  x**4 + 14*x**2*y**2 + y**4 = z**2
    minus:   x**4 - x**2*y**2 + y**4 = z**2
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidInput
from .exact_arith import is_perfect_square
from .triples import check_params, triple_from_params

__all__ = [
    "Equation",
    "IrrationalityCertificate",
    "QuarticHit",
    "certify_irrational",
    "diagonal_quartic",
    "search",
    "search_minus_mixed",
    "search_plus14",
]


class Equation(enum.Enum):
    PLUS14 = "plus14"
    MINUS_MIXED = "minus"

    def __str__(self):
        return self.value


class QuarticHit(NamedTuple):
    x: int
    y: int
    z: int
    equation: Equation


def _check_bound(bound):
    if isinstance(bound, bool) or not isinstance(bound, int) or bound < 1:
        raise InvalidInput(f"bound must be a positive integer, got {bound!r}")


def search(equation: Equation, bound: int, *, any_parity: bool = False) -> list[QuarticHit]:
    """Coprime solutions with ``1 <= x, y <= bound``, sorted by ``(x, y)``.

    For ``plus14`` only pairs of opposite parity are scanned unless
    ``any_parity`` is set.  Both forms are symmetric in x and y, so only
    ``x <= y`` is scanned and hits are mirrored.
    """
    _check_bound(bound)
    equation = Equation(equation)
    plus = equation is Equation.PLUS14
    mixed_coef = 14 if plus else -1
    sq = [i * i for i in range(bound + 1)]
    gcd, isqrt = math.gcd, math.isqrt
    hits = []
    for x in range(1, bound + 1):
        x2 = sq[x]
        x4 = x2 * x2
        if plus and not any_parity:
            ys = range(x + 1, bound + 1, 2)
        else:
            ys = range(x, bound + 1)
        for y in ys:
            if gcd(x, y) != 1:
                continue
            y2 = sq[y]
            v = x4 + mixed_coef * x2 * y2 + y2 * y2
            z = isqrt(v)
            if z * z == v:
                hits.append(QuarticHit(x, y, z, equation))
                if x != y:
                    hits.append(QuarticHit(y, x, z, equation))
    hits.sort()
    return hits


def search_plus14(bound: int, *, any_parity: bool = False) -> list[QuarticHit]:
    return search(Equation.PLUS14, bound, any_parity=any_parity)


def search_minus_mixed(bound: int) -> list[QuarticHit]:
    return search(Equation.MINUS_MIXED, bound)


def diagonal_quartic(m: int, n: int) -> tuple[Equation, int]:
    """Quartic form that ``r1**2 + 4*r2**2`` reduces to for generator (m, n).

    With r1 odd (r1 = m**2 - n**2) the radicand equals the plus14 form;
    with r1 even (r1 = 2mn) it equals four times the minus form.
    """
    m, n = check_params(m, n)
    r1, _, _ = triple_from_params(m, n)
    m2, n2 = m * m, n * n
    if r1 % 2:
        return Equation.PLUS14, m2 * m2 + 14 * m2 * n2 + n2 * n2
    return Equation.MINUS_MIXED, m2 * m2 - m2 * n2 + n2 * n2


@dataclass(frozen=True)
class IrrationalityCertificate:
    d1_radicand_raw: int
    d2_radicand_raw: int
    d1_irrational: bool
    d2_irrational: bool


def certify_irrational(triple) -> IrrationalityCertificate:
    """Decide whether the diagonals are irrational.

    Only ``r1`` and ``r2`` matter: d1 = d*r1*sqrt(r1**2 + 4*r2**2) and
    d2 = d*r2*sqrt(4*r1**2 + r2**2) for any multiplier d.
    """
    r1, r2 = triple[0], triple[1]
    if not all(isinstance(v, int) and not isinstance(v, bool) and v >= 1 for v in (r1, r2)):
        raise InvalidInput(f"legs must be positive integers, got {triple!r}")
    d1 = r1 * r1 + 4 * r2 * r2
    d2 = 4 * r1 * r1 + r2 * r2
    return IrrationalityCertificate(d1, d2, not is_perfect_square(d1), not is_perfect_square(d2))
