"""Exact scalars: rationals (``fractions.Fraction``) and single-term surds.

A :class:`Surd` is ``coef * sqrt(radicand)`` with a nonnegative rational
coefficient and a squarefree radicand.  The canonical form is unique, so
dataclass equality is value equality.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from numbers import Rational

from .errors import IncompatibleRadicands, InvalidInput

__all__ = [
    "Surd",
    "as_fraction",
    "is_perfect_square",
    "squarefree_decompose",
]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(value, bool):
        raise InvalidInput(f"not a rational number: {value!r}")
    if isinstance(value, (Rational, str)):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"not a rational number: {value!r}") from exc
    raise InvalidInput(f"not an exact rational: {value!r}")


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


@lru_cache(maxsize=65536)
def squarefree_decompose(n: int) -> tuple[int, int]:
    """Split ``n`` as ``s * k**2`` with ``s`` squarefree; returns ``(s, k)``.

    Trial division stops once ``p**3`` exceeds the cofactor: what remains
    then has at most two prime factors, so it is either a square or
    squarefree.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n <= 0:
        raise InvalidInput(f"squarefree_decompose needs a positive integer, got {n!r}")
    s, k = 1, 1
    m = n
    p = 2
    while p * p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            if e & 1:
                s *= p
            k *= p ** (e >> 1)
        p += 1 if p == 2 else 2
    r = math.isqrt(m)
    if r * r == m:
        k *= r
    else:
        s *= m
    return s, k


_SURD_RE = re.compile(
    r"""^\s*
    (?:(?P<num>-?\d+)(?:/(?P<den>\d+))?)?
    \s*(?P<star>\*)?\s*
    (?:sqrt\(\s*(?P<rad>\d+)\s*\))?
    \s*$""",
    re.VERBOSE,
)


@total_ordering
@dataclass(frozen=True)
class Surd:
    coef: Fraction
    radicand: int = 1

    def __post_init__(self):
        coef = as_fraction(self.coef)
        if coef < 0:
            raise InvalidInput(f"surd coefficient must be nonnegative, got {coef}")
        if isinstance(self.radicand, bool) or not isinstance(self.radicand, int) or self.radicand < 1:
            raise InvalidInput(f"radicand must be a positive integer, got {self.radicand!r}")
        s, k = squarefree_decompose(self.radicand)
        coef *= k
        if coef == 0:
            s = 1
        object.__setattr__(self, "coef", coef)
        object.__setattr__(self, "radicand", s)

    @classmethod
    def _canonical(cls, coef: Fraction, radicand: int) -> Surd:
        # caller guarantees coef >= 0 and radicand squarefree
        obj = object.__new__(cls)
        object.__setattr__(obj, "coef", coef)
        object.__setattr__(obj, "radicand", radicand if coef else 1)
        return obj

    @classmethod
    def from_sqrt(cls, q) -> Surd:
        """Canonical surd for ``sqrt(q)``, ``q`` a nonnegative rational."""
        q = as_fraction(q)
        if q < 0:
            raise InvalidInput(f"square root of negative number {q}")
        return _sqrt_cached(q)

    @classmethod
    def parse(cls, text: str) -> Surd:
        m = _SURD_RE.match(text)
        if m is None or (m["num"] is None and m["rad"] is None):
            raise InvalidInput(f"cannot parse surd: {text!r}")
        if m["star"] and (m["num"] is None or m["rad"] is None):
            raise InvalidInput(f"cannot parse surd: {text!r}")
        if m["num"] is not None and m["rad"] is not None and not m["star"]:
            raise InvalidInput(f"cannot parse surd: {text!r}")
        if m["den"] is not None and int(m["den"]) == 0:
            raise InvalidInput(f"zero denominator in {text!r}")
        coef = Fraction(int(m["num"]), int(m["den"] or 1)) if m["num"] is not None else Fraction(1)
        return cls(coef, int(m["rad"] or 1))

    @property
    def is_rational(self) -> bool:
        return self.radicand == 1

    def square(self) -> Fraction:
        return self.coef * self.coef * self.radicand

    def scale(self, q) -> Surd:
        q = as_fraction(q)
        if q < 0:
            raise InvalidInput("cannot scale a surd by a negative number")
        return Surd._canonical(self.coef * q, self.radicand)

    def half(self) -> Surd:
        return Surd._canonical(self.coef / 2, self.radicand)

    def _align(self, other: Surd) -> int:
        if self.coef == 0:
            return other.radicand
        if other.coef == 0 or self.radicand == other.radicand:
            return self.radicand
        raise IncompatibleRadicands(
            f"cannot combine sqrt({self.radicand}) and sqrt({other.radicand}) into one term"
        )

    def __add__(self, other):
        if not isinstance(other, Surd):
            return NotImplemented
        return Surd._canonical(self.coef + other.coef, self._align(other))

    def __sub__(self, other):
        if not isinstance(other, Surd):
            return NotImplemented
        rad = self._align(other)
        if other.coef > self.coef:
            raise InvalidInput("surd difference would be negative")
        return Surd._canonical(self.coef - other.coef, rad)

    def __mul__(self, other):
        if isinstance(other, Surd):
            g = math.gcd(self.radicand, other.radicand)
            # both radicands squarefree, so the product over g**2 is as well
            return Surd._canonical(
                self.coef * other.coef * g, self.radicand // g * (other.radicand // g)
            )
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __lt__(self, other):
        if not isinstance(other, Surd):
            return NotImplemented
        return self.square() < other.square()

    def __float__(self) -> float:
        if self.radicand == 1:
            return float(self.coef)
        # float(Fraction) and sqrt are each correctly rounded
        return float(self.coef) * math.sqrt(self.radicand)

    def __str__(self) -> str:
        c = self.coef
        head = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        if self.radicand == 1:
            return head
        return f"{head}*sqrt({self.radicand})"


@lru_cache(maxsize=65536)
def _sqrt_cached(q: Fraction) -> Surd:
    # gcd(num, den) = 1 makes the two squarefree parts coprime, so their
    # product is squarefree: sqrt(a/b) = ka/(kb*sb) * sqrt(sa*sb)
    if q == 0:
        return Surd._canonical(Fraction(0), 1)
    sa, ka = squarefree_decompose(q.numerator)
    sb, kb = squarefree_decompose(q.denominator)
    return Surd._canonical(Fraction(ka, kb * sb), sa * sb)
