"""Primitive Pythagorean triples, square-product splitting and the coprimality
conditions that make the rational lengths reduce cleanly."""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import InvalidInput, InvalidParams, InvalidTriple

__all__ = [
    "COPRIMENESS_CONDITIONS",
    "PythTriple",
    "TripleParams",
    "check_params",
    "check_triple",
    "enumerate_primitive_triples",
    "params_from_triple",
    "square_product_decompose",
    "triple_from_params",
    "verify_coprimeness",
]


class TripleParams(NamedTuple):
    m: int
    n: int


class PythTriple(NamedTuple):
    r1: int
    r2: int
    r3: int


def _is_pos_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool) and v >= 1


def check_params(m: int, n: int) -> TripleParams:
    if not (_is_pos_int(m) and _is_pos_int(n)):
        raise InvalidParams(f"m and n must be positive integers, got m={m!r}, n={n!r}")
    if math.gcd(m, n) != 1 or (m + n) % 2 == 0:
        raise InvalidParams("m and n must be coprime with opposite parity")
    if m <= n:
        raise InvalidParams(f"m must exceed n, got m={m}, n={n}")
    return TripleParams(m, n)


def check_triple(r1: int, r2: int, r3: int) -> PythTriple:
    """Validate a primitive triple in the ``r1 > r2`` orientation."""
    if not all(_is_pos_int(v) for v in (r1, r2, r3)):
        raise InvalidTriple(f"triple entries must be positive integers: {(r1, r2, r3)!r}")
    if r1 * r1 + r2 * r2 != r3 * r3:
        raise InvalidTriple(f"{(r1, r2, r3)} is not Pythagorean")
    if math.gcd(r1, r2) != 1:
        raise InvalidTriple(f"{(r1, r2, r3)} is not primitive")
    if r1 <= r2:
        raise InvalidTriple(f"expected r1 > r2, got {(r1, r2, r3)}")
    return PythTriple(r1, r2, r3)


def triple_from_params(m: int, n: int) -> PythTriple:
    m, n = check_params(m, n)
    legs = sorted((m * m - n * n, 2 * m * n), reverse=True)
    return PythTriple(legs[0], legs[1], m * m + n * n)


def params_from_triple(r1: int, r2: int, r3: int) -> TripleParams:
    """Recover the generator ``(m, n)``: the odd leg is ``m**2 - n**2``."""
    r1, r2, r3 = check_triple(r1, r2, r3)
    odd = r1 if r1 % 2 else r2
    m = math.isqrt((r3 + odd) // 2)
    n = math.isqrt((r3 - odd) // 2)
    return check_params(m, n)


def enumerate_primitive_triples(max_r3: int) -> list[PythTriple]:
    """All primitive triples with hypotenuse at most ``max_r3``, ordered by
    ``(r3, r1)``."""
    out = []
    m = 2
    while m * m + 1 <= max_r3:
        for n in range(1 + m % 2, m, 2):
            if m * m + n * n > max_r3:
                break
            if math.gcd(m, n) == 1:
                out.append(triple_from_params(m, n))
        m += 1
    out.sort(key=lambda t: (t.r3, t.r1))
    return out


def square_product_decompose(a: int, b: int) -> tuple[int, int, int] | None:
    """Write ``a = d*r1**2``, ``b = d*r2**2`` with ``d = gcd(a, b)``.

    Returns ``(d, r1, r2)`` when both cofactors are squares (exactly when
    ``a*b`` is a square) and ``None`` otherwise.
    """
    if not (_is_pos_int(a) and _is_pos_int(b)):
        raise InvalidInput(f"square_product_decompose needs positive integers, got {a!r}, {b!r}")
    d = math.gcd(a, b)
    c1, c2 = a // d, b // d
    r1, r2 = math.isqrt(c1), math.isqrt(c2)
    if r1 * r1 != c1 or r2 * r2 != c2:
        return None
    return d, r1, r2


COPRIMENESS_CONDITIONS = (
    "a1",
    "a2",
    "h1",
    "h2",
    "x1mh1",
    "x2mh2",
    "C2K",
    "T2K",
    "C1K",
    "T1K",
)


def verify_coprimeness(t: PythTriple) -> dict[str, bool]:
    """One flag per reduced length: is its denominator coprime to the
    integer factor of its numerator?

    Keys name the length whose fraction the condition governs.
    """
    r1, r2, r3 = check_triple(*t)
    diff = r1 * r1 - r2 * r2
    g = math.gcd
    return {
        "a1": g(r3, 2 * r2 * r1**2) == 1,
        "a2": g(r3, 2 * r1 * r2**2) == 1,
        "h1": g(r3, r1**3) == 1,
        "h2": g(r3, r2**3) == 1,
        "x1mh1": g(r3, r1 * r2**2) == 1,
        "x2mh2": g(r3, r2 * r1**2) == 1,
        "C2K": g(diff, r2**2 * r3**2) == 1,
        "T2K": g(diff, 2 * r2**3 * r1) == 1,
        "C1K": g(diff, r1**2 * r3**2) == 1,
        "T1K": g(diff, 2 * r1**3 * r2) == 1,
    }
