"""Fully integral configurations built from a generator ``(m, n)`` and a
multiplier ``t``."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInput, VerificationFailure
from .exact_arith import Surd, squarefree_decompose
from .lengths import LengthSet, RadiiPair, TriangleRecord, assemble_triangles, compute_lengths
from .triples import (
    PythTriple,
    TripleParams,
    check_params,
    check_triple,
    params_from_triple,
    triple_from_params,
)

__all__ = [
    "CSV_FIELDS",
    "FullConfig",
    "enumerate_configs",
    "generate",
    "generate_from_triple",
]

# integer length name -> LengthSet field
_SURD_FIELD = {
    "T1T2": "t1t2",
    "x1": "x1",
    "x2": "x2",
    "a1": "a1",
    "a2": "a2",
    "h1": "h1",
    "h2": "h2",
    "x1mh1": "m1m",
    "x2mh2": "m2m",
    "IM": "im",
    "C2K": "c2k",
    "T2K": "t2k",
    "C1K": "c1k",
    "T1K": "t1k",
}

CSV_FIELDS = (
    "m", "n", "t", "r1", "r2", "r3", "delta", "R1", "R2",
    *_SURD_FIELD,
    "d1_radicand", "d2_radicand",
)


@dataclass(frozen=True)
class FullConfig:
    params: TripleParams
    t: int
    triple: PythTriple
    delta: int
    R1: int
    R2: int
    lengths: dict[str, int]
    d1_radicand: int
    d2_radicand: int

    @property
    def radii(self) -> RadiiPair:
        return RadiiPair(self.R1, self.R2)

    def length_set(self) -> LengthSet:
        """The integer lengths as a :class:`LengthSet` (d1, d2 stay surds)."""
        r1, r2, _ = self.triple
        kw = {field: Surd(self.lengths[name]) for name, field in _SURD_FIELD.items()}
        kw["d1"] = Surd(self.delta * r1, r1 * r1 + 4 * r2 * r2)
        kw["d2"] = Surd(self.delta * r2, 4 * r1 * r1 + r2 * r2)
        return LengthSet(**kw)

    def triangles(self) -> list[TriangleRecord]:
        return assemble_triangles(self.length_set(), self.radii)

    def row(self) -> dict[str, int]:
        m, n = self.params
        r1, r2, r3 = self.triple
        out = dict(m=m, n=n, t=self.t, r1=r1, r2=r2, r3=r3, delta=self.delta, R1=self.R1, R2=self.R2)
        out.update(self.lengths)
        out["d1_radicand"] = self.d1_radicand
        out["d2_radicand"] = self.d2_radicand
        return out

    def to_dict(self) -> dict:
        m, n = self.params
        return {
            "m": m,
            "n": n,
            "t": self.t,
            "r": list(self.triple),
            "delta": self.delta,
            "R1": self.R1,
            "R2": self.R2,
            "lengths": dict(self.lengths),
            "d1_radicand": self.d1_radicand,
            "d2_radicand": self.d2_radicand,
        }


def _integer_lengths(r1: int, r2: int, r3: int, t: int) -> dict[str, int]:
    k = t * (r1 * r1 - r2 * r2)
    return {
        "T1T2": 2 * k * r1 * r2 * r3,
        "x1": k * r1 * r3**2,
        "x2": k * r2 * r3**2,
        "a1": 2 * k * r2 * r1**2,
        "a2": 2 * k * r1 * r2**2,
        "h1": k * r1**3,
        "h2": k * r2**3,
        "x1mh1": k * r1 * r2**2,
        "x2mh2": k * r2 * r1**2,
        "IM": k * r1 * r2 * r3,
        "C2K": t * r2**2 * r3**3,
        "T2K": 2 * t * r1 * r3 * r2**3,
        "C1K": t * r1**2 * r3**3,
        "T1K": 2 * t * r2 * r3 * r1**3,
    }


def _build(params: TripleParams, triple: PythTriple, t: int, cross_check: bool) -> FullConfig:
    if isinstance(t, bool) or not isinstance(t, int) or t < 1:
        raise InvalidInput(f"t must be a positive integer, got {t!r}")
    r1, r2, r3 = triple
    delta = t * r3 * (r1 * r1 - r2 * r2)
    cfg = FullConfig(
        params=params,
        t=t,
        triple=triple,
        delta=delta,
        R1=delta * r1 * r1,
        R2=delta * r2 * r2,
        lengths=_integer_lengths(r1, r2, r3, t),
        d1_radicand=squarefree_decompose(r1 * r1 + 4 * r2 * r2)[0],
        d2_radicand=squarefree_decompose(4 * r1 * r1 + r2 * r2)[0],
    )
    if cross_check:
        _agree_with_surd_engine(cfg)
    return cfg


def _agree_with_surd_engine(cfg: FullConfig) -> None:
    exact = compute_lengths(cfg.radii)
    mine = cfg.length_set()
    bad = [
        name
        for name in (*_SURD_FIELD.values(), "d1", "d2")
        if getattr(exact, name) != getattr(mine, name)
    ]
    if bad:
        raise VerificationFailure(
            f"integer formulas disagree with the surd engine on {', '.join(bad)}", bad
        )


def generate(m: int, n: int, t: int = 1, *, cross_check: bool = True) -> FullConfig:
    params = check_params(m, n)
    return _build(params, triple_from_params(*params), t, cross_check)


def generate_from_triple(r1: int, r2: int, r3: int, t: int = 1, *, cross_check: bool = True) -> FullConfig:
    triple = check_triple(r1, r2, r3)
    return _build(params_from_triple(*triple), triple, t, cross_check)


def enumerate_configs(max_R1: int, *, cross_check: bool = False) -> list[FullConfig]:
    """Every fully integral configuration with ``R1 <= max_R1``, ordered by
    ``(R1, R2)``."""
    out = []
    m = 2
    # R1 >= r3 * r1**2 > r3**3 / 2 >= (m*m + 1)**3 / 2
    while (m * m + 1) ** 3 <= 2 * max_R1:
        for n in range(1 + m % 2, m, 2):
            if math.gcd(m, n) != 1:
                continue
            r1, r2, r3 = triple_from_params(m, n)
            base = r3 * (r1 * r1 - r2 * r2) * r1 * r1
            for t in range(1, max_R1 // base + 1):
                out.append(_build(TripleParams(m, n), PythTriple(r1, r2, r3), t, cross_check))
        m += 1
    out.sort(key=lambda c: (c.R1, c.R2))
    return out
