"""Exact lengths of the two-circle figure and its sixteen right triangles.

Points: circles centred at C1, C2 (radii R1 > R2) touch at I.  The upper
common external tangent touches them at T1, T2 and meets the line of
centres at K.  M is the midpoint of T1T2 (on the common internal tangent),
M1 and M2 are the midpoints of the chords T1I and IT2.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction

from .errors import InvalidRadii
from .exact_arith import Surd, as_fraction

__all__ = [
    "DISPLAY_NAMES",
    "LENGTH_FIELDS",
    "LengthSet",
    "RadiiPair",
    "TRIANGLE_GROUPS",
    "TriangleRecord",
    "assemble_triangles",
    "compute_lengths",
    "verify_pythagorean",
]


@dataclass(frozen=True)
class RadiiPair:
    R1: Fraction
    R2: Fraction

    def __post_init__(self):
        r1, r2 = as_fraction(self.R1), as_fraction(self.R2)
        if r2 <= 0:
            raise InvalidRadii(f"radii must be positive, got R1={r1}, R2={r2}")
        if r1 <= r2:
            raise InvalidRadii(f"require R1 > R2, got R1={r1}, R2={r2}")
        object.__setattr__(self, "R1", r1)
        object.__setattr__(self, "R2", r2)

    def scaled(self, lam) -> RadiiPair:
        lam = as_fraction(lam)
        return RadiiPair(self.R1 * lam, self.R2 * lam)


@dataclass(frozen=True)
class LengthSet:
    t1t2: Surd
    x1: Surd
    x2: Surd
    a1: Surd
    a2: Surd
    h1: Surd
    h2: Surd
    m1m: Surd
    m2m: Surd
    im: Surd
    c2k: Surd
    c1k: Surd
    t2k: Surd
    t1k: Surd
    d1: Surd
    d2: Surd

    def as_dict(self) -> dict[str, Surd]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def to_json(self) -> dict[str, str]:
        return {k: str(v) for k, v in self.as_dict().items()}

    @classmethod
    def from_json(cls, data: dict[str, str]) -> LengthSet:
        return cls(**{name: Surd.parse(data[name]) for name in LENGTH_FIELDS})

    def scale(self, lam) -> LengthSet:
        return LengthSet(**{k: v.scale(lam) for k, v in self.as_dict().items()})


LENGTH_FIELDS = tuple(f.name for f in fields(LengthSet))

DISPLAY_NAMES = {
    "t1t2": "T1T2",
    "x1": "x1",
    "x2": "x2",
    "a1": "a1",
    "a2": "a2",
    "h1": "h1",
    "h2": "h2",
    "m1m": "M1M",
    "m2m": "M2M",
    "im": "IM",
    "c2k": "C2K",
    "c1k": "C1K",
    "t2k": "T2K",
    "t1k": "T1K",
    "d1": "d1",
    "d2": "d2",
}


def compute_lengths(r: RadiiPair) -> LengthSet:
    R1, R2 = r.R1, r.R2
    S = R1 + R2
    D = R1 - R2
    root = Surd.from_sqrt

    # products are formed from per-factor roots so only small numbers
    # ever get factored
    sqrt_r1r2 = root(R1) * root(R2)
    x1 = root(R1) * root(S)
    x2 = root(R2) * root(S)
    a1 = root(R2 / S).scale(2 * R1)
    a2 = root(R1 / S).scale(2 * R2)
    h1 = root(R1 / S).scale(R1)
    h2 = root(R2 / S).scale(R2)
    return LengthSet(
        t1t2=sqrt_r1r2.scale(2),
        x1=x1,
        x2=x2,
        a1=a1,
        a2=a2,
        h1=h1,
        h2=h2,
        m1m=x1 - h1,
        m2m=x2 - h2,
        im=sqrt_r1r2,
        c2k=Surd(R2 * S / D),
        c1k=Surd(R1 * S / D),
        t2k=sqrt_r1r2.scale(2 * R2 / D),
        t1k=sqrt_r1r2.scale(2 * R1 / D),
        d1=root(R1) * root(R1 + 4 * R2),
        d2=root(R2) * root(4 * R1 + R2),
    )


@dataclass(frozen=True)
class TriangleRecord:
    name: str
    group: int
    leg_a: Surd
    leg_b: Surd
    hyp: Surd


# group number -> (triangle names, hypotenuse, leg, leg) in terms of keys
# resolved by assemble_triangles
TRIANGLE_GROUPS = {
    1: (("C1T1M1", "C1M1I"), "R1", "h1", "a1/2"),
    2: (("C2T2M2", "C2M2I"), "R2", "h2", "a2/2"),
    3: (("T1M1M", "MM1I", "IM2M", "MM2T2"), "T1T2/2", "a1/2", "a2/2"),
    4: (("C1T1M", "C1IM"), "x1", "R1", "T1T2/2"),
    5: (("C2T2M", "C2IM"), "x2", "R2", "T1T2/2"),
    6: (("C1MC2",), "R1+R2", "x1", "x2"),
    7: (("T1IT2",), "T1T2", "a1", "a2"),
    8: (("C2T2K",), "C2K", "R2", "T2K"),
    9: (("C1T1K",), "C1K", "R1", "T1K"),
}


def assemble_triangles(ls: LengthSet, r: RadiiPair) -> list[TriangleRecord]:
    """The sixteen right triangles, in nine congruence groups."""
    vals = {
        "R1": Surd(r.R1),
        "R2": Surd(r.R2),
        "R1+R2": Surd(r.R1 + r.R2),
        "h1": ls.h1,
        "h2": ls.h2,
        "a1": ls.a1,
        "a2": ls.a2,
        "a1/2": ls.a1.half(),
        "a2/2": ls.a2.half(),
        "x1": ls.x1,
        "x2": ls.x2,
        "T1T2": ls.t1t2,
        "T1T2/2": ls.t1t2.half(),
        "C2K": ls.c2k,
        "C1K": ls.c1k,
        "T2K": ls.t2k,
        "T1K": ls.t1k,
    }
    out = []
    for group, (names, hyp, leg_a, leg_b) in TRIANGLE_GROUPS.items():
        for name in names:
            out.append(TriangleRecord(name, group, vals[leg_a], vals[leg_b], vals[hyp]))
    return out


def verify_pythagorean(t: TriangleRecord) -> bool:
    return t.leg_a.square() + t.leg_b.square() == t.hyp.square()
