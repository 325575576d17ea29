"""Floating-point reconstruction of the figure, used as an independent check
on the exact formulas.

Nothing here touches :mod:`twocircles.exact_arith`; the tangent points come
from the plain external-point construction, and every length and angle is
measured off coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InvalidRadii, VerificationFailure
from .lengths import LENGTH_FIELDS, RadiiPair, compute_lengths

__all__ = [
    "CheckReport",
    "Scene",
    "angle",
    "build_scene",
    "check_angles",
    "cross_check",
    "measure",
]

Point = tuple[float, float]


@dataclass(frozen=True)
class Scene:
    R1: float
    R2: float
    points: dict[str, Point]
    omega: float
    phi: float

    def to_dict(self) -> dict:
        return {
            "R1": self.R1,
            "R2": self.R2,
            "points": {k: list(v) for k, v in self.points.items()},
            "omega": self.omega,
            "phi": self.phi,
        }


@dataclass
class CheckReport:
    tol: float
    deviations: dict[str, float] = field(default_factory=dict)

    @property
    def max_deviation(self) -> float:
        return max(self.deviations.values(), default=0.0)

    @property
    def failures(self) -> list[str]:
        return [k for k, v in self.deviations.items() if not v <= self.tol]

    @property
    def passed(self) -> bool:
        return not self.failures

    def __len__(self):
        return len(self.deviations)


def _sub(p: Point, q: Point) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def _dist(p: Point, q: Point) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def _mid(p: Point, q: Point) -> Point:
    return ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)


def angle(p: Point, vertex: Point, q: Point) -> float:
    """Angle p-vertex-q in radians, in [0, pi]."""
    u, v = _sub(p, vertex), _sub(q, vertex)
    return abs(math.atan2(u[0] * v[1] - u[1] * v[0], u[0] * v[0] + u[1] * v[1]))


def _upper_tangent_point(ext: Point, centre: Point, radius: float) -> Point:
    # rotate the centre->ext direction counterclockwise by the angle between
    # the radius and the centre line at the tangent point
    dx, dy = ext[0] - centre[0], ext[1] - centre[1]
    d = math.hypot(dx, dy)
    ux, uy = dx / d, dy / d
    tangent_len = math.sqrt((d - radius) * (d + radius))
    th = math.atan2(tangent_len, radius)
    c, s = math.cos(th), math.sin(th)
    return (centre[0] + radius * (c * ux - s * uy), centre[1] + radius * (s * ux + c * uy))


def _project(p: Point, a: Point, b: Point) -> Point:
    ab = _sub(b, a)
    k = ((p[0] - a[0]) * ab[0] + (p[1] - a[1]) * ab[1]) / (ab[0] ** 2 + ab[1] ** 2)
    return (a[0] + k * ab[0], a[1] + k * ab[1])


def _as_floats(r) -> tuple[float, float]:
    if isinstance(r, RadiiPair):
        return float(r.R1), float(r.R2)
    R1, R2 = (float(v) for v in r)
    if not (R1 > R2 > 0):
        raise InvalidRadii(f"require R1 > R2 > 0, got R1={R1}, R2={R2}")
    return R1, R2


def build_scene(r) -> Scene:
    """Coordinates with I at the origin and the centres on the x-axis.

    ``r`` is a :class:`RadiiPair` or any ``(R1, R2)`` pair of numbers.
    """
    R1, R2 = _as_floats(r)
    I = (0.0, 0.0)
    C1 = (-R1, 0.0)
    C2 = (R2, 0.0)
    K = (2 * R1 * R2 / (R1 - R2), 0.0)
    T1 = _upper_tangent_point(K, C1, R1)
    T2 = _upper_tangent_point(K, C2, R2)
    M = _mid(T1, T2)
    M1 = _mid(T1, I)
    M2 = _mid(I, T2)
    F = _project(C2, C1, T1)
    points = dict(I=I, C1=C1, C2=C2, T1=T1, T2=T2, M=M, M1=M1, M2=M2, F=F, K=K)
    return Scene(R1, R2, points, omega=angle(M, C1, I), phi=angle(M, C2, I))


_SEGMENTS = {
    "t1t2": ("T1", "T2"),
    "x1": ("C1", "M"),
    "x2": ("C2", "M"),
    "a1": ("T1", "I"),
    "a2": ("T2", "I"),
    "h1": ("C1", "M1"),
    "h2": ("C2", "M2"),
    "m1m": ("M1", "M"),
    "m2m": ("M2", "M"),
    "im": ("I", "M"),
    "c2k": ("C2", "K"),
    "c1k": ("C1", "K"),
    "t2k": ("T2", "K"),
    "t1k": ("T1", "K"),
    "d1": ("C1", "T2"),
    "d2": ("C2", "T1"),
}
assert tuple(_SEGMENTS) == LENGTH_FIELDS


def measure(s: Scene) -> dict[str, float]:
    p = s.points
    return {name: _dist(p[a], p[b]) for name, (a, b) in _SEGMENTS.items()}


def cross_check(r: RadiiPair, rel_tol: float = 1e-9) -> CheckReport:
    """Compare measured lengths against the exact engine, relative error."""
    measured = measure(build_scene(r))
    exact = compute_lengths(r).as_dict()
    report = CheckReport(rel_tol)
    for name, value in measured.items():
        e = float(exact[name])
        report.deviations[name] = abs(value - e) / abs(e)
    if not report.passed:
        raise VerificationFailure(
            f"oracle disagrees on {', '.join(report.failures)} "
            f"(max rel dev {report.max_deviation:.3g})",
            report,
        )
    return report


# angles (first, vertex, last) claimed equal to phi, then to omega
PHI_ANGLES = (
    ("C1", "T1", "I"), ("T1", "I", "C1"), ("T1", "M", "C1"), ("C1", "M", "I"),
    ("M", "I", "T2"), ("M", "T2", "I"), ("I", "C2", "M"), ("M", "C2", "T2"),
)
OMEGA_ANGLES = (
    ("T1", "C1", "M"), ("I", "C1", "M"), ("M", "T1", "I"), ("T1", "I", "M"),
    ("I", "M", "C2"), ("C2", "M", "T2"), ("C2", "I", "T2"), ("I", "T2", "C2"),
)
# pairs of segments claimed perpendicular
PERPENDICULAR = (
    (("M", "I"), ("C1", "C2")),
    (("C1", "M"), ("M", "C2")),
    (("T1", "I"), ("I", "T2")),
    (("M", "C1"), ("T1", "I")),
    (("T1", "C1"), ("T1", "T2")),
    (("T2", "C2"), ("T1", "T2")),
)
RECTANGLE = (("M2", "I", "M1"), ("I", "M1", "M"), ("M1", "M", "M2"), ("M", "M2", "I"))


def check_angles(s: Scene, tol: float = 1e-9) -> CheckReport:
    """Angle equalities, perpendicularities and the IM1MM2 rectangle.

    Angle deviations are absolute (radians); perpendicularity is measured
    as |cos| of the angle between the two directions.
    """
    p = s.points
    report = CheckReport(tol)
    dev = report.deviations

    def ang(names):
        return angle(*(p[n] for n in names))

    for names in PHI_ANGLES:
        dev["phi:" + "".join(names)] = abs(ang(names) - s.phi)
    for names in OMEGA_ANGLES:
        dev["omega:" + "".join(names)] = abs(ang(names) - s.omega)
    for (a, b), (c, d) in PERPENDICULAR:
        u, v = _sub(p[b], p[a]), _sub(p[d], p[c])
        cos = (u[0] * v[0] + u[1] * v[1]) / (math.hypot(*u) * math.hypot(*v))
        dev[f"perp:{a}{b}/{c}{d}"] = abs(cos)
    dev["omega+phi"] = abs(s.omega + s.phi - math.pi / 2)
    dev["sin omega"] = abs(math.sin(s.omega) - _dist(p["T1"], p["I"]) / (2 * s.R1))
    dev["sin phi"] = abs(math.sin(s.phi) - _dist(p["T2"], p["I"]) / (2 * s.R2))
    for names in RECTANGLE:
        dev["rect:" + "".join(names)] = abs(ang(names) - math.pi / 2)
    if not report.passed:
        raise VerificationFailure(
            f"angle checks failed: {', '.join(report.failures)}", report
        )
    return report
