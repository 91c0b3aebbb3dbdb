"""Planar geometric primitives used by all solvers.

Angles are radians everywhere; degrees appear only at the CLI boundary.
All functions are pure and thread-safe.
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from fermatquad.errors import DegenerateInputError, InvalidInputError

# Relative tolerance on cross products in the intersection predicate.
CROSS_REL_TOL = 1e-12


@dataclass(frozen=True)
class Point:
    """A position in the plane; both coordinates must be finite."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidInputError(f"point coordinates must be finite, got ({self.x}, {self.y})")


@dataclass(frozen=True)
class PlanarVector:
    """A displacement in the plane; both components must be finite."""

    dx: float
    dy: float

    def __post_init__(self):
        if not (math.isfinite(self.dx) and math.isfinite(self.dy)):
            raise InvalidInputError(f"vector components must be finite, got ({self.dx}, {self.dy})")

    def norm(self) -> float:
        return math.hypot(self.dx, self.dy)


def distance(a: Point, b: Point) -> float:
    """Euclidean distance between two points."""
    return math.hypot(b.x - a.x, b.y - a.y)


def unit_vector(src: Point, dst: Point) -> PlanarVector:
    """Unit direction from ``src`` toward ``dst``.

    Raises DegenerateInputError when the points coincide.
    """
    d = distance(src, dst)
    if d == 0.0:
        raise DegenerateInputError(f"cannot take a direction between coincident points {src}")
    return PlanarVector((dst.x - src.x) / d, (dst.y - src.y) / d)


def angle_at(vertex: Point, p: Point, q: Point) -> float:
    """Angle in [0, pi] between rays vertex->p and vertex->q.

    Symmetric in p and q.  Raises DegenerateInputError when either ray
    endpoint coincides with the vertex.
    """
    u = unit_vector(vertex, p)
    v = unit_vector(vertex, q)
    dot = u.dx * v.dx + u.dy * v.dy
    return math.acos(max(-1.0, min(1.0, dot)))


def rotate(v: PlanarVector, theta: float) -> PlanarVector:
    """Counterclockwise rotation of ``v`` by ``theta`` radians."""
    c = math.cos(theta)
    s = math.sin(theta)
    return PlanarVector(c * v.dx - s * v.dy, s * v.dx + c * v.dy)


def _cross(ox: float, oy: float, ax: float, ay: float, bx: float, by: float) -> float:
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def segment_intersection(a: Point, b: Point, c: Point, d: Point) -> Optional[Point]:
    """Intersection point of segments [a, b] and [c, d].

    Returns the crossing point (endpoints included) or None when the
    segments do not meet.  Collinear overlapping segments have no unique
    intersection and raise DegenerateInputError.
    """
    rx, ry = b.x - a.x, b.y - a.y
    sx, sy = d.x - c.x, d.y - c.y
    len_r = math.hypot(rx, ry)
    len_s = math.hypot(sx, sy)
    if len_r == 0.0 or len_s == 0.0:
        raise DegenerateInputError("segments must have nonzero length")
    denom = rx * sy - ry * sx
    qpx, qpy = c.x - a.x, c.y - a.y
    if abs(denom) <= CROSS_REL_TOL * len_r * len_s:
        # Parallel directions: either collinear or disjoint parallels.
        off = qpx * ry - qpy * rx
        if abs(off) > CROSS_REL_TOL * len_r * math.hypot(qpx, qpy):
            return None
        # Collinear: overlap is ambiguous, a single touch point is not.
        t0 = (qpx * rx + qpy * ry) / (len_r * len_r)
        t1 = t0 + (sx * rx + sy * ry) / (len_r * len_r)
        lo, hi = min(t0, t1), max(t0, t1)
        if hi < 0.0 or lo > 1.0:
            return None
        if math.isclose(hi, 0.0, abs_tol=CROSS_REL_TOL):
            return Point(a.x, a.y)
        if math.isclose(lo, 1.0, abs_tol=CROSS_REL_TOL):
            return Point(b.x, b.y)
        raise DegenerateInputError("collinear segments overlap; intersection is ambiguous")
    t = (qpx * sy - qpy * sx) / denom
    u = (qpx * ry - qpy * rx) / denom
    if -0.0 <= t <= 1.0 and 0.0 <= u <= 1.0:
        return Point(a.x + t * rx, a.y + t * ry)
    return None


def is_convex_quad(vertices: Sequence[Point]) -> bool:
    """True iff the four vertices, in the given cyclic order, form a
    strictly convex quadrilateral (no collinear triples).

    Raises DegenerateInputError when any two vertices coincide.
    """
    if len(vertices) != 4:
        raise InvalidInputError(f"expected 4 vertices, got {len(vertices)}")
    for i in range(4):
        for j in range(i + 1, 4):
            if distance(vertices[i], vertices[j]) == 0.0:
                raise DegenerateInputError(f"vertices {i + 1} and {j + 1} coincide")
    sign = 0.0
    for i in range(4):
        o = vertices[i]
        p = vertices[(i + 1) % 4]
        q = vertices[(i + 2) % 4]
        cr = _cross(o.x, o.y, p.x, p.y, q.x, q.y)
        if cr == 0.0:
            return False
        if sign == 0.0:
            sign = cr
        elif sign * cr < 0.0:
            return False
    return True
