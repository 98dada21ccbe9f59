"""Planar geometric primitives: azimuths, angular separations, segment
intersection and angular-sector membership.

All angles are radians. Azimuths are measured counter-clockwise from the
+x axis and normalized to [0, 2*pi); angular distances are circular, so
0.1 and 2*pi - 0.1 are 0.2 rad apart. Everything here is pure and
stateless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

TWO_PI = 2.0 * math.pi


class GeometryError(ValueError):
    """Raised for degenerate geometric inputs (coincident points etc.)."""


@dataclass(frozen=True)
class Point2D:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError(f"non-finite coordinates ({self.x}, {self.y})")


@dataclass(frozen=True)
class Segment2D:
    a: Point2D
    b: Point2D

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise GeometryError("zero-length segment")

    @property
    def length(self) -> float:
        return distance(self.a, self.b)


@dataclass(frozen=True)
class Sector:
    """Angular sector anchored at ``origin``: all directions whose circular
    distance to ``center_azimuth`` is at most ``span / 2``."""

    origin: Point2D
    center_azimuth: float
    span: float

    def __post_init__(self) -> None:
        if not 0.0 < self.span < TWO_PI:
            raise GeometryError(f"sector span {self.span!r} outside (0, 2*pi)")
        object.__setattr__(self, "center_azimuth", self.center_azimuth % TWO_PI)


def distance(p: Point2D, q: Point2D) -> float:
    return math.hypot(q.x - p.x, q.y - p.y)


def azimuth(origin: Point2D, target: Point2D) -> float:
    """Angle of the vector origin -> target, CCW from +x, in [0, 2*pi).

    Raises GeometryError for coincident points ("degenerate direction").
    """
    dx = target.x - origin.x
    dy = target.y - origin.y
    if dx == 0.0 and dy == 0.0:
        raise GeometryError("degenerate direction: coincident points")
    return math.atan2(dy, dx) % TWO_PI


def circular_distance(a: float, b: float) -> float:
    """Shortest angular distance between two angles, in [0, pi]."""
    d = abs(a - b) % TWO_PI
    return min(d, TWO_PI - d)


def angular_separation(vertex: Point2D, p1: Point2D, p2: Point2D) -> float:
    """Smallest angle at ``vertex`` between the rays toward p1 and p2."""
    return circular_distance(azimuth(vertex, p1), azimuth(vertex, p2))


def _orient(ax: float, ay: float, bx: float, by: float, cx: float, cy: float) -> float:
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def _in_box(px: float, py: float, qx: float, qy: float, rx: float, ry: float) -> bool:
    # (rx, ry) is collinear with pq; is it inside pq's bounding box?
    return min(px, qx) <= rx <= max(px, qx) and min(py, qy) <= ry <= max(py, qy)


def segments_intersect(s1: Segment2D, s2: Segment2D) -> bool:
    """Closed-segment intersection test.

    Touching endpoints and collinear overlap count as intersecting, which
    is the conservative convention for treating a grazing contact with an
    obstacle as a blocked line of sight.
    """
    ax, ay, bx, by = s1.a.x, s1.a.y, s1.b.x, s1.b.y
    cx, cy, dx, dy = s2.a.x, s2.a.y, s2.b.x, s2.b.y
    d1 = _orient(cx, cy, dx, dy, ax, ay)
    d2 = _orient(cx, cy, dx, dy, bx, by)
    d3 = _orient(ax, ay, bx, by, cx, cy)
    d4 = _orient(ax, ay, bx, by, dx, dy)
    if ((d1 > 0) != (d2 > 0) and d1 != 0 and d2 != 0
            and (d3 > 0) != (d4 > 0) and d3 != 0 and d4 != 0):
        return True
    if d1 == 0 and _in_box(cx, cy, dx, dy, ax, ay):
        return True
    if d2 == 0 and _in_box(cx, cy, dx, dy, bx, by):
        return True
    if d3 == 0 and _in_box(ax, ay, bx, by, cx, cy):
        return True
    if d4 == 0 and _in_box(ax, ay, bx, by, dx, dy):
        return True
    return False


def sector_contains(sector: Sector, target: Point2D) -> bool:
    """Boundary-inclusive test of ``target``'s azimuth against the sector."""
    ray = azimuth(sector.origin, target)
    return circular_distance(ray, sector.center_azimuth) <= sector.span / 2.0


def within_fov(orientation: float, ray_azimuth: float, fov: float) -> bool:
    """Boundary-inclusive membership of a ray in an aperture of ``fov``
    radians centred on ``orientation``. Expects fov in (0, 2*pi]."""
    return circular_distance(orientation, ray_azimuth) <= fov / 2.0


def minimal_covering_arc(angles: Sequence[float]) -> tuple[float, float]:
    """Smallest circular arc containing every angle in ``angles``.

    Returns (width, center_azimuth). The width of a single distinct angle
    is 0; the largest possible width approaches 2*pi. Used to decide
    whether one aperture can cover a set of rays and to pick the aperture
    orientation (the arc midpoint).
    """
    a = sorted(x % TWO_PI for x in angles)
    if not a:
        raise GeometryError("empty angle set")
    n = len(a)
    # The minimal covering arc is the complement of the largest gap
    # between circularly consecutive angles.
    best_gap = -1.0
    best_i = 0
    for i in range(n):
        nxt = a[0] + TWO_PI if i == n - 1 else a[i + 1]
        gap = nxt - a[i]
        if gap > best_gap:
            best_gap = gap
            best_i = i
    width = max(0.0, TWO_PI - best_gap)
    start = a[(best_i + 1) % n]
    center = (start + width / 2.0) % TWO_PI
    return width, center
