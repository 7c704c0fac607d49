"""Triangles and the classical centers built on them."""

import logging
from dataclasses import dataclass
from typing import Literal

from .conics import Circle
from .errors import DegenerateTriangle, LinesNotConcurrent
from .numeric import (
    SQRT3,
    Check,
    Scalar,
    current_tolerance,
    is_exact,
    is_zero,
    sign_of,
    simplify,
)
from .projective import (
    Line,
    Point,
    SimilarityFrame,
    concurrent,
    distance_sq,
    join,
    line_through_with_normal,
    meet,
    midpoint,
)

logger = logging.getLogger(__name__)

Orientation = Literal["ccw", "cw"]
ApexSide = Literal["outward", "inward"]
Which = Literal["first", "second"]

HALF_SQRT3 = SQRT3 / 2


@dataclass(frozen=True, eq=False)
class Triangle:
    """Ordered triple of affine points with nonzero signed area."""

    a: Point
    b: Point
    c: Point

    def __post_init__(self) -> None:
        for label, v in zip("abc", self.vertices):
            if v.is_at_infinity:
                raise DegenerateTriangle(f"vertex {label} lies at infinity")
        for i, j in ((0, 1), (1, 2), (2, 0)):
            if self.vertices[i].coincides(self.vertices[j]):
                raise DegenerateTriangle("two vertices coincide")
        if is_zero(self.twice_area, max(float(s) for s in self.side_sq)):
            raise DegenerateTriangle("the vertices are collinear")

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.a, self.b, self.c)

    @property
    def twice_area(self) -> Scalar:
        """Signed, positive for counter-clockwise order."""
        (ax, ay), (bx, by), (cx, cy) = self.a.xy, self.b.xy, self.c.xy
        return simplify((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))

    @property
    def orientation(self) -> Orientation:
        return "ccw" if float(self.twice_area) > 0 else "cw"

    @property
    def side_sq(self) -> tuple[Scalar, Scalar, Scalar]:
        """Squared lengths of the sides opposite a, b and c."""
        return (
            distance_sq(self.b, self.c),
            distance_sq(self.c, self.a),
            distance_sq(self.a, self.b),
        )

    def is_scalene(self) -> bool:
        sides = self.side_sq
        scale = max(float(s) for s in sides)
        return all(
            not is_zero(simplify(sides[i] - sides[j]), scale) for i, j in ((0, 1), (1, 2), (2, 0))
        )

    def reversed(self) -> "Triangle":
        return Triangle(self.a, self.c, self.b)

    def rotated(self, shift: int) -> "Triangle":
        v = self.vertices
        k = shift % 3
        return Triangle(v[k], v[(k + 1) % 3], v[(k + 2) % 3])

    def counterclockwise(self) -> "Triangle":
        return self if self.orientation == "ccw" else self.reversed()

    def mapped(self, frame: SimilarityFrame) -> "Triangle":
        return Triangle(*(frame.apply(v).normalized() for v in self.vertices))

    def __repr__(self) -> str:
        return f"Triangle({self.a!r}, {self.b!r}, {self.c!r})"


def erected_apex(p: Point, q: Point, side: ApexSide, orientation: Orientation) -> Point:
    """Apex of the equilateral triangle on segment pq.

    Outward means the side of pq away from the third vertex of a triangle
    with the given orientation.
    """
    if p.coincides(q):
        raise DegenerateTriangle("cannot erect on a zero-length segment")
    (px, py), (qx, qy) = p.xy, q.xy
    mx, my = (px + qx) / 2, (py + qy) / 2
    # rot90(q - p) = (-(qy - py), qx - px)
    rx, ry = -(qy - py), qx - px
    sign = -1 if (side == "outward") == (orientation == "ccw") else 1
    return Point.affine(
        simplify(mx + sign * HALF_SQRT3 * rx),
        simplify(my + sign * HALF_SQRT3 * ry),
    )


def _apex_cevians(t: Triangle, which: Which) -> tuple[Line, Line, Line]:
    side: ApexSide = "outward" if which == "first" else "inward"
    apexes = (
        erected_apex(t.b, t.c, side, t.orientation),
        erected_apex(t.c, t.a, side, t.orientation),
        erected_apex(t.a, t.b, side, t.orientation),
    )
    return (join(t.a, apexes[0]), join(t.b, apexes[1]), join(t.c, apexes[2]))


def isogonic_center(t: Triangle, which: Which) -> tuple[Point, Check]:
    """Concurrency point of the vertex-to-apex lines and its residual."""
    l1, l2, l3 = _apex_cevians(t, which)
    point = meet(l1, l2).normalized()
    return point, concurrent(l1, l2, l3)


def fermat_point(t: Triangle, which: Which = "first") -> Point:
    point, check = isogonic_center(t, which)
    if not check:
        raise LinesNotConcurrent(f"{which} Fermat cevians miss by {check.residual:.3e} for {t}")
    return point


def has_wide_angle(t: Triangle) -> bool:
    """True if some angle is at least 120 degrees."""
    for apex, u, v in ((t.a, t.b, t.c), (t.b, t.c, t.a), (t.c, t.a, t.b)):
        (ax, ay), (ux, uy), (vx, vy) = apex.xy, u.xy, v.xy
        d = (ux - ax) * (vx - ax) + (uy - ay) * (vy - ay)
        if sign_of(d) < 0:
            # cos <= -1/2  <=>  4 d^2 >= |u|^2 |v|^2
            if sign_of(simplify(4 * d * d - distance_sq(apex, u) * distance_sq(apex, v))) >= 0:
                return True
    return False


@dataclass(frozen=True, eq=False)
class FermatPair:
    f1: Point
    f2: Point
    f1_check: Check
    f2_check: Check
    f1_minimizes_distance: bool

    @property
    def separation_sq(self) -> Scalar:
        return distance_sq(self.f1, self.f2)


def fermat_pair(t: Triangle) -> FermatPair:
    f1, c1 = isogonic_center(t, "first")
    f2, c2 = isogonic_center(t, "second")
    for which, check in (("first", c1), ("second", c2)):
        if not check:
            raise LinesNotConcurrent(f"{which} Fermat cevians miss by {check.residual:.3e}")
    wide = has_wide_angle(t)
    if wide:
        logger.debug("%s has an angle >= 120 degrees; F1 is not the distance minimizer", t)
    return FermatPair(f1, f2, c1, c2, f1_minimizes_distance=not wide)


def centroid(t: Triangle) -> Point:
    (ax, ay), (bx, by), (cx, cy) = t.a.xy, t.b.xy, t.c.xy
    return Point.affine(simplify((ax + bx + cx) / 3), simplify((ay + by + cy) / 3))


def _altitude(vertex: Point, p: Point, q: Point) -> Line:
    (px, py), (qx, qy) = p.xy, q.xy
    return line_through_with_normal(vertex, simplify(qx - px), simplify(qy - py))


def altitudes(t: Triangle) -> tuple[Line, Line, Line]:
    return (_altitude(t.a, t.b, t.c), _altitude(t.b, t.c, t.a), _altitude(t.c, t.a, t.b))


def orthocenter(t: Triangle) -> Point:
    """Meet of the altitudes from a and b."""
    ha, hb, hc = altitudes(t)
    point = meet(ha, hb).normalized()
    logger.debug(
        "orthocenter %s, third altitude residual %.3e", point, concurrent(ha, hb, hc).residual
    )
    return point


def orthocenter_check(t: Triangle) -> Check:
    return concurrent(*altitudes(t))


def circumcircle(t: Triangle) -> Circle:
    (ax, ay), (bx, by), (cx, cy) = t.a.xy, t.b.xy, t.c.xy
    ab = line_through_with_normal(midpoint(t.a, t.b), simplify(bx - ax), simplify(by - ay))
    bc = line_through_with_normal(midpoint(t.b, t.c), simplify(cx - bx), simplify(cy - by))
    center = meet(ab, bc).normalized()
    return Circle(center, distance_sq(center, t.a))


def medial(t: Triangle) -> Triangle:
    return Triangle(midpoint(t.b, t.c), midpoint(t.c, t.a), midpoint(t.a, t.b))


def nine_point_circle(t: Triangle) -> Circle:
    return circumcircle(medial(t))


def nine_points(t: Triangle) -> list[Point]:
    """Side midpoints, altitude feet, then midpoints of each vertex and the orthocenter."""
    h = orthocenter(t)
    ha, hb, hc = altitudes(t)
    feet = [meet(ha, join(t.b, t.c)), meet(hb, join(t.c, t.a)), meet(hc, join(t.a, t.b))]
    return [
        *medial(t).vertices,
        *(f.normalized() for f in feet),
        *(midpoint(v, h) for v in t.vertices),
    ]


def nine_point_incidences(t: Triangle) -> list[Check]:
    circle = nine_point_circle(t)
    return [circle.contains(p) for p in nine_points(t)]


def circle_through(center: Point, p: Point) -> Circle:
    return Circle(center, distance_sq(center, p))


def equal_lengths(values: tuple[Scalar, ...]) -> Check:
    """Max relative spread of a tuple of squared lengths as a verdict."""
    floats = [float(v) for v in values]
    scale = max(abs(v) for v in floats) or 1.0
    residual = (max(floats) - min(floats)) / scale
    if is_exact(*values):
        return Check(all(v == values[0] for v in values), residual)
    return Check(residual <= current_tolerance().eps, residual)
