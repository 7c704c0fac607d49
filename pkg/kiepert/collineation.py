"""Projective collineations and triangles triply perspective through a Hessian point."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .centers import Triangle
from .conics import Conic, second_intersection, tangent_at
from .errors import (
    DegenerateConic,
    DegenerateFrame,
    IdenticalElements,
    NotOnHessianLine,
    PointNotOnConic,
    TangentChord,
)
from .kiepert_yiu import LineCertificate, TriplePerspectivity, hessian_line, triple_perspectivity
from .numeric import SQRT3, Check, is_zero, norm, simplify
from .numeric.linalg import Matrix3, adjugate, det3, matmul, matvec, transpose
from .projective import Line, Point, meet

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Homography:
    """Invertible 3x3 map on homogeneous coordinates, up to scale."""

    matrix: Matrix3

    def __post_init__(self) -> None:
        m = self.matrix
        scale = max(norm(row) for row in m) ** 3
        if is_zero(simplify(det3(m)), scale):
            raise DegenerateFrame("the homography matrix is singular")

    @classmethod
    def identity(cls) -> "Homography":
        one, zero = Fraction(1), Fraction(0)
        return cls(((one, zero, zero), (zero, one, zero), (zero, zero, one)))

    @classmethod
    def from_four_points(cls, src: Sequence[Point], dst: Sequence[Point]) -> "Homography":
        """The map sending src[i] to dst[i]; no three points of either set collinear."""
        return cls(matmul(_standard_frame(dst), adjugate(_standard_frame(src))))

    def apply(self, p: Point) -> Point:
        return Point(*(simplify(c) for c in matvec(self.matrix, p.coords))).normalized()

    def apply_line(self, line: Line) -> Line:
        """Lines transform by the inverse transpose."""
        coords = matvec(transpose(adjugate(self.matrix)), line.coords)
        return Line(*(simplify(c) for c in coords)).normalized()

    def apply_conic(self, k: Conic) -> Conic:
        """Image conic: the pullback of k by the inverse map."""
        return k.pullback(adjugate(self.matrix)).normalized()

    def apply_triangle(self, t: Triangle) -> Triangle:
        return Triangle(*(self.apply(v) for v in t.vertices))

    def inverse(self) -> "Homography":
        return Homography(adjugate(self.matrix))

    def then(self, other: "Homography") -> "Homography":
        return Homography(matmul(other.matrix, self.matrix))


def _standard_frame(points: Sequence[Point]) -> Matrix3:
    """Columns lambda_i * p_i (i < 3) with lambda chosen so they sum to p_3."""
    if len(points) != 4:
        raise DegenerateFrame("a projective frame needs four points")
    base = transpose([p.coords for p in points[:3]])
    weights = matvec(adjugate(base), points[3].coords)
    scale = norm(weights) or 1.0
    if any(is_zero(simplify(w), scale) for w in weights) or is_zero(
        simplify(det3(base)), max(norm(row) for row in base) ** 3
    ):
        raise DegenerateFrame("three of the four points are collinear")
    return tuple(  # type: ignore[return-value]
        tuple(simplify(base[r][c] * weights[c]) for c in range(3)) for r in range(3)
    )


def pullback_check(h: Homography, k1: Conic, k2: Conic) -> Check:
    """H carries k1 onto k2 iff H^T M2 H is proportional to M1."""
    return k2.pullback(h.matrix).same_as(k1)


def _validate_triple(k: Conic, points: Sequence[Point], label: str) -> None:
    if k.is_degenerate:
        raise DegenerateConic(f"{label} conic is degenerate")
    if len(points) != 3:
        raise PointNotOnConic(f"{label} needs exactly three points")
    for p in points:
        if not k.contains(p):
            raise PointNotOnConic(f"{p} is not on the {label} conic")
    for i in range(3):
        if points[i].coincides(points[(i + 1) % 3]):
            raise PointNotOnConic(f"{label} points must be distinct")


def collineation_from_conics(
    k1: Conic, ps: Sequence[Point], k2: Conic, qs: Sequence[Point]
) -> Homography:
    """Collineation with k1 -> k2 and ps[i] -> qs[i].

    The fourth correspondence is the meet of the tangents at the first two points.
    """
    _validate_triple(k1, ps, "source")
    _validate_triple(k2, qs, "target")
    for i, j in ((0, 1), (1, 2)):
        try:
            src = [*ps, meet(tangent_at(k1, ps[i]), tangent_at(k1, ps[j]))]
            dst = [*qs, meet(tangent_at(k2, qs[i]), tangent_at(k2, qs[j]))]
            h = Homography.from_four_points(src, dst)
        except (DegenerateFrame, IdenticalElements) as exc:
            logger.debug("tangent pair (%d, %d) gives no frame: %s", i, j, exc)
            continue
        check = pullback_check(h, k1, k2)
        logger.debug("collineation pullback residual %.3e", check.residual)
        return h
    raise DegenerateFrame("no tangent pair yields four points in general position")


@dataclass(frozen=True, eq=False)
class Theorem3Result:
    inscribed: Triangle
    perspectivity: TriplePerspectivity
    hessian: LineCertificate
    on_hessian: Check

    @property
    def passed(self) -> bool:
        return bool(self.perspectivity.collinearity) and bool(self.on_hessian)


def theorem3_inscribed(k: Conic, t: Triangle, s: Point) -> Theorem3Result:
    """Second triangle cut out by the lines from each vertex of t through s.

    s must lie on the Hessian line of t; the result is then triply perspective
    with t and every perspector lies on that line.
    """
    hessian = hessian_line(k, t)
    if not hessian.line.contains(s):
        raise NotOnHessianLine(f"{s} is off the Hessian line {hessian.line}")
    vertices = []
    for v in t.vertices:
        if v.coincides(s):
            raise TangentChord(f"{s} is a vertex of the triangle")
        other = second_intersection(k, v, s)
        if other.coincides(v):
            raise TangentChord(f"the line from {v} through {s} is tangent")
        vertices.append(other)
    t2 = Triangle(*vertices)
    tp = triple_perspectivity(t, t2)
    on_hessian = Check.all_of([hessian.line.contains(p) for p in tp.perspectors])
    return Theorem3Result(t2, tp, hessian, on_hessian)


UNIT_CIRCLE = Conic.from_coeffs([1, 0, 1, 0, 0, -1])
EQUILATERAL_ON_CIRCLE = (
    Point.affine(1, 0),
    Point.affine(Fraction(-1, 2), SQRT3 / 2),
    Point.affine(Fraction(-1, 2), -SQRT3 / 2),
)


@dataclass(frozen=True, eq=False)
class TransportedResult:
    direct: Theorem3Result
    transported: Triangle
    agreement: Check
    hessian_at_infinity: Check
    pullback: Check


def theorem3_transported(k: Conic, t: Triangle, s: Point) -> TransportedResult:
    """Build the second triangle on the unit circle model and map it back.

    The vertices of t go to an equilateral triangle, whose Hessian line is the
    line at infinity, so the image of s must lie at infinity there.
    """
    direct = theorem3_inscribed(k, t, s)
    h = collineation_from_conics(k, t.vertices, UNIT_CIRCLE, EQUILATERAL_ON_CIRCLE)
    model_s = h.apply(s)
    model = [second_intersection(UNIT_CIRCLE, v, model_s) for v in EQUILATERAL_ON_CIRCLE]
    back = h.inverse()
    transported = Triangle(*(back.apply(v) for v in model))
    agreement = Check.all_of(
        [a.coincides(b) for a, b in zip(direct.inscribed.vertices, transported.vertices)]
    )
    at_infinity = Line.at_infinity().contains(model_s)
    return TransportedResult(
        direct=direct,
        transported=transported,
        agreement=agreement,
        hessian_at_infinity=at_infinity,
        pullback=pullback_check(h, k, UNIT_CIRCLE),
    )
