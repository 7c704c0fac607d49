"""Conics, circles, five-point fitting and the intersection algorithms."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    ConcentricCircles,
    DegenerateConic,
    FewerThanThreeRealIntersections,
    NoUniqueConic,
    NotCentral,
    PointNotOnConic,
    PoleUndefined,
)
from .numeric import (
    Check,
    Scalar,
    check_proportional,
    check_zero,
    exact,
    is_exact,
    is_zero,
    norm,
    simplify,
    sqrt,
)
from .numeric.linalg import Matrix3, det3, dot, matmul, matvec, null_space, transpose
from .numeric.poly import Poly, deflate, real_roots
from .projective import Line, Point, SimilarityFrame, distance_sq

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Conic:
    """A x^2 + B xy + C y^2 + D xw + E yw + F w^2 = 0, up to scale."""

    A: Scalar
    B: Scalar
    C: Scalar
    D: Scalar
    E: Scalar
    F: Scalar

    def __post_init__(self) -> None:
        for name in ("A", "B", "C", "D", "E", "F"):
            object.__setattr__(self, name, exact(getattr(self, name)))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Scalar]) -> "Conic":
        if len(coeffs) != 6:
            raise ValueError("a conic needs six coefficients")
        return cls(*(simplify(exact(c)) for c in coeffs))

    @classmethod
    def from_matrix(cls, m: Sequence[Sequence[Scalar]]) -> "Conic":
        return cls.from_coeffs(
            [m[0][0], m[0][1] + m[1][0], m[1][1], m[0][2] + m[2][0], m[1][2] + m[2][1], m[2][2]]
        )

    @property
    def coeffs(self) -> tuple[Scalar, ...]:
        return (self.A, self.B, self.C, self.D, self.E, self.F)

    @cached_property
    def matrix(self) -> Matrix3:
        """Symmetric 3x3 coefficient array."""
        return (
            (self.A, self.B / 2, self.D / 2),
            (self.B / 2, self.C, self.E / 2),
            (self.D / 2, self.E / 2, self.F),
        )

    @property
    def is_exact(self) -> bool:
        return is_exact(*self.coeffs)

    @property
    def determinant(self) -> Scalar:
        return simplify(det3(self.matrix))

    @property
    def is_degenerate(self) -> bool:
        return is_zero(self.determinant, norm(self.coeffs) ** 3)

    @property
    def quadratic_discriminant(self) -> Scalar:
        """4AC - B^2; zero for parabolas."""
        return simplify(4 * self.A * self.C - self.B * self.B)

    def normalized(self) -> "Conic":
        """Exact: first nonzero coefficient 1. Numeric: largest magnitude 1."""
        if self.is_exact:
            lead = next(c for c in self.coeffs if c != 0)
        else:
            lead = max(self.coeffs, key=lambda c: abs(float(c)))
        return Conic.from_coeffs([c / lead for c in self.coeffs])

    def evaluate(self, p: Point) -> Scalar:
        x, y, w = p.coords
        return simplify(
            self.A * x * x + self.B * x * y + self.C * y * y
            + self.D * x * w + self.E * y * w + self.F * w * w
        )

    def bilinear(self, p: Point, q: Point) -> Scalar:
        return simplify(dot(p.coords, matvec(self.matrix, q.coords)))

    def contains(self, p: Point) -> Check:
        return check_zero(self.evaluate(p), norm(self.coeffs) * norm(p.coords) ** 2)

    def same_as(self, other: "Conic") -> Check:
        return check_proportional(self.coeffs, other.coeffs)

    def polar(self, p: Point) -> Line:
        a, b, c = matvec(self.matrix, p.coords)
        return Line(simplify(a), simplify(b), simplify(c))

    def pullback(self, m: Sequence[Sequence[Scalar]]) -> "Conic":
        """Conic X -> self(m X): coefficient array m^T M m."""
        return Conic.from_matrix(matmul(transpose(m), matmul(self.matrix, m)))

    def transformed(self, frame: SimilarityFrame) -> "Conic":
        """Image of the conic under a similarity frame."""
        return self.pullback(frame.inverse().matrix).normalized()

    def to_json(self) -> list[Scalar]:
        return list(self.coeffs)

    def __repr__(self) -> str:
        return "Conic({})".format(", ".join(str(c) for c in self.normalized().coeffs))


@dataclass(frozen=True, eq=False)
class Circle:
    center: Point
    radius_sq: Scalar

    def __post_init__(self) -> None:
        object.__setattr__(self, "radius_sq", exact(self.radius_sq))

    def to_conic(self) -> Conic:
        cx, cy = self.center.xy
        one = exact(1)
        return Conic.from_coeffs(
            [one, 0, one, -2 * cx, -2 * cy, cx * cx + cy * cy - self.radius_sq]
        )

    def power(self, p: Point) -> Scalar:
        return simplify(distance_sq(p, self.center) - self.radius_sq)

    def contains(self, p: Point) -> Check:
        return check_zero(self.power(p), abs(float(self.radius_sq)) or 1.0)

    def transformed(self, frame: SimilarityFrame) -> "Circle":
        return Circle(frame.apply(self.center), simplify(self.radius_sq * frame.scale_sq))


@dataclass(frozen=True, eq=False)
class ChordParam:
    """Chord through a base point on a circle, named by its slope (None = vertical)."""

    base: Point
    slope: Scalar | None

    def point_on(self, circle: Circle) -> Point:
        """Second intersection of the chord with the circle."""
        gx, gy = self.base.xy
        cx, cy = circle.center.xy
        u, v = gx - cx, gy - cy
        if self.slope is None:
            return Point.affine(gx, simplify(gy - 2 * v))
        m = self.slope
        s = -2 * (u + v * m) / (1 + m * m)
        return Point.affine(simplify(gx + s), simplify(gy + s * m))

    def sort_key(self) -> float:
        return float("inf") if self.slope is None else float(self.slope)


def fit_five_points(points: Sequence[Point]) -> Conic:
    """The unique conic through five points."""
    if len(points) != 5:
        raise ValueError("five points are required")
    for i in range(5):
        for j in range(i + 1, 5):
            if points[i].coincides(points[j]):
                raise NoUniqueConic(f"points {i} and {j} coincide")

    work = list(points)
    frame = None
    if not is_exact(*(c for p in points for c in p.coords)):
        frame = _conditioning_frame(points)
        work = [frame.apply(p) for p in points]

    rows = []
    for p in work:
        x, y, w = p.coords
        rows.append([x * x, x * y, y * y, x * w, y * w, w * w])
    basis = null_space(rows)
    if len(basis) != 1:
        raise NoUniqueConic(f"incidence system has nullity {len(basis)}")
    conic = Conic.from_coeffs(basis[0])
    if frame is not None:
        conic = conic.pullback(frame.matrix)
    conic = conic.normalized()

    for p in points:
        if not conic.contains(p):
            raise NoUniqueConic(f"fitted conic misses {p}")
    if conic.is_degenerate:
        logger.debug("five-point fit is degenerate: %s", conic)
    return conic


def _conditioning_frame(points: Sequence[Point]) -> SimilarityFrame:
    """Translate the centroid to the origin and scale to unit mean distance."""
    xy = [tuple(float(c) for c in p.xy) for p in points]
    mx = sum(x for x, _ in xy) / len(xy)
    my = sum(y for _, y in xy) / len(xy)
    spread = sum(((x - mx) ** 2 + (y - my) ** 2) ** 0.5 for x, y in xy) / len(xy) or 1.0
    s = 1.0 / spread
    return SimilarityFrame(s, 0.0, -s * mx, -s * my)


def center_of(k: Conic) -> Point:
    """Affine center of a central conic (pole of the line at infinity)."""
    if k.is_degenerate:
        raise DegenerateConic(f"{k} is degenerate")
    det = k.quadratic_discriminant
    if is_zero(det, max(abs(float(k.A)), abs(float(k.B)), abs(float(k.C))) ** 2):
        raise NotCentral(f"{k} is a parabola")
    x = (k.B * k.E - 2 * k.C * k.D) / det
    y = (k.B * k.D - 2 * k.A * k.E) / det
    return Point.affine(simplify(x), simplify(y))


def is_rectangular(k: Conic) -> bool:
    """Perpendicular asymptotes: A + C = 0."""
    scale = max(abs(float(k.A)), abs(float(k.B)), abs(float(k.C)))
    return is_zero(simplify(k.A + k.C), scale)


def rectangularity(k: Conic) -> Check:
    scale = max(abs(float(k.A)), abs(float(k.B)), abs(float(k.C)))
    return check_zero(simplify(k.A + k.C), scale)


def tangent_at(k: Conic, p: Point) -> Line:
    """Tangent line at a point of the conic (its polar)."""
    if not k.contains(p):
        raise PointNotOnConic(f"{p} is not on {k}")
    a, b, c = matvec(k.matrix, p.coords)
    scale = norm(k.coeffs) * norm(p.coords)
    if all(is_zero(v, scale) for v in (a, b, c)):
        raise PoleUndefined(f"{p} is a singular point of {k}")
    return Line(simplify(a), simplify(b), simplify(c))


def second_intersection(k: Conic, known: Point, through: Point) -> Point:
    """Residual intersection of the line (known, through) with the conic.

    Returns `known` itself when the line is tangent there.
    """
    if not k.contains(known):
        raise PointNotOnConic(f"{known} is not on {k}")
    if known.coincides(through):
        raise PointNotOnConic("the second point must differ from the known intersection")
    qt = k.evaluate(through)
    bkt = k.bilinear(known, through)
    scale = norm(k.coeffs) * norm(known.coords) * norm(through.coords)
    if is_zero(qt, scale) and is_zero(bkt, scale):
        raise DegenerateConic("the line lies inside the conic")
    coords = [simplify(qt * a - 2 * bkt * b) for a, b in zip(known.coords, through.coords)]
    return Point(*coords).normalized()


def chord_quartic(c: Circle, k: Conic, common: Point) -> Poly:
    """k evaluated on the chords of c through `common`, cleared of denominators.

    Factors as N(m) * p(m) with N(m) = -2(u + v m) the known root of the tangent
    direction and p(m) the cubic returned by chord_cubic.
    """
    u, v = _offset(c, common)
    n = Poly.of(-2 * u, -2 * v)
    return n * chord_cubic(c, k, common)


def chord_cubic(c: Circle, k: Conic, common: Point) -> Poly:
    """Cubic in the slope m whose roots name the residual intersections."""
    u, v = _offset(c, common)
    gx, gy = common.xy
    grad_x = 2 * k.A * gx + k.B * gy + k.D
    grad_y = k.B * gx + 2 * k.C * gy + k.E
    one_plus_m2 = Poly.of(1, 0, 1)
    tangent_part = Poly.of(grad_x, grad_y)
    n = Poly.of(-2 * u, -2 * v)
    quadratic_part = Poly.of(k.A, k.B, k.C)
    return one_plus_m2 * tangent_part + n * quadratic_part


def _offset(c: Circle, common: Point) -> tuple[Scalar, Scalar]:
    gx, gy = common.xy
    cx, cy = c.center.xy
    return simplify(gx - cx), simplify(gy - cy)


def residual_chords(c: Circle, k: Conic, common: Point) -> list[ChordParam]:
    """Chord parameters of the intersections of c and k other than `common`."""
    if not c.contains(common) or not k.contains(common):
        raise PointNotOnConic(f"{common} must lie on both curves")
    if k.is_degenerate:
        raise DegenerateConic(f"{k} is degenerate")

    u, v = _offset(c, common)
    quartic = chord_quartic(c, k, common)
    cubic = chord_cubic(c, k, common)
    if not is_zero(v, max(abs(float(u)), abs(float(v)))):
        # the tangent direction m0 = -u/v is the quartic root that names `common`
        m0 = simplify(-u / v)
        with_known = deflate(quartic, m0)
        logger.debug("deflated tangent slope %s, residual %.3e", m0, with_known.residual)
        cubic = with_known * simplify(1 / (-2 * v))

    chords: list[ChordParam] = []
    trimmed = cubic.trimmed()
    if trimmed.degree < 3:
        vertical = ChordParam(common, None)
        if not vertical.point_on(c).coincides(common):
            chords.append(vertical)
    chords.extend(ChordParam(common, m) for m in real_roots(trimmed))

    surviving = []
    for chord in chords:
        if chord.slope is not None and is_zero(simplify(u + v * chord.slope), 1.0):
            continue
        surviving.append(chord)
    surviving.sort(key=ChordParam.sort_key)
    return surviving


def circle_conic_residual_intersections(c: Circle, k: Conic, common: Point) -> list[Point]:
    """The three intersections of a circle and a conic other than a known common point."""
    chords = residual_chords(c, k, common)
    points = [chord.point_on(c) for chord in chords]
    if len(points) != 3:
        raise FewerThanThreeRealIntersections(
            f"expected 3 residual intersections, found {len(points)}"
        )
    for p in points:
        on_conic, on_circle = k.contains(p), c.contains(p)
        if not on_conic or not on_circle:
            raise FewerThanThreeRealIntersections(
                f"{p} misses the curves (residuals {on_conic.residual:.3e}, "
                f"{on_circle.residual:.3e})"
            )
    return points


def radical_axis(c1: Circle, c2: Circle) -> Line:
    """Line of equal power with respect to two circles."""
    (x1, y1), (x2, y2) = c1.center.xy, c2.center.xy
    if c1.center.coincides(c2.center):
        raise ConcentricCircles("concentric circles have no radical axis")
    a = 2 * (x2 - x1)
    b = 2 * (y2 - y1)
    c = (x1 * x1 + y1 * y1 - c1.radius_sq) - (x2 * x2 + y2 * y2 - c2.radius_sq)
    return Line(simplify(a), simplify(b), simplify(c)).normalized()


def circle_circle_intersections(c1: Circle, c2: Circle) -> list[Point]:
    """Zero, one or two common points of two circles."""
    axis = radical_axis(c1, c2)
    a, b, c = axis.coords
    cx, cy = c1.center.xy
    nn = simplify(a * a + b * b)
    offset = simplify((a * cx + b * cy + c) / nn)
    fx, fy = simplify(cx - offset * a), simplify(cy - offset * b)
    h_sq = simplify(c1.radius_sq - offset * offset * nn)
    scale = abs(float(c1.radius_sq)) or 1.0
    if is_zero(h_sq, scale):
        return [Point.affine(fx, fy)]
    if float(h_sq) < 0:
        return []
    k = sqrt(simplify(h_sq / nn))
    return [
        Point.affine(simplify(fx - k * b), simplify(fy + k * a)),
        Point.affine(simplify(fx + k * b), simplify(fy - k * a)),
    ]

