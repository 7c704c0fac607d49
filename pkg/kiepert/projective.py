from dataclasses import dataclass
from fractions import Fraction

from .errors import CoincidentFermatPoints, IdenticalElements, PreconditionError
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
)
from .numeric.linalg import Matrix3, Vector3, cross, det3, dot, matvec, transpose


@dataclass(frozen=True, eq=False)
class Point:
    """Homogeneous point (x : y : w), defined up to a nonzero scale."""

    x: Scalar
    y: Scalar
    w: Scalar = Fraction(1)

    def __post_init__(self) -> None:
        for name in ("x", "y", "w"):
            object.__setattr__(self, name, exact(getattr(self, name)))
        if is_exact(self.x, self.y, self.w) and self.x == 0 and self.y == 0 and self.w == 0:
            raise PreconditionError("(0 : 0 : 0) is not a point")

    @classmethod
    def affine(cls, x: Scalar, y: Scalar) -> "Point":
        return cls(exact(x), exact(y), Fraction(1))

    @property
    def coords(self) -> Vector3:
        return (self.x, self.y, self.w)

    @property
    def is_at_infinity(self) -> bool:
        return is_zero(self.w, norm(self.coords))

    @property
    def xy(self) -> tuple[Scalar, Scalar]:
        """Affine coordinates; only meaningful for finite points."""
        if self.is_at_infinity:
            raise PreconditionError(f"{self} lies at infinity")
        if is_exact(self.w) and self.w == 1:
            return (self.x, self.y)
        return (simplify(self.x / self.w), simplify(self.y / self.w))

    def normalized(self) -> "Point":
        """Scale to w = 1, or make the first nonzero of (x, y) equal 1 at infinity."""
        if not self.is_at_infinity:
            x, y = self.xy
            return Point(x, y, Fraction(1))
        lead = self.x if not is_zero(self.x, norm(self.coords)) else self.y
        return Point(simplify(self.x / lead), simplify(self.y / lead), exact(0))

    def coincides(self, other: "Point") -> Check:
        return check_proportional(self.coords, other.coords)

    def __repr__(self) -> str:
        p = self.normalized()
        if self.is_at_infinity:
            return f"Point({p.x}, {p.y}, 0)"
        return f"Point({p.x}, {p.y})"


@dataclass(frozen=True, eq=False)
class Line:
    """Line covector (a : b : c) for a*x + b*y + c*w = 0."""

    a: Scalar
    b: Scalar
    c: Scalar

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, exact(getattr(self, name)))
        if is_exact(self.a, self.b, self.c) and self.a == 0 and self.b == 0 and self.c == 0:
            raise PreconditionError("(0 : 0 : 0) is not a line")

    @classmethod
    def at_infinity(cls) -> "Line":
        return cls(Fraction(0), Fraction(0), Fraction(1))

    @property
    def coords(self) -> Vector3:
        return (self.a, self.b, self.c)

    @property
    def is_at_infinity(self) -> bool:
        scale = norm(self.coords)
        return is_zero(self.a, scale) and is_zero(self.b, scale)

    def value_at(self, p: Point) -> Scalar:
        return dot(self.coords, p.coords)

    def contains(self, p: Point) -> Check:
        return check_zero(self.value_at(p), norm(self.coords) * norm(p.coords))

    def normalized(self) -> "Line":
        """Make the first coefficient that is not zero equal to 1."""
        scale = norm(self.coords)
        lead = next(v for v in self.coords if not is_zero(v, scale))
        return Line(*(simplify(v / lead) for v in self.coords))

    def coincides(self, other: "Line") -> Check:
        return check_proportional(self.coords, other.coords)

    def __repr__(self) -> str:
        a, b, c = self.normalized().coords
        return f"Line({a}, {b}, {c})"


def _nonzero_cross(u: Vector3, v: Vector3, what: str) -> Vector3:
    out = cross(u, v)
    if is_exact(*out):
        if all(c == 0 for c in out):
            raise IdenticalElements(f"cannot take the {what} of identical elements")
    elif norm(out) <= norm(u) * norm(v) * 1e-14:
        raise IdenticalElements(f"cannot take the {what} of (numerically) identical elements")
    return out


def join(p: Point, q: Point) -> Line:
    """Line through two distinct points."""
    return Line(*_nonzero_cross(p.coords, q.coords, "join"))


def meet(l: Line, m: Line) -> Point:
    """Common point of two distinct lines; parallels meet at infinity."""
    return Point(*_nonzero_cross(l.coords, m.coords, "meet"))


def _det_check(rows: tuple[Vector3, Vector3, Vector3]) -> Check:
    return check_zero(det3(rows), norm(rows[0]) * norm(rows[1]) * norm(rows[2]))


def collinear(p1: Point, p2: Point, p3: Point) -> Check:
    return _det_check((p1.coords, p2.coords, p3.coords))


def concurrent(l1: Line, l2: Line, l3: Line) -> Check:
    return _det_check((l1.coords, l2.coords, l3.coords))


def midpoint(p: Point, q: Point) -> Point:
    (px, py), (qx, qy) = p.xy, q.xy
    return Point.affine((px + qx) / 2, (py + qy) / 2)


def distance_sq(p: Point, q: Point) -> Scalar:
    (px, py), (qx, qy) = p.xy, q.xy
    return simplify((px - qx) ** 2 + (py - qy) ** 2)


def reflect_through(p: Point, center: Point) -> Point:
    """Point reflection 2*center - p."""
    (px, py), (cx, cy) = p.xy, center.xy
    return Point.affine(2 * cx - px, 2 * cy - py)


def line_through_with_normal(p: Point, nx: Scalar, ny: Scalar) -> Line:
    """Line through p whose normal vector is (nx, ny)."""
    px, py = p.xy
    return Line(nx, ny, -(nx * px + ny * py))


@dataclass(frozen=True)
class SimilarityFrame:
    """Direct similarity z -> alpha*z + beta with alpha = p + i*q, beta = tx + i*ty."""

    p: Scalar
    q: Scalar
    tx: Scalar
    ty: Scalar

    @classmethod
    def identity(cls) -> "SimilarityFrame":
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(0))

    @property
    def matrix(self) -> Matrix3:
        zero, one = exact(0), exact(1)
        return ((self.p, -self.q, self.tx), (self.q, self.p, self.ty), (zero, zero, one))

    @property
    def scale_sq(self) -> Scalar:
        return simplify(self.p * self.p + self.q * self.q)

    def inverse(self) -> "SimilarityFrame":
        n = self.scale_sq
        ip, iq = simplify(self.p / n), simplify(-self.q / n)
        # beta' = -alpha^{-1} * beta
        tx = simplify(-(ip * self.tx - iq * self.ty))
        ty = simplify(-(iq * self.tx + ip * self.ty))
        return SimilarityFrame(ip, iq, tx, ty)

    def then(self, other: "SimilarityFrame") -> "SimilarityFrame":
        """Composition: apply self first, then other."""
        p = simplify(other.p * self.p - other.q * self.q)
        q = simplify(other.q * self.p + other.p * self.q)
        tx = simplify(other.p * self.tx - other.q * self.ty + other.tx)
        ty = simplify(other.q * self.tx + other.p * self.ty + other.ty)
        return SimilarityFrame(p, q, tx, ty)

    def apply(self, pt: Point) -> Point:
        x, y, w = matvec(self.matrix, pt.coords)
        return Point(simplify(x), simplify(y), simplify(w))

    def apply_line(self, line: Line) -> Line:
        """Image of a line: covector times the inverse matrix."""
        inv = self.inverse().matrix
        a, b, c = matvec(transpose(inv), line.coords)
        return Line(simplify(a), simplify(b), simplify(c))

    def is_identity(self) -> Check:
        return Check.all_of(
            [
                check_zero(self.p - 1),
                check_zero(self.q),
                check_zero(self.tx),
                check_zero(self.ty),
            ]
        )

    def round_trip_check(self) -> Check:
        """forward then inverse must be the identity."""
        composed = self.then(self.inverse())
        return composed.is_identity()


def normalize_frame(f2: Point, f1: Point) -> SimilarityFrame:
    """Similarity sending f2 to (-1, 0) and f1 to (1, 0)."""
    (x2, y2), (x1, y1) = f2.xy, f1.xy
    dx, dy = x1 - x2, y1 - y2
    n = simplify(dx * dx + dy * dy)
    if is_zero(n, max(1.0, abs(float(x1)), abs(float(y1))) ** 2):
        raise CoincidentFermatPoints("the two Fermat points coincide")
    # alpha = 2 / (f1 - f2)
    p = simplify(2 * dx / n)
    q = simplify(-2 * dy / n)
    tx = simplify(1 - (p * x1 - q * y1))
    ty = simplify(-(q * x1 + p * y1))
    return SimilarityFrame(p, q, tx, ty)
