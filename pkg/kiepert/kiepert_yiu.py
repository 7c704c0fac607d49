"""Kiepert hyperbola, Yiu's inscribed equilateral triangles and their perspectivities."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Literal

from .centers import (
    FermatPair,
    Triangle,
    centroid,
    circle_through,
    equal_lengths,
    fermat_pair,
)
from .conics import (
    Circle,
    Conic,
    center_of,
    circle_conic_residual_intersections,
    fit_five_points,
    rectangularity,
    tangent_at,
)
from .errors import (
    DegenerateConic,
    DegenerateHexagon,
    IdenticalElements,
    NotPerspective,
    NotScalene,
    NotTriplyPerspective,
    PointNotOnConic,
    SceneInvariantViolated,
)
from .numeric import Check, Scalar, norm
from .numeric.linalg import cross
from .projective import (
    Line,
    Point,
    SimilarityFrame,
    collinear,
    concurrent,
    distance_sq,
    join,
    meet,
    midpoint,
    normalize_frame,
)

logger = logging.getLogger(__name__)

Route = Literal["centroid", "fermat"]


@dataclass(frozen=True, eq=False)
class KiepertScene:
    reference: Triangle
    fermat: FermatPair
    conic: Conic
    center: Point
    frame: SimilarityFrame
    route: Route = "centroid"
    checks: dict[str, Check] = field(default_factory=dict)

    @property
    def normalized_conic(self) -> Conic:
        """The conic in the frame where F2 = (-1, 0) and F1 = (1, 0)."""
        return self.conic.transformed(self.frame)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def kiepert_hyperbola(t: Triangle, route: Route = "centroid") -> KiepertScene:
    """Fit the Kiepert hyperbola of a scalene triangle and validate it.

    The "centroid" route fits A, B, C, F1 and the centroid; the "fermat" route
    fits A, B, C, F1 and F2. Either way the point left out must land on the conic.
    """
    if not t.is_scalene():
        raise NotScalene(f"{t} has two equal sides")
    fermat = fermat_pair(t)
    m = centroid(t)
    fifth, other = (m, fermat.f2) if route == "centroid" else (fermat.f2, m)
    conic = fit_five_points([t.a, t.b, t.c, fermat.f1, fifth])
    if conic.is_degenerate:
        raise DegenerateConic(f"the Kiepert conic of {t} is degenerate")

    center = center_of(conic)
    checks = {
        "vertex_a": conic.contains(t.a),
        "vertex_b": conic.contains(t.b),
        "vertex_c": conic.contains(t.c),
        "fermat_f1": conic.contains(fermat.f1),
        "fermat_f2" if route == "centroid" else "centroid": conic.contains(other),
        "rectangular": rectangularity(conic),
        "center_is_fermat_midpoint": center.coincides(midpoint(fermat.f1, fermat.f2)),
    }
    failed = [name for name, check in checks.items() if not check]
    if failed:
        raise SceneInvariantViolated(f"Kiepert conic of {t} fails {', '.join(failed)}")
    logger.debug("Kiepert conic %s via %s route", conic, route)
    return KiepertScene(
        reference=t,
        fermat=fermat,
        conic=conic,
        center=center,
        frame=normalize_frame(fermat.f2, fermat.f1),
        route=route,
        checks=checks,
    )


NORMALIZED_F1 = Point.affine(1, 0)
NORMALIZED_F2 = Point.affine(-1, 0)


def _inscribed_equilateral(k: Conic, around: Point, common: Point) -> Triangle:
    circle = circle_through(around, common)
    points = circle_conic_residual_intersections(circle, k, common)
    return Triangle(*points).counterclockwise()


def yiu_triangles(scene: KiepertScene) -> tuple[Triangle, Triangle]:
    """PQR on the circle about F2 through F1, and P'Q'R' on the circle about F1 through F2.

    Both are computed in the normalized frame and mapped back.
    """
    k = scene.normalized_conic
    pqr = _inscribed_equilateral(k, NORMALIZED_F2, NORMALIZED_F1)
    pqr_prime = _inscribed_equilateral(k, NORMALIZED_F1, NORMALIZED_F2)
    back = scene.frame.inverse()
    pqr, pqr_prime = pqr.mapped(back), pqr_prime.mapped(back)

    for name, tri, around in (
        ("PQR", pqr, scene.fermat.f2),
        ("P'Q'R'", pqr_prime, scene.fermat.f1),
    ):
        cert = equilateral_certificate(tri, around, scene.center)
        if not cert.equilateral:
            raise SceneInvariantViolated(
                f"{name} is not equilateral (spread {cert.equilateral.residual:.3e})"
            )
    return pqr, pqr_prime


def yiu_circles(scene: KiepertScene) -> tuple[Circle, Circle]:
    f1, f2 = scene.fermat.f1, scene.fermat.f2
    return circle_through(f2, f1), circle_through(f1, f2)


@dataclass(frozen=True, eq=False)
class EquilateralCertificate:
    side_sq: tuple[Scalar, Scalar, Scalar]
    equilateral: Check
    concyclic: dict[str, Check]

    @property
    def passed(self) -> bool:
        return bool(self.equilateral) and all(self.concyclic.values())


def equilateral_certificate(t: Triangle, circumcenter: Point, o: Point) -> EquilateralCertificate:
    """Side lengths plus the midpoint structure of the equilaterality argument.

    D, E, F are the midpoints of ab, bc, ca and U, V, W those of the segments from
    the circumcenter to a, b, c. Each group must sit at the same distance from the
    circumcenter as o.
    """
    a, b, c = t.vertices
    d, e, f = midpoint(a, b), midpoint(b, c), midpoint(c, a)
    u, v, w = midpoint(circumcenter, a), midpoint(circumcenter, b), midpoint(circumcenter, c)
    groups = {"DUV": (d, u, v), "EVW": (e, v, w), "FWU": (f, w, u), "DEF": (d, e, f)}
    concyclic = {
        name: equal_lengths(tuple(distance_sq(circumcenter, p) for p in (*pts, o)))
        for name, pts in groups.items()
    }
    return EquilateralCertificate(t.side_sq, equal_lengths(t.side_sq), concyclic)


@dataclass(frozen=True)
class Pairing:
    """Vertex i of the first triangle goes to vertex i + shift of the second
    (taken in reversed order when `reversed` is set)."""

    shift: int
    reversed: bool = False

    def apply(self, t: Triangle) -> Triangle:
        return (t.reversed() if self.reversed else t).rotated(self.shift)

    def __str__(self) -> str:
        return f"shift {self.shift}{' reversed' if self.reversed else ''}"


@dataclass(frozen=True, eq=False)
class PerspectivityCertificate:
    pairing: Pairing
    perspector: Point
    check: Check


def _perspectivity(t1: Triangle, t2: Triangle, pairing: Pairing) -> PerspectivityCertificate:
    partner = pairing.apply(t2)
    lines = [join(p, q) for p, q in zip(t1.vertices, partner.vertices)]
    point = meet(lines[0], lines[1]).normalized()
    return PerspectivityCertificate(pairing, point, concurrent(*lines))


def perspector(t1: Triangle, t2: Triangle, pairing: Pairing | int = 0) -> PerspectivityCertificate:
    """Perspector of t1 and t2 under a cyclic vertex pairing; may lie at infinity."""
    if isinstance(pairing, int):
        pairing = Pairing(pairing)
    cert = _perspectivity(t1, t2, pairing)
    if not cert.check:
        raise NotPerspective(f"pairing {pairing}: third line misses by {cert.check.residual:.3e}")
    return cert


@dataclass(frozen=True, eq=False)
class TriplePerspectivity:
    certs: tuple[PerspectivityCertificate, PerspectivityCertificate, PerspectivityCertificate]
    axis: Line
    collinearity: Check

    @property
    def perspectors(self) -> list[Point]:
        return [c.perspector for c in self.certs]

    @property
    def reversed(self) -> bool:
        return self.certs[0].pairing.reversed


def _unit(p: Point) -> list[float]:
    n = norm(p.coords)
    return [float(c) / n for c in p.coords]


def line_through_spread(points: Sequence[Point]) -> Line:
    """Join of the two points that are furthest apart projectively."""
    best, pair = -1.0, (0, 1)
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            gap = norm(cross(_unit(points[i]), _unit(points[j])))
            if gap > best:
                best, pair = gap, (i, j)
    return join(points[pair[0]], points[pair[1]]).normalized()


def _assemble(certs: list[PerspectivityCertificate]) -> TriplePerspectivity:
    points = [c.perspector for c in certs]
    try:
        axis = line_through_spread(points)
    except IdenticalElements as exc:
        raise NotTriplyPerspective("the three perspectors coincide") from exc
    return TriplePerspectivity(
        certs=(certs[0], certs[1], certs[2]),
        axis=axis,
        collinearity=collinear(*points),
    )


def triple_perspectivity(t1: Triangle, t2: Triangle) -> TriplePerspectivity:
    """Find the vertex order of t2 making it perspective with t1 under all three shifts."""
    for flipped in (False, True):
        certs = [_perspectivity(t1, t2, Pairing(shift, flipped)) for shift in range(3)]
        if all(c.check for c in certs):
            result = _assemble(certs)
            if not result.collinearity:
                raise NotTriplyPerspective(
                    f"perspectors not collinear (residual {result.collinearity.residual:.3e})"
                )
            return result
        logger.debug(
            "order %s: residuals %s",
            "reversed" if flipped else "given",
            [f"{c.check.residual:.2e}" for c in certs],
        )
    raise NotTriplyPerspective("no vertex order of the second triangle is triply perspective")


def complete_triple(
    t1: Triangle, t2: Triangle, known: tuple[Pairing, Pairing] = (Pairing(0), Pairing(1))
) -> TriplePerspectivity:
    """From two perspective pairings derive the third and the collinearity verdict."""
    first, second = (perspector(t1, t2, p) for p in known)
    if first.pairing.reversed != second.pairing.reversed:
        raise NotTriplyPerspective("known pairings disagree on vertex order")
    missing = ({0, 1, 2} - {first.pairing.shift % 3, second.pairing.shift % 3}).pop()
    third = perspector(t1, t2, Pairing(missing, first.pairing.reversed))
    certs = sorted([first, second, third], key=lambda c: c.pairing.shift % 3)
    result = _assemble(certs)
    if not result.collinearity:
        raise NotTriplyPerspective("completed perspectors are not collinear")
    return result


@dataclass(frozen=True, eq=False)
class LineCertificate:
    line: Line
    points: tuple[Point, Point, Point]
    check: Check


def pascal_line(k: Conic, hexagon: Sequence[Point]) -> LineCertificate:
    """Line through the meets of opposite sides of a hexagon inscribed in k."""
    if len(hexagon) != 6:
        raise DegenerateHexagon("a hexagon needs six points")
    for p in hexagon:
        if not k.contains(p):
            raise PointNotOnConic(f"{p} is not on {k}")
    for i in range(6):
        if hexagon[i].coincides(hexagon[(i + 1) % 6]):
            raise DegenerateHexagon(f"vertices {i} and {(i + 1) % 6} coincide")
    sides = [join(hexagon[i], hexagon[(i + 1) % 6]) for i in range(6)]
    try:
        meets = tuple(meet(sides[i], sides[i + 3]).normalized() for i in range(3))
    except IdenticalElements as exc:
        raise DegenerateHexagon("opposite sides coincide") from exc
    return LineCertificate(line_through_spread(meets), meets, collinear(*meets))


def hessian_line(k: Conic, t: Triangle) -> LineCertificate:
    """Line through the meets of each vertex tangent with the opposite side."""
    if k.is_degenerate:
        raise DegenerateConic(f"{k} is degenerate")
    a, b, c = t.vertices
    meets = (
        meet(tangent_at(k, a), join(b, c)).normalized(),
        meet(tangent_at(k, b), join(c, a)).normalized(),
        meet(tangent_at(k, c), join(a, b)).normalized(),
    )
    return LineCertificate(line_through_spread(meets), meets, collinear(*meets))


def inscribed_in(k: Conic, t: Triangle) -> Check:
    return Check.all_of([k.contains(v) for v in t.vertices])
