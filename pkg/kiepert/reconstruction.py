"""Recover a reference triangle from its Kiepert hyperbola, one Fermat point and one vertex."""

import logging
from dataclasses import dataclass, field

from .centers import Triangle, Which, circle_through, fermat_pair, nine_point_circle
from .conics import (
    Conic,
    center_of,
    circle_conic_residual_intersections,
    radical_axis,
    rectangularity,
    second_intersection,
)
from .errors import (
    DegenerateConic,
    DegenerateScene,
    FewerThanThreeRealIntersections,
    KiepertError,
    NoValidCandidate,
    PointNotOnConic,
    VertexNotOnConic,
)
from .kiepert_yiu import NORMALIZED_F1, NORMALIZED_F2, kiepert_hyperbola
from .numeric import Check
from .projective import Point, join, meet, normalize_frame, reflect_through

logger = logging.getLogger(__name__)


@dataclass
class CandidateReport:
    """One choice of Yiu vertex joined to the given vertex."""

    yiu_vertex: Point
    v: Point | None = None
    triangle: Triangle | None = None
    checks: dict[str, Check] = field(default_factory=dict)
    error: str | None = None

    @property
    def valid(self) -> bool:
        return self.triangle is not None and self.error is None and all(self.checks.values())


@dataclass
class ReconstructionResult:
    vertex: Point
    f1: Point
    f2: Point
    center: Point
    pqr: Triangle
    attempts: list[CandidateReport]
    candidates: list[Triangle] = field(default_factory=list)
    multiplicity: list[int] = field(default_factory=list)

    @property
    def unique(self) -> bool:
        return len(self.candidates) == 1


def _same_triangle(t1: Triangle, t2: Triangle) -> bool:
    return all(any(p.coincides(q) for q in t2.vertices) for p in t1.vertices)


def _validate(tri: Triangle, k: Conic, f1: Point, f2: Point, center: Point) -> dict[str, Check]:
    pair = fermat_pair(tri)
    scene = kiepert_hyperbola(tri)
    return {
        "f1_matches": pair.f1.coincides(f1),
        "f2_matches": pair.f2.coincides(f2),
        "conic_round_trip": scene.conic.same_as(k),
        "nine_point_through_center": nine_point_circle(tri).contains(center),
    }


def reconstruct(k: Conic, f: Point, which: Which, a: Point) -> ReconstructionResult:
    """Join each Yiu vertex to `a`, cut the radical axis at V and redo the secondary construction.

    Every candidate is validated; all that pass are returned.
    """
    if k.is_degenerate:
        raise DegenerateConic(f"{k} is degenerate")
    if not rectangularity(k):
        raise DegenerateConic(f"{k} is not a rectangular hyperbola")
    if not k.contains(f):
        raise PointNotOnConic(f"Fermat point {f} is not on {k}")
    if not k.contains(a):
        raise VertexNotOnConic(f"vertex {a} is not on {k}")

    center = center_of(k)
    other = reflect_through(f, center)
    f1, f2 = (f, other) if which == "first" else (other, f)
    frame = normalize_frame(f2, f1)
    back = frame.inverse()
    k_local = k.transformed(frame)
    a_local = frame.apply(a).normalized()

    try:
        pqr_local = Triangle(
            *circle_conic_residual_intersections(
                circle_through(NORMALIZED_F2, NORMALIZED_F1), k_local, NORMALIZED_F1
            )
        )
    except FewerThanThreeRealIntersections as exc:
        raise DegenerateScene(str(exc)) from exc

    axis = radical_axis(
        circle_through(NORMALIZED_F2, NORMALIZED_F1), circle_through(NORMALIZED_F1, NORMALIZED_F2)
    )
    attempts: list[CandidateReport] = []
    verts = pqr_local.vertices
    for i, x in enumerate(verts):
        report = CandidateReport(yiu_vertex=back.apply(x).normalized())
        attempts.append(report)
        try:
            v = meet(join(x, a_local), axis)
            report.v = back.apply(v).normalized()
            recovered = [
                back.apply(second_intersection(k_local, y, v)).normalized()
                for y in (verts[(i + 1) % 3], verts[(i + 2) % 3])
            ]
            tri = Triangle(a, *recovered)
            report.triangle = tri
            report.checks = _validate(tri, k, f1, f2, center)
        except KiepertError as exc:
            report.error = f"{type(exc).__name__}: {exc}"

    result = ReconstructionResult(
        vertex=a,
        f1=f1,
        f2=f2,
        center=center,
        pqr=pqr_local.mapped(back),
        attempts=attempts,
    )
    for report in attempts:
        if not report.valid or report.triangle is None:
            continue
        for idx, seen in enumerate(result.candidates):
            if _same_triangle(seen, report.triangle):
                result.multiplicity[idx] += 1
                break
        else:
            result.candidates.append(report.triangle)
            result.multiplicity.append(1)

    logger.info(
        "reconstruction from %s: %d valid of %d attempts, multiplicity %s",
        a,
        sum(r.valid for r in attempts),
        len(attempts),
        result.multiplicity,
    )
    if not result.candidates:
        raise NoValidCandidate("no vertex pairing yields a consistent reference triangle", result)
    return result
