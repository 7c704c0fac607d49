from fractions import Fraction

import pytest

from kiepert.collineation import (
    EQUILATERAL_ON_CIRCLE,
    UNIT_CIRCLE,
    Homography,
    collineation_from_conics,
    pullback_check,
    theorem3_inscribed,
    theorem3_transported,
)
from kiepert.errors import DegenerateFrame, NotOnHessianLine
from kiepert.numeric import Check
from kiepert.oracle import oracle_conic, oracle_perspectors, oracle_PQR, oracle_secondary
from kiepert.projective import Point
from kiepert.subjects.sampling import conjugating_homography, random_inscribed, trial_rng

SQUARE = [Point.affine(0, 0), Point.affine(1, 0), Point.affine(1, 1), Point.affine(0, 1)]


def test_from_four_points():
    quad = [Point.affine(2, 1), Point.affine(5, 0), Point.affine(4, 3), Point.affine(1, 4)]
    h = Homography.from_four_points(SQUARE, quad)
    for p, q in zip(SQUARE, quad):
        assert h.apply(p).coincides(q).residual == 0
    back = h.inverse()
    assert back.apply(quad[2]).coincides(SQUARE[2])
    assert h.then(back).apply(Point.affine(7, -3)).coincides(Point.affine(7, -3))


def test_degenerate_frames():
    with pytest.raises(DegenerateFrame):
        Homography(((1, 0, 0), (2, 0, 0), (0, 0, 1)))
    collinear = [Point.affine(0, 0), Point.affine(1, 1), Point.affine(2, 2), Point.affine(0, 1)]
    with pytest.raises(DegenerateFrame):
        Homography.from_four_points(collinear, SQUARE)


def test_collineation_carries_conic_and_points():
    k = oracle_conic(1)
    pqr = oracle_PQR(1)
    h = collineation_from_conics(k, pqr.vertices, UNIT_CIRCLE, EQUILATERAL_ON_CIRCLE)
    assert pullback_check(h, k, UNIT_CIRCLE).residual == 0
    for p, q in zip(pqr.vertices, EQUILATERAL_ON_CIRCLE):
        assert h.apply(p).coincides(q)
    assert h.apply_conic(k).same_as(UNIT_CIRCLE)


def test_theorem3_matches_closed_forms():
    k, pqr = oracle_conic(1), oracle_PQR(1)
    result = theorem3_inscribed(k, pqr, Point.affine(0, 2))
    assert result.passed
    for v, w in zip(result.inscribed.vertices, oracle_secondary(1, 2).vertices):
        assert v.coincides(w).residual == 0
    expected = oracle_perspectors(1, 2)
    assert all(any(p.coincides(e) for e in expected) for p in result.perspectivity.perspectors)
    assert result.on_hessian.residual == 0


def test_theorem3_requires_hessian_point():
    with pytest.raises(NotOnHessianLine):
        theorem3_inscribed(oracle_conic(1), oracle_PQR(1), Point.affine(1, 1))


def test_theorem3_transported_exact():
    result = theorem3_transported(oracle_conic(1), oracle_PQR(1), Point.affine(0, Fraction(1, 2)))
    assert result.agreement.residual == 0
    assert result.hessian_at_infinity.residual == 0
    assert result.pullback.residual == 0


@pytest.mark.parametrize("index", range(100))
def test_theorem3_random_instances(index):
    rng = trial_rng(2024, index)
    inst = random_inscribed(rng)
    direct = theorem3_inscribed(inst.conic, inst.triangle, inst.hessian_point)
    assert direct.perspectivity.collinearity.residual < 1e-9
    assert direct.on_hessian.residual < 1e-9
    transported = theorem3_transported(inst.conic, inst.triangle, inst.hessian_point)
    assert transported.pullback.residual < 1e-10
    assert transported.agreement


@pytest.mark.parametrize("index", range(5))
def test_theorem3_invariant_under_conjugation(index):
    rng = trial_rng(77, index)
    inst = random_inscribed(rng)
    direct = theorem3_inscribed(inst.conic, inst.triangle, inst.hessian_point)
    for _ in range(20):
        g = conjugating_homography(rng, inst)
        image = theorem3_inscribed(
            g.apply_conic(inst.conic), g.apply_triangle(inst.triangle), g.apply(inst.hessian_point)
        )
        assert image.passed == direct.passed
        pairs = zip(direct.inscribed.vertices, image.inscribed.vertices)
        assert Check.all_of([g.apply(v).coincides(w) for v, w in pairs])
