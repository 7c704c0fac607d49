from fractions import Fraction

import pytest

from kiepert.centers import fermat_pair
from kiepert.conics import circle_circle_intersections, fit_five_points
from kiepert.errors import DegenerateParameter, DegenerateParameters
from kiepert.kiepert_yiu import NORMALIZED_F1, NORMALIZED_F2, kiepert_hyperbola
from kiepert.numeric import SQRT3
from kiepert.oracle import (
    ORIGIN,
    S1,
    S2,
    OracleParams,
    oracle_conic,
    oracle_perspectors,
    oracle_PQR,
    oracle_PQR_prime,
    oracle_secondary,
    oracle_theorem2_a,
    verify_theorem2_c,
    verify_theorem2_d_e,
)
from kiepert.projective import Point, reflect_through
from kiepert.subjects.theorem2 import DEFAULT_SWEEP

T_VALUES = [
    Fraction(sign) * Fraction(v)
    for v in ("1", "1/2", "2", "1/3", "3", "2/3", "3/2", "1/4", "4", "5", "1/5", "2/5", "5/2")
    for sign in (1, -1)
] + [Fraction(7, 3)]


@pytest.mark.parametrize("t", T_VALUES)
def test_five_point_fit_matches_closed_form(t):
    fitted = fit_five_points([*oracle_PQR(t).vertices, NORMALIZED_F1, NORMALIZED_F2])
    check = fitted.same_as(oracle_conic(t))
    assert check
    assert check.residual == 0


def test_pqr_at_one():
    p, q, r = oracle_PQR(1).vertices
    assert p.coincides(Point.affine(-1, 2))
    assert q.coincides(Point.affine(-SQRT3 - 1, -1))
    assert r.coincides(Point.affine(SQRT3 - 1, -1))
    assert all(S1.contains(v) for v in oracle_PQR(1).vertices)
    assert all(S2.contains(v) for v in oracle_PQR_prime(1).vertices)


def test_circle_meets_are_exact():
    meets = circle_circle_intersections(S1, S2)
    assert {m.xy for m in meets} == {(0, SQRT3), (0, -SQRT3)}


def test_parameters_rejected():
    with pytest.raises(DegenerateParameter):
        OracleParams(Fraction(0))
    with pytest.raises(DegenerateParameter):
        oracle_PQR(0)
    # 2ty - y^2 + 1 vanishes at t = 3/4, y = 2
    with pytest.raises(DegenerateParameters):
        oracle_secondary(Fraction(3, 4), 2)
    with pytest.raises(DegenerateParameters):
        verify_theorem2_d_e(1, 2, 2)


def test_secondary_at_zero_is_reflection():
    for v, w in zip(oracle_secondary(1, 0).vertices, oracle_PQR_prime(1).vertices):
        assert v.coincides(w).residual == 0


def test_secondary_closed_form():
    p, _, _ = oracle_secondary(1, 2).vertices
    assert p.coincides(Point.affine(5, 2))


def test_secondary_at_circle_point_height():
    q = oracle_PQR(1).b
    p2 = oracle_secondary(1, SQRT3).a
    assert p2.coincides(reflect_through(q, ORIGIN)).residual == 0
    assert p2.coincides(Point.affine(1 + SQRT3, 1)).residual == 0
    expected = [Point.affine(0, SQRT3), Point.affine(0, -SQRT3), Point.affine(0, 0)]
    points = oracle_perspectors(1, SQRT3)
    assert all(p.coincides(e).residual == 0 for p, e in zip(points, expected))


def test_tangent_chord_parameters_rejected():
    # the line from P through (0, 3/2) touches the conic at P when t = -2/3
    t, y0 = Fraction(-2, 3), Fraction(3, 2)
    with pytest.raises(DegenerateParameters):
        oracle_secondary(t, y0)
    with pytest.raises(DegenerateParameters):
        verify_theorem2_c(t, y0)
    with pytest.raises(DegenerateParameters):
        verify_theorem2_d_e(t, Fraction(1, 2), y0)


def test_default_sweep_avoids_tangent_chords():
    for t, y0, y0b in DEFAULT_SWEEP:
        pqr = oracle_PQR(t)
        for y in (y0, y0b):
            secondary = oracle_secondary(t, y)
            assert not any(v.coincides(w) for v in secondary.vertices for w in pqr.vertices)


@pytest.mark.parametrize("t", [Fraction(1), Fraction(-2, 3), Fraction(5, 2)])
def test_perspectors_at_zero_height(t):
    points = oracle_perspectors(t, 0)
    expected = [Point.affine(0, 0), Point.affine(0, SQRT3), Point.affine(0, -SQRT3)]
    assert all(p.coincides(e).residual == 0 for p, e in zip(points, expected))


@pytest.mark.parametrize("t", T_VALUES[:8])
def test_theorem2_a(t):
    report = oracle_theorem2_a(t)
    assert report.passed
    assert all(c.residual == 0 for c in report.checks.values())


@pytest.mark.parametrize("t, y0, y0b", DEFAULT_SWEEP)
def test_theorem2_c_d_e(t, y0, y0b):
    c = verify_theorem2_c(t, y0)
    assert c.passed, c.checks
    de = verify_theorem2_d_e(t, y0, y0b)
    assert de.passed, de.checks
    assert all(check.residual == 0 for check in [*c.checks.values(), *de.checks.values()])


def test_secondary_has_kiepert_identity():
    tri = oracle_secondary(Fraction(1, 2), 1)
    pair = fermat_pair(tri)
    assert {pair.f1.xy, pair.f2.xy} == {(1, 0), (-1, 0)}
    assert kiepert_hyperbola(tri).conic.same_as(oracle_conic(Fraction(1, 2))).residual == 0


def test_equilateral_secondary_is_skipped():
    report = verify_theorem2_d_e(1, 0, 2)
    assert report.passed
    assert report.notes["kiepert_a"].startswith("skipped")
