from fractions import Fraction

import numpy as np
import pytest

from kiepert.centers import (
    Triangle,
    centroid,
    circumcircle,
    equal_lengths,
    erected_apex,
    fermat_pair,
    fermat_point,
    has_wide_angle,
    nine_point_incidences,
    orthocenter,
    orthocenter_check,
)
from kiepert.errors import DegenerateTriangle
from kiepert.numeric import SQRT3, Check, QuadExt
from kiepert.projective import Point


@pytest.fixture
def scalene():
    return Triangle(Point.affine(0, 0), Point.affine(4, 0), Point.affine(1, 3))


def weiszfeld(vertices, steps=5000):
    pts = np.array(vertices, dtype=float)
    x = pts.mean(axis=0)
    for _ in range(steps):
        d = np.linalg.norm(pts - x, axis=1)
        w = 1.0 / d
        x = (pts * w[:, None]).sum(axis=0) / w.sum()
    return x


def test_triangle_preconditions():
    with pytest.raises(DegenerateTriangle):
        Triangle(Point.affine(0, 0), Point.affine(1, 1), Point.affine(2, 2))
    with pytest.raises(DegenerateTriangle):
        Triangle(Point.affine(0, 0), Point.affine(0, 0), Point.affine(2, 2))
    with pytest.raises(DegenerateTriangle):
        Triangle(Point.affine(0, 0), Point(1, 0, 0), Point.affine(2, 2))


def test_orientation_and_sides(scalene):
    assert scalene.orientation == "ccw"
    assert scalene.reversed().orientation == "cw"
    assert scalene.twice_area == 12
    assert scalene.side_sq == (18, 10, 16)
    assert scalene.is_scalene()
    iso = Triangle(Point.affine(0, 0), Point.affine(2, 0), Point.affine(1, 5))
    assert not iso.is_scalene()


def test_centroid_and_orthocenter(scalene):
    assert centroid(scalene).coincides(Point.affine(Fraction(5, 3), 1))
    assert orthocenter(scalene).coincides(Point.affine(1, 1))
    assert orthocenter_check(scalene).residual == 0


def test_nine_point_circle(scalene):
    checks = nine_point_incidences(scalene)
    assert len(checks) == 9
    assert Check.all_of(checks).residual == 0


def test_circumcircle(scalene):
    circle = circumcircle(scalene)
    assert all(circle.contains(v) for v in scalene.vertices)


def test_erected_apex():
    apex = erected_apex(Point.affine(0, 0), Point.affine(2, 0), "outward", "ccw")
    assert apex.coincides(Point.affine(1, -SQRT3))
    inward = erected_apex(Point.affine(0, 0), Point.affine(2, 0), "inward", "ccw")
    assert inward.coincides(Point.affine(1, SQRT3))


def test_fermat_point_is_exact_and_minimizes(scalene):
    f1 = fermat_point(scalene)
    assert any(isinstance(c, QuadExt) for c in f1.coords)
    expected = weiszfeld([[0, 0], [4, 0], [1, 3]])
    assert np.allclose([float(c) for c in f1.xy], expected, atol=1e-9)


def test_fermat_pair(scalene):
    pair = fermat_pair(scalene)
    assert pair.f1_check and pair.f2_check
    assert pair.f1_minimizes_distance
    assert pair.separation_sq != 0
    # the order of the vertices does not matter
    assert fermat_point(scalene.reversed()).coincides(pair.f1)
    assert fermat_point(scalene.rotated(1), "second").coincides(pair.f2)


def test_wide_angle_triangle():
    wide = Triangle(Point.affine(0, 0), Point.affine(10, 0), Point.affine(5, 1))
    assert has_wide_angle(wide)
    pair = fermat_pair(wide)
    assert not pair.f1_minimizes_distance
    # the minimizer is the obtuse vertex, not the isogonic center
    pts = np.array([[0, 0], [10, 0], [5, 1]], dtype=float)
    f1 = np.array([float(c) for c in pair.f1.xy])
    assert np.linalg.norm(pts - f1, axis=1).sum() > np.linalg.norm(pts - pts[2], axis=1).sum()


def test_equal_lengths():
    assert equal_lengths((Fraction(3), QuadExt(3), Fraction(3))).residual == 0
    assert not equal_lengths((Fraction(3), Fraction(3), Fraction(4)))
    assert equal_lengths((3.0, 3.0 + 1e-12, 3.0))
