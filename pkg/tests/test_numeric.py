import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kiepert.errors import DegenerateLeadingCoefficient, NotARoot
from kiepert.numeric import (
    SQRT3,
    Check,
    QuadExt,
    check_proportional,
    check_zero,
    format_fraction,
    is_zero,
    parse_scalar,
    sqrt,
    tolerance,
)
from kiepert.numeric.linalg import adjugate, det3, matmul, null_space
from kiepert.numeric.poly import Poly, deflate, real_roots, solve_cubic_real

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=30)
quadexts = st.builds(QuadExt, fractions, fractions)


def test_quadext_arithmetic():
    x = QuadExt(1, 1)
    assert x * x.conjugate() == -2
    assert x * x == QuadExt(4, 2)
    assert x / x == 1
    assert SQRT3 * SQRT3 == 3
    assert 2 - SQRT3 == QuadExt(2, -1)
    assert (x**-2) * (x**2) == 1


def test_quadext_float_operand_degrades():
    result = QuadExt(1, 1) + 0.5
    assert isinstance(result, float)
    assert result == pytest.approx(1.5 + math.sqrt(3))


def test_quadext_exact_sign():
    assert QuadExt(2, -1).sign() == 1  # 4 > 3
    assert QuadExt(1, -1).sign() == -1
    assert QuadExt(-7, 4).sign() == -1  # 49 > 48
    assert QuadExt(5, -3).sign() == -1  # 25 < 27
    assert QuadExt().sign() == 0
    assert QuadExt(0, 1) > Fraction(17, 10)
    assert QuadExt(0, 1) < Fraction(7, 4)


def test_quadext_sqrt():
    assert QuadExt(4, 2).sqrt() == QuadExt(1, 1)
    assert QuadExt(48).sqrt() == QuadExt(0, 4)
    assert QuadExt(2).sqrt() is None
    assert QuadExt(-1).sqrt() is None
    assert sqrt(Fraction(9, 4)) == Fraction(3, 2)
    # leaves the field, so the float tier takes over
    assert sqrt(Fraction(2)) == pytest.approx(math.sqrt(2))


@given(quadexts, quadexts, quadexts)
def test_quadext_field_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    assert x - x == 0
    if y != 0:
        assert (x * y) / y == x


@given(quadexts)
def test_quadext_sign_agrees_with_float(x):
    value = float(x)
    if abs(value) > 1e-9:
        assert x.sign() == (1 if value > 0 else -1)


def test_quadext_json():
    x = QuadExt(Fraction(1, 2), -3)
    assert x.to_json() == {"a": "1/2", "b": "-3/1"}
    assert QuadExt.from_json(x.to_json()) == x
    assert format_fraction(Fraction(3)) == "3/1"


def test_parse_scalar():
    assert parse_scalar("1/2") == Fraction(1, 2)
    assert parse_scalar("1.5") == Fraction(3, 2)
    assert parse_scalar("1+2*sqrt3") == QuadExt(1, 2)
    assert parse_scalar("-sqrt3") == QuadExt(0, -1)
    assert parse_scalar("1/2 - 3/4*sqrt3") == QuadExt(Fraction(1, 2), Fraction(-3, 4))
    assert parse_scalar("sqrt3/2") == QuadExt(0, Fraction(1, 2))
    assert parse_scalar("2*sqrt3+1") == QuadExt(1, 2)
    assert parse_scalar("sqrt(3)") == QuadExt(0, 1)
    assert parse_scalar("2*sqrt3/3") == QuadExt(0, Fraction(2, 3))
    assert parse_scalar("3 + 2sqrt3") == QuadExt(3, 2)


@pytest.mark.parametrize("bad", ["sqrt3x", "1+", "*sqrt3", "1/2/3", "", "1/0"])
def test_parse_scalar_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


def test_tolerance_context():
    assert not is_zero(1e-4)
    with tolerance(1e-3):
        assert is_zero(1e-4)
    assert not is_zero(1e-4)
    # exact tiers ignore the tolerance
    with tolerance(1e-3):
        assert not is_zero(Fraction(1, 10**6))


def test_checks():
    assert check_zero(Fraction(0)) == Check(True, 0.0)
    assert not check_zero(Fraction(1, 10**12))
    assert check_zero(1e-12)
    assert check_proportional([1, 2, 3], [2, 4, 6]) == Check(True, 0.0)
    assert not check_proportional([1, 2, 3], [2, 4, 7])
    combined = Check.all_of([Check(True, 1e-12), Check(False, 0.5)])
    assert not combined
    assert combined.residual == 0.5
    assert Check.all_of([]) == Check(True, 0.0)


def test_cubic_three_real_roots():
    p = Poly.of(1.0, -3.0, 0.0, 1.0)  # x^3 - 3x + 1
    roots = solve_cubic_real(p)
    assert roots == pytest.approx([-1.87938524, 0.34729636, 1.53208889], abs=1e-8)
    assert roots == pytest.approx(sorted(np.roots([1, 0, -3, 1]).real), abs=1e-12)


def test_cubic_one_real_root():
    p = Poly.of(-2.0, 0.0, 0.0, 1.0)  # x^3 - 2
    assert solve_cubic_real(p) == pytest.approx([2 ** (1 / 3)])


def test_cubic_degenerate_leading_coefficient():
    with pytest.raises(DegenerateLeadingCoefficient):
        solve_cubic_real(Poly.of(1.0, 2.0, 0.0, 1e-20))
    with pytest.raises(DegenerateLeadingCoefficient):
        solve_cubic_real(Poly.of(1, 2, 3))


def test_chord_cubic_roots_are_exact():
    # slopes of the residual chords at t = 1
    p = Poly.of(-2, 6, 6, -2)
    assert real_roots(p) == [-1, QuadExt(2, -1), QuadExt(2, 1)]


def test_deflate():
    p = Poly.of(-6, 11, -6, 1)  # (x-1)(x-2)(x-3)
    q = deflate(p, Fraction(1))
    assert q == Poly.of(6, -5, 1)
    assert q.residual == 0
    with pytest.raises(NotARoot):
        deflate(p, Fraction(4))
    with pytest.raises(NotARoot):
        deflate(p.as_float(), 1.001)


@settings(max_examples=50)
@given(
    st.floats(min_value=-10, max_value=-4),
    st.floats(min_value=-3, max_value=3),
    st.floats(min_value=4, max_value=10),
    st.floats(min_value=0.5, max_value=5),
)
def test_cubic_recovers_separated_roots(r1, r2, r3, lead):
    coeffs = lead * np.poly([r1, r2, r3])
    p = Poly.of(*(float(c) for c in coeffs[::-1]))
    assert solve_cubic_real(p) == pytest.approx([r1, r2, r3], rel=1e-6, abs=1e-6)


def test_linalg():
    m = ((Fraction(2), 1, 0), (0, 3, 1), (1, 0, 1))
    d = det3(m)
    assert d == 7
    assert matmul(m, adjugate(m)) == ((d, 0, 0), (0, d, 0), (0, 0, d))
    basis = null_space([[1, 1, 0], [0, 1, 1]])
    assert len(basis) == 1
    assert check_proportional(basis[0], [1, -1, 1])
