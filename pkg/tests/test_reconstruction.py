import logging

import numpy as np
import pytest

from kiepert.centers import Triangle
from kiepert.conics import Conic
from kiepert.errors import (
    DegenerateConic,
    NoValidCandidate,
    PointNotOnConic,
    VertexNotOnConic,
)
from kiepert.kiepert_yiu import NORMALIZED_F1, kiepert_hyperbola
from kiepert.oracle import oracle_conic, oracle_secondary
from kiepert.projective import Point
from kiepert.reconstruction import reconstruct
from kiepert.subjects.sampling import random_scalene_triangle, trial_rng

logger = logging.getLogger(__name__)


@pytest.fixture
def scene():
    return kiepert_hyperbola(
        Triangle(Point.affine(0, 0), Point.affine(4, 0), Point.affine(1, 3))
    )


def _matches(candidate, expected, scale=1.0, atol=1e-8):
    got = sorted(tuple(float(c) for c in v.xy) for v in candidate.vertices)
    want = sorted(tuple(float(c) for c in v.xy) for v in expected.vertices)
    return np.allclose(got, want, atol=atol * scale, rtol=0)


def test_reconstruct_reference(scene):
    result = reconstruct(scene.conic, scene.fermat.f1, "first", scene.reference.a)
    assert result.candidates
    assert any(_matches(c, scene.reference) for c in result.candidates)
    assert len(result.attempts) == 3
    assert sum(result.multiplicity) <= 3
    assert result.f2.coincides(scene.fermat.f2)


def test_reconstruct_from_second_fermat_point(scene):
    result = reconstruct(scene.conic, scene.fermat.f2, "second", scene.reference.b)
    assert any(_matches(c, scene.reference) for c in result.candidates)


def test_reconstruct_exact_oracle_scene():
    tri = oracle_secondary(1, 2)
    result = reconstruct(oracle_conic(1), NORMALIZED_F1, "first", tri.a)
    exact = [
        c
        for c in result.candidates
        if all(any(v.coincides(w).residual == 0 for w in c.vertices) for v in tri.vertices)
    ]
    assert exact
    valid = [a for a in result.attempts if a.valid]
    assert all(check.residual == 0 for a in valid for check in a.checks.values())


def test_fermat_point_is_not_a_vertex(scene):
    with pytest.raises(NoValidCandidate) as exc:
        reconstruct(scene.conic, scene.fermat.f1, "first", scene.fermat.f1)
    assert not exc.value.result.candidates
    assert len(exc.value.result.attempts) == 3


def test_reconstruct_preconditions(scene):
    k = scene.conic
    with pytest.raises(VertexNotOnConic):
        reconstruct(k, scene.fermat.f1, "first", Point.affine(100, 100))
    with pytest.raises(PointNotOnConic):
        reconstruct(k, Point.affine(100, 100), "first", scene.reference.a)
    line_pair = Conic.from_coeffs([1, 0, -1, 0, 0, 0])
    with pytest.raises(DegenerateConic):
        reconstruct(line_pair, Point.affine(1, 1), "first", Point.affine(2, 2))
    ellipse = Conic.from_coeffs([1, 0, 2, 0, 0, -1])
    with pytest.raises(DegenerateConic):
        reconstruct(ellipse, Point.affine(1, 0), "first", Point.affine(-1, 0))


def test_reconstruct_random_round_trips():
    multiplicities = []
    for index in range(200):
        tri = random_scalene_triangle(trial_rng(99, index))
        scene = kiepert_hyperbola(tri)
        result = reconstruct(scene.conic, scene.fermat.f1, "first", tri.a)
        scale = max(abs(float(c)) for v in tri.vertices for c in v.xy)
        assert any(_matches(c, tri, scale) for c in result.candidates), index
        assert result.unique == (len(result.candidates) == 1)
        multiplicities.append(len(result.candidates))
    counts = np.unique(multiplicities, return_counts=True)
    logger.info("candidates per reconstruction: %s", dict(zip(*counts)))
