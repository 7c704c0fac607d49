import argparse
from fractions import Fraction

import pytest

from kiepert.centers import Triangle
from kiepert.config import KiepertConfig
from kiepert.projective import Point
from kiepert.subjects import (
    Lemma28Subject,
    Theorem1Subject,
    Theorem2Subject,
    Theorem3Subject,
)
from kiepert.subjects.theorem2 import DEFAULT_SWEEP


@pytest.fixture
def config():
    return KiepertConfig()


def make_args(**overrides):
    values = {"triangle": None, "seed": 11, "trials": 3, "t": None, "y0": None, "y0b": None}
    values.update(overrides)
    return argparse.Namespace(**values)


@pytest.mark.parametrize("subject_class", [Theorem1Subject, Lemma28Subject, Theorem3Subject])
async def test_random_trials_pass(config, subject_class):
    subject = subject_class(config, 1e-9)
    report = await subject.verify(make_args())
    assert report.subject == subject.name
    assert [t.index for t in report.trials] == [0, 1, 2]
    assert report.passed, [t for t in report.trials if not t.passed]


async def test_theorem1_fermat_route(config):
    report = await Theorem1Subject(config, 1e-9, "fermat").verify(make_args(trials=2))
    assert report.params["route"] == "fermat"
    assert report.passed
    names = {c.name for c in report.trials[0].checks}
    assert "construction_routes_agree" in names


async def test_given_triangle(config):
    t = Triangle(Point.affine(0, 0), Point.affine(4, 0), Point.affine(1, 3))
    report = await Lemma28Subject(config, 1e-9).verify(make_args(triangle=t))
    (trial,) = report.trials
    assert trial.passed
    assert report.params == {"triangle": repr(t)}


async def test_theorem2_default_sweep(config):
    report = await Theorem2Subject(config, 1e-9).verify(make_args())
    assert report.params == {"sweep": len(DEFAULT_SWEEP)}
    assert len(report.trials) == len(DEFAULT_SWEEP)
    assert report.passed


async def test_degenerate_sweep_case_fails_its_trial(config, monkeypatch):
    sweep = [
        (Fraction(1), Fraction(0), Fraction(2)),
        (Fraction(-2, 3), Fraction(3, 2), Fraction(-3)),
    ]
    monkeypatch.setattr("kiepert.subjects.theorem2.DEFAULT_SWEEP", sweep)
    report = await Theorem2Subject(config, 1e-9).verify(make_args())
    first, second = report.trials
    assert first.passed
    assert not second.passed
    assert second.error.startswith("DegenerateParameters")
    assert not report.passed


async def test_theorem2_single_case(config):
    args = make_args(t=Fraction(1, 2), y0=Fraction(1))
    report = await Theorem2Subject(config, 1e-9).verify(args)
    assert report.params == {"t": "1/2", "y0": "1"}
    assert report.passed


async def test_reports_are_deterministic(config):
    subject = Theorem3Subject(config, 1e-9)
    first = await subject.verify(make_args(trials=2))
    second = await subject.verify(make_args(trials=2))
    assert first.model_dump() == second.model_dump()
