import json

import numpy as np
import pytest

from kiepert.centers import Triangle
from kiepert.errors import SceneFormatError
from kiepert.projective import Point
from kiepert.scene import build_scene, certify, dump_scene, load_scene
from kiepert.subjects.sampling import random_scalene_triangle, trial_rng

CONCYCLIC = ("DUV", "EVW", "FWU", "DEF")


@pytest.fixture
def scene():
    return build_scene(Triangle(Point.affine(0, 0), Point.affine(4, 0), Point.affine(1, 3)))


def test_certify_reference_scene(scene):
    certs = certify(scene)
    assert certs.passed, {name: c for name, c in certs.checks.items() if not c}
    for label in ("pqr", "prime"):
        for group in CONCYCLIC:
            assert f"{label}_concyclic_{group}" in certs.checks
    assert len(certs.pqr_vs_reference.perspectors) == 3
    assert certs.hessian.line.coincides(certs.pqr_vs_reference.axis)


def test_scene_json_round_trip(scene, tmp_path):
    certs = certify(scene)
    text = dump_scene(scene, certs)
    data = json.loads(text)
    assert set(data["perspectors"]) == {"pqr_vs_reference", "prime_vs_reference"}
    assert set(data["frame"]) == {"p", "q", "tx", "ty"}
    assert len(data["certificates"]) == len(certs.checks)

    path = tmp_path / "scene.json"
    path.write_text(text, encoding="utf-8")
    loaded = load_scene(path)
    again = certify(loaded)
    assert {n: c.passed for n, c in again.checks.items()} == {
        n: c.passed for n, c in certs.checks.items()
    }
    assert loaded.conic.same_as(scene.conic)
    # exact coordinates survive the trip
    assert loaded.f1.coincides(scene.f1).residual == 0


def test_load_scene_errors(tmp_path):
    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{not json", encoding="utf-8")
    with pytest.raises(SceneFormatError):
        load_scene(bad_json)

    not_scene = tmp_path / "other.json"
    not_scene.write_text(json.dumps({"triangle": []}), encoding="utf-8")
    with pytest.raises(SceneFormatError):
        load_scene(not_scene)

    with pytest.raises(FileNotFoundError):
        load_scene(tmp_path / "missing.json")


def test_random_scenes():
    for index in range(200):
        scene = build_scene(random_scalene_triangle(trial_rng(4242, index)))
        certs = certify(scene)
        assert certs.passed, index
        checks = certs.checks
        assert checks["pqr_equilateral"].residual < 1e-9
        assert checks["prime_equilateral"].residual < 1e-9
        k = scene.conic.normalized()
        assert abs(float(k.A) + float(k.C)) < 1e-12
        assert checks["center_is_fermat_midpoint"].residual < 1e-9
        assert checks["nine_point_through_center"].residual < 1e-9
        assert checks["orthocenter_on_conic"].residual < 1e-9
        assert checks["pqr_perspectors_collinear"].residual < 1e-9
        assert checks["axis_is_hessian"].residual < 1e-9
        assert checks["axes_coincide"]
        if index < 50:
            concyclic = [checks[f"pqr_concyclic_{g}"].residual for g in CONCYCLIC]
            assert np.max(concyclic) < 1e-10
