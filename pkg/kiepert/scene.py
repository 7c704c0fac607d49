import json
import logging
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

from pydantic import ValidationError

from .centers import Triangle, centroid, circle_through, nine_point_circle, orthocenter
from .conics import Conic, center_of, rectangularity
from .errors import SceneFormatError
from .formatter import (
    check_model,
    conic_from_json,
    conic_to_json,
    line_to_json,
    point_from_json,
    point_to_json,
    scalar_to_json,
    triangle_from_json,
    triangle_to_json,
)
from .kiepert_yiu import (
    LineCertificate,
    Route,
    TriplePerspectivity,
    equilateral_certificate,
    hessian_line,
    inscribed_in,
    kiepert_hyperbola,
    triple_perspectivity,
    yiu_triangles,
)
from .models import SceneModel
from .numeric import Check
from .projective import Point, SimilarityFrame, midpoint, normalize_frame

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class YiuScene:
    reference: Triangle
    f1: Point
    f2: Point
    conic: Conic
    pqr: Triangle
    pqr_prime: Triangle

    @cached_property
    def center(self) -> Point:
        return center_of(self.conic)

    @cached_property
    def frame(self) -> SimilarityFrame:
        return normalize_frame(self.f2, self.f1)


@dataclass
class SceneCertificates:
    checks: dict[str, Check] = field(default_factory=dict)
    pqr_vs_reference: TriplePerspectivity | None = None
    prime_vs_reference: TriplePerspectivity | None = None
    hessian: LineCertificate | None = None

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def build_scene(t: Triangle, route: Route = "centroid") -> YiuScene:
    ks = kiepert_hyperbola(t, route)
    pqr, pqr_prime = yiu_triangles(ks)
    return YiuScene(t, ks.fermat.f1, ks.fermat.f2, ks.conic, pqr, pqr_prime)


def certify(scene: YiuScene) -> SceneCertificates:
    """Every incidence, equilaterality and perspectivity fact of the scene."""
    k, ref = scene.conic, scene.reference
    certs = SceneCertificates()
    checks = certs.checks
    checks["reference_on_conic"] = inscribed_in(k, ref)
    checks["fermat_on_conic"] = Check.all_of([k.contains(scene.f1), k.contains(scene.f2)])
    checks["centroid_on_conic"] = k.contains(centroid(ref))
    checks["orthocenter_on_conic"] = k.contains(orthocenter(ref))
    checks["rectangular"] = rectangularity(k)
    checks["center_is_fermat_midpoint"] = scene.center.coincides(midpoint(scene.f1, scene.f2))
    checks["nine_point_through_center"] = nine_point_circle(ref).contains(scene.center)

    for label, tri, around, through in (
        ("pqr", scene.pqr, scene.f2, scene.f1),
        ("prime", scene.pqr_prime, scene.f1, scene.f2),
    ):
        checks[f"{label}_on_conic"] = inscribed_in(k, tri)
        circle = circle_through(around, through)
        checks[f"{label}_on_circle"] = Check.all_of([circle.contains(v) for v in tri.vertices])
        cert = equilateral_certificate(tri, around, scene.center)
        checks[f"{label}_equilateral"] = cert.equilateral
        for name, check in cert.concyclic.items():
            checks[f"{label}_concyclic_{name}"] = check

    certs.pqr_vs_reference = triple_perspectivity(scene.pqr, ref)
    certs.prime_vs_reference = triple_perspectivity(scene.pqr_prime, ref)
    certs.hessian = hessian_line(k, scene.pqr)
    checks["pqr_perspectors_collinear"] = certs.pqr_vs_reference.collinearity
    checks["prime_perspectors_collinear"] = certs.prime_vs_reference.collinearity
    checks["axes_coincide"] = certs.pqr_vs_reference.axis.coincides(
        certs.prime_vs_reference.axis
    )
    checks["axis_is_hessian"] = certs.pqr_vs_reference.axis.coincides(certs.hessian.line)
    logger.debug(
        "scene certified: %d/%d checks pass", sum(map(bool, checks.values())), len(checks)
    )
    return certs


def scene_to_model(scene: YiuScene, certs: SceneCertificates) -> SceneModel:
    frame = scene.frame
    perspectors = {}
    axes = {}
    for name, tp in (
        ("pqr_vs_reference", certs.pqr_vs_reference),
        ("prime_vs_reference", certs.prime_vs_reference),
    ):
        if tp is not None:
            perspectors[name] = [point_to_json(p) for p in tp.perspectors]
            axes[name] = line_to_json(tp.axis)
    return SceneModel(
        triangle=triangle_to_json(scene.reference),
        fermat={"f1": point_to_json(scene.f1), "f2": point_to_json(scene.f2)},
        conic=conic_to_json(scene.conic),
        yiu={"pqr": triangle_to_json(scene.pqr), "pqr_prime": triangle_to_json(scene.pqr_prime)},
        frame={
            "p": scalar_to_json(frame.p),
            "q": scalar_to_json(frame.q),
            "tx": scalar_to_json(frame.tx),
            "ty": scalar_to_json(frame.ty),
        },
        perspectors=perspectors,
        axes=axes,
        certificates=[check_model(name, check) for name, check in certs.checks.items()],
    )


def scene_from_model(model: SceneModel) -> YiuScene:
    try:
        return YiuScene(
            reference=triangle_from_json(model.triangle),
            f1=point_from_json(model.fermat["f1"]),
            f2=point_from_json(model.fermat["f2"]),
            conic=conic_from_json(model.conic),
            pqr=triangle_from_json(model.yiu["pqr"]),
            pqr_prime=triangle_from_json(model.yiu["pqr_prime"]),
        )
    except KeyError as e:
        raise SceneFormatError(f"scene is missing {e}") from e


def dump_scene(scene: YiuScene, certs: SceneCertificates) -> str:
    return json.dumps(scene_to_model(scene, certs).model_dump(mode="json"), indent=2)


def load_scene(path: str | Path) -> YiuScene:
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise SceneFormatError(f"{path} is not valid JSON: {e}") from e
    try:
        model = SceneModel.model_validate(data)
    except ValidationError as e:
        raise SceneFormatError(f"{path} is not a scene: {e}") from e
    return scene_from_model(model)
