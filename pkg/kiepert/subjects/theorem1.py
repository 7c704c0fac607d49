import argparse
from typing import Any

from ..centers import has_wide_angle
from ..config import KiepertConfig
from ..kiepert_yiu import Route, kiepert_hyperbola
from ..models import TrialReport
from ..scene import build_scene, certify
from .base import BaseSubject, trial_report
from .sampling import SceneSource


def scene_sources(args: argparse.Namespace, seed: int, trials: int) -> list[SceneSource]:
    if args.triangle is not None:
        return [SceneSource(seed, 0, args.triangle)]
    return [SceneSource(seed, i) for i in range(trials)]


class Theorem1Subject(BaseSubject):
    """Both Yiu triangles are equilateral and triply perspective with the reference."""

    def __init__(self, config: KiepertConfig, eps: float, route: Route = "centroid") -> None:
        super().__init__(config, eps)
        self.route: Route = route

    @property
    def name(self) -> str:
        return "theorem1"

    def plan(self, args: argparse.Namespace) -> list[Any]:
        return scene_sources(args, args.seed, args.trials)

    def given_input(self, args: argparse.Namespace) -> bool:
        return args.triangle is not None

    def describe(self, args: argparse.Namespace) -> dict[str, Any]:
        if args.triangle is not None:
            return {"triangle": repr(args.triangle), "route": self.route}
        return {"seed": args.seed, "trials": args.trials, "route": self.route}

    def run_trial(self, index: int, params: SceneSource) -> TrialReport:
        t = params.triangle()
        scene = build_scene(t, self.route)
        certs = certify(scene)
        checks = dict(certs.checks)
        other: Route = "fermat" if self.route == "centroid" else "centroid"
        checks["construction_routes_agree"] = scene.conic.same_as(
            kiepert_hyperbola(t, other).conic
        )
        notes = {"triangle": repr(t), "wide_angle": str(has_wide_angle(t))}
        if certs.pqr_vs_reference is not None:
            notes["pqr_pairing"] = str(certs.pqr_vs_reference.certs[0].pairing)
        if certs.prime_vs_reference is not None:
            notes["prime_pairing"] = str(certs.prime_vs_reference.certs[0].pairing)
        return trial_report(index, checks, notes)
