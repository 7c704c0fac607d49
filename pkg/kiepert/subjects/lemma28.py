import argparse
from typing import Any

from ..kiepert_yiu import complete_triple, hessian_line, pascal_line, triple_perspectivity
from ..models import TrialReport
from ..numeric import Check
from ..scene import build_scene
from .base import BaseSubject, trial_report
from .sampling import SceneSource
from .theorem1 import scene_sources


class Lemma28Subject(BaseSubject):
    """Perspector axes of inscribed triply perspective pairs are Hessian lines."""

    @property
    def name(self) -> str:
        return "lemma28"

    def plan(self, args: argparse.Namespace) -> list[Any]:
        return scene_sources(args, args.seed, args.trials)

    def given_input(self, args: argparse.Namespace) -> bool:
        return args.triangle is not None

    def describe(self, args: argparse.Namespace) -> dict[str, Any]:
        if args.triangle is not None:
            return {"triangle": repr(args.triangle)}
        return {"seed": args.seed, "trials": args.trials}

    def run_trial(self, index: int, params: SceneSource) -> TrialReport:
        scene = build_scene(params.triangle())
        k, ref = scene.conic, scene.reference
        checks: dict[str, Check] = {}
        notes: dict[str, str] = {}

        for label, tri in (("pqr", scene.pqr), ("prime", scene.pqr_prime)):
            tp = triple_perspectivity(tri, ref)
            checks[f"{label}_perspectors_collinear"] = tp.collinearity
            checks[f"{label}_axis_is_hessian"] = tp.axis.coincides(hessian_line(k, tri).line)
            # the relation is symmetric, so the reference has the same Hessian line
            checks[f"{label}_axis_is_reference_hessian"] = tp.axis.coincides(
                hessian_line(k, ref).line
            )

            # opposite sides of (C', A, B', B, A', C) meet at the three perspectors
            a, b, c = tri.vertices
            a2, b2, c2 = tp.certs[0].pairing.apply(ref).vertices
            pascal = pascal_line(k, [c2, a, b2, b, a2, c])
            checks[f"{label}_pascal_collinear"] = pascal.check
            checks[f"{label}_pascal_is_axis"] = pascal.line.coincides(tp.axis)

            completed = complete_triple(
                tri, ref, known=(tp.certs[0].pairing, tp.certs[1].pairing)
            )
            checks[f"{label}_completed_third"] = completed.certs[2].perspector.coincides(
                tp.certs[2].perspector
            )
            notes[f"{label}_pairing"] = str(tp.certs[0].pairing)
        return trial_report(index, checks, notes)
