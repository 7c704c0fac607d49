import argparse
from typing import Any

from ..collineation import theorem3_inscribed, theorem3_transported
from ..kiepert_yiu import complete_triple
from ..models import TrialReport
from ..numeric import Check
from .base import BaseSubject, trial_report
from .sampling import conjugating_homography, random_inscribed, trial_rng


class Theorem3Subject(BaseSubject):
    """Lines from each vertex through a Hessian point cut out a triply perspective triangle."""

    @property
    def name(self) -> str:
        return "theorem3"

    def plan(self, args: argparse.Namespace) -> list[Any]:
        return [(args.seed, i) for i in range(args.trials)]

    def describe(self, args: argparse.Namespace) -> dict[str, Any]:
        return {"seed": args.seed, "trials": args.trials}

    def run_trial(self, index: int, params: tuple[int, int]) -> TrialReport:
        rng = trial_rng(*params)
        inst = random_inscribed(rng)
        k, t, s = inst.conic, inst.triangle, inst.hessian_point

        direct = theorem3_inscribed(k, t, s)
        checks: dict[str, Check] = {
            "triply_perspective": direct.perspectivity.collinearity,
            "perspectors_on_hessian": direct.on_hessian,
        }

        transported = theorem3_transported(k, t, s)
        checks["collineation_pullback"] = transported.pullback
        checks["hessian_image_at_infinity"] = transported.hessian_at_infinity
        checks["transport_agrees"] = transported.agreement

        certs = direct.perspectivity.certs
        completed = complete_triple(t, direct.inscribed, known=(certs[0].pairing, certs[1].pairing))
        checks["completed_third"] = completed.certs[2].perspector.coincides(certs[2].perspector)

        g = conjugating_homography(rng, inst)
        image = theorem3_inscribed(g.apply_conic(k), g.apply_triangle(t), g.apply(s))
        checks["conjugate_triply_perspective"] = image.perspectivity.collinearity
        checks["conjugate_on_hessian"] = image.on_hessian
        checks["conjugate_maps_triangle"] = Check.all_of(
            [
                g.apply(v).coincides(w)
                for v, w in zip(direct.inscribed.vertices, image.inscribed.vertices)
            ]
        )
        notes = {"pairing": str(certs[0].pairing), "hessian_point": repr(s)}
        return trial_report(index, checks, notes)
