import argparse
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..conics import fit_five_points, rectangularity
from ..kiepert_yiu import NORMALIZED_F1, NORMALIZED_F2
from ..models import TrialReport
from ..numeric import Check, Scalar
from ..oracle import (
    ORIGIN,
    OracleReport,
    oracle_conic,
    oracle_PQR,
    oracle_PQR_prime,
    oracle_theorem2_a,
    verify_theorem2_c,
    verify_theorem2_d_e,
)
from ..projective import reflect_through
from .base import BaseSubject, trial_report

# (t, y0, second y0); no denominator vanishes and no line through V is tangent at a vertex
DEFAULT_SWEEP: list[tuple[Fraction, Fraction, Fraction]] = [
    (Fraction(t), Fraction(y), Fraction(y2))
    for t, y, y2 in (
        ("1", "0", "2"),
        ("1/2", "1", "-1"),
        ("2", "1/2", "3"),
        ("-1", "2", "1/3"),
        ("1/3", "-2", "5"),
        ("3", "1/4", "-1/2"),
        ("-2/3", "1/2", "-3"),
        ("3/2", "-1", "1/5"),
        ("-4", "2/5", "4"),
        ("5/2", "-3/2", "1"),
    )
]


@dataclass(frozen=True)
class OracleCase:
    t: Fraction
    y0: Scalar | None = None
    y0b: Scalar | None = None


def _merge(
    checks: dict[str, Check], notes: dict[str, str], prefix: str, report: OracleReport
) -> None:
    checks.update({f"{prefix}.{name}": check for name, check in report.checks.items()})
    notes.update({f"{prefix}.{name}": note for name, note in report.notes.items()})


class Theorem2Subject(BaseSubject):
    """Exact closed forms of the normalized configuration, checked over Q(sqrt 3)."""

    @property
    def name(self) -> str:
        return "theorem2"

    def plan(self, args: argparse.Namespace) -> list[Any]:
        if args.t is None:
            return [OracleCase(t, y, y2) for t, y, y2 in DEFAULT_SWEEP]
        if args.y0 is None:
            return [OracleCase(args.t)]
        y0b = args.y0b if args.y0b is not None else args.y0 + 1
        return [OracleCase(args.t, args.y0, y0b)]

    def given_input(self, args: argparse.Namespace) -> bool:
        return args.t is not None

    def describe(self, args: argparse.Namespace) -> dict[str, Any]:
        if args.t is None:
            return {"sweep": len(DEFAULT_SWEEP)}
        given = {"t": args.t, "y0": args.y0, "y0b": args.y0b}
        return {name: str(value) for name, value in given.items() if value is not None}

    def run_trial(self, index: int, params: OracleCase) -> TrialReport:
        t = params.t
        checks: dict[str, Check] = {}
        notes: dict[str, str] = {"t": str(t)}
        _merge(checks, notes, "a", oracle_theorem2_a(t))

        k = oracle_conic(t)
        pqr = oracle_PQR(t)
        fitted = fit_five_points([*pqr.vertices, NORMALIZED_F1, NORMALIZED_F2])
        checks["b.conic_through_five_points"] = fitted.same_as(k)
        checks["b.rectangular"] = rectangularity(k)
        checks["b.prime_is_reflection"] = Check.all_of(
            [
                reflect_through(v, ORIGIN).coincides(w)
                for v, w in zip(pqr.vertices, oracle_PQR_prime(t).vertices)
            ]
        )

        if params.y0 is not None and params.y0b is not None:
            notes["y0"], notes["y0b"] = str(params.y0), str(params.y0b)
            _merge(checks, notes, "c", verify_theorem2_c(t, params.y0))
            _merge(checks, notes, "de", verify_theorem2_d_e(t, params.y0, params.y0b))
        return trial_report(index, checks, notes)
