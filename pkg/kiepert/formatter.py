from fractions import Fraction
from typing import Any

from .centers import Triangle
from .conics import Conic, circle_circle_intersections
from .errors import SceneFormatError
from .models import AttemptModel, CheckModel, ReconstructionReport, VerifyReport
from .numeric import Check, QuadExt, Scalar, format_fraction, simplify
from .oracle import (
    S1,
    S2,
    oracle_conic,
    oracle_perspectors,
    oracle_PQR,
    oracle_PQR_prime,
    oracle_secondary,
)
from .projective import Line, Point
from .reconstruction import ReconstructionResult


def scalar_to_json(value: Scalar) -> Any:
    """Rationals as "p/q", Q(sqrt 3) values as {"a", "b"}, floats as plain numbers."""
    value = simplify(value)
    if isinstance(value, QuadExt):
        return value.to_json()
    if isinstance(value, Fraction):
        return format_fraction(value)
    return float(value)


def scalar_from_json(data: Any) -> Scalar:
    if isinstance(data, bool):
        raise SceneFormatError(f"not a number: {data!r}")
    if isinstance(data, str):
        try:
            return Fraction(data)
        except ValueError as e:
            raise SceneFormatError(f"bad rational literal {data!r}") from e
    if isinstance(data, dict) and set(data) == {"a", "b"}:
        return simplify(QuadExt.from_json(data))
    if isinstance(data, int):
        return Fraction(data)
    if isinstance(data, float):
        return data
    raise SceneFormatError(f"not a scalar: {data!r}")


def point_to_json(p: Point) -> Any:
    p = p.normalized()
    if p.is_at_infinity:
        return {"h": [scalar_to_json(c) for c in p.coords]}
    return [scalar_to_json(c) for c in p.xy]


def point_from_json(data: Any) -> Point:
    if isinstance(data, dict) and "h" in data:
        coords = data["h"]
        if len(coords) != 3:
            raise SceneFormatError("homogeneous points need three coordinates")
        return Point(*(scalar_from_json(c) for c in coords))
    if isinstance(data, list) and len(data) == 2:
        return Point.affine(*(scalar_from_json(c) for c in data))
    raise SceneFormatError(f"not a point: {data!r}")


def line_to_json(line: Line) -> dict[str, list[Any]]:
    return {"l": [scalar_to_json(c) for c in line.normalized().coords]}


def conic_to_json(k: Conic) -> dict[str, list[Any]]:
    return {"coeffs": [scalar_to_json(c) for c in k.normalized().coeffs]}


def conic_from_json(data: Any) -> Conic:
    if not isinstance(data, dict) or len(data.get("coeffs", [])) != 6:
        raise SceneFormatError(f"not a conic: {data!r}")
    return Conic.from_coeffs([scalar_from_json(c) for c in data["coeffs"]])


def triangle_to_json(t: Triangle) -> list[Any]:
    return [point_to_json(v) for v in t.vertices]


def triangle_from_json(data: Any) -> Triangle:
    if not isinstance(data, list) or len(data) != 3:
        raise SceneFormatError(f"a triangle needs three points, got {data!r}")
    return Triangle(*(point_from_json(p) for p in data))


def check_model(name: str, check: Check) -> CheckModel:
    return CheckModel(name=name, passed=check.passed, residual=check.residual)


def format_report_text(report: VerifyReport) -> str:
    """Format a verification report in a simple readable format."""
    lines = [f"\n{'=' * 60}", f"Subject: {report.subject}", f"Tolerance: {report.tolerance:g}"]
    for key, value in report.params.items():
        lines.append(f"  {key}: {value}")
    for trial in report.trials:
        status = "PASS" if trial.passed else "FAIL"
        lines.append(f"\n  Trial {trial.index}: {status}")
        if trial.error:
            lines.append(f"    error: {trial.error}")
        for check in trial.checks:
            mark = "ok " if check.passed else "BAD"
            lines.append(f"    [{mark}] {check.name}: residual {check.residual:.3e}")
        for key, note in trial.notes.items():
            lines.append(f"      • {key}: {note}")
    lines.append(f"\n{'=' * 60}")
    lines.append(f"Result: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines)


def format_reconstruction_text(report: ReconstructionReport) -> str:
    lines = [f"\n{'=' * 60}", f"Given vertex: {report.vertex}"]
    lines.append(f"F1: {report.fermat['f1']}  F2: {report.fermat['f2']}")
    kind = "unique" if report.unique else "not unique"
    lines.append(f"\n  Candidates ({len(report.candidates)}, {kind}):")
    for tri, count in zip(report.candidates, report.multiplicity):
        lines.append(f"    - {tri} (from {count} Yiu vertex choice{'s' if count > 1 else ''})")
    for attempt in report.attempts:
        verdict = "valid" if attempt.valid else attempt.error or "rejected"
        lines.append(f"      • via {attempt.yiu_vertex}: {verdict}")
    lines.append(f"\n{'=' * 60}")
    return "\n".join(lines)


def reconstruction_model(result: ReconstructionResult) -> ReconstructionReport:
    attempts = [
        AttemptModel(
            yiu_vertex=point_to_json(a.yiu_vertex),
            v=point_to_json(a.v) if a.v is not None else None,
            triangle=triangle_to_json(a.triangle) if a.triangle is not None else None,
            checks=[check_model(name, check) for name, check in a.checks.items()],
            error=a.error,
            valid=a.valid,
        )
        for a in result.attempts
    ]
    return ReconstructionReport(
        vertex=point_to_json(result.vertex),
        fermat={"f1": point_to_json(result.f1), "f2": point_to_json(result.f2)},
        center=point_to_json(result.center),
        pqr=triangle_to_json(result.pqr),
        candidates=[triangle_to_json(t) for t in result.candidates],
        multiplicity=list(result.multiplicity),
        unique=result.unique,
        attempts=attempts,
    )


def oracle_payload(t: Scalar, y0: Scalar | None = None) -> dict[str, Any]:
    """Every closed form at (t, y0) in the exact JSON encodings."""
    payload: dict[str, Any] = {
        "t": scalar_to_json(t),
        "pqr": triangle_to_json(oracle_PQR(t)),
        "pqr_prime": triangle_to_json(oracle_PQR_prime(t)),
        "conic": conic_to_json(oracle_conic(t)),
        "circle_points": [point_to_json(p) for p in circle_circle_intersections(S1, S2)],
    }
    if y0 is not None:
        payload["y0"] = scalar_to_json(y0)
        payload["secondary"] = triangle_to_json(oracle_secondary(t, y0))
        payload["perspectors"] = [point_to_json(p) for p in oracle_perspectors(t, y0)]
    return payload
