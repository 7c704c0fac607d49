"""Command-line entry point for the kiepert subcommands."""

import argparse
import asyncio
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from .centers import Triangle
from .config import KiepertConfig, load_config, resolve_tolerance
from .errors import NoValidCandidate, PreconditionError, VerificationError
from .figure import render_figure
from .formatter import (
    format_reconstruction_text,
    format_report_text,
    oracle_payload,
    reconstruction_model,
)
from .models import FigureSpec
from .numeric import Scalar, parse_scalar, simplify, tolerance
from .projective import Point
from .reconstruction import ReconstructionResult, reconstruct
from .scene import build_scene, certify, dump_scene, load_scene
from .subjects import (
    BaseSubject,
    Lemma28Subject,
    Theorem1Subject,
    Theorem2Subject,
    Theorem3Subject,
)

logger = logging.getLogger("kiepert")

EXIT_OK, EXIT_FAILED, EXIT_BAD_INPUT, EXIT_IO = 0, 1, 2, 3


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from e


def _coordinates(text: str, count: int) -> list[Fraction]:
    parts = text.split(",")
    if len(parts) != count:
        raise argparse.ArgumentTypeError(f"expected {count} comma-separated numbers, got {text!r}")
    return [parse_rational(p) for p in parts]


def parse_height(text: str) -> Scalar:
    """A rational or an element of Q(sqrt 3), e.g. "sqrt3/2" or "1-2*sqrt3"."""
    try:
        return simplify(parse_scalar(text))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"not a number in Q(sqrt 3): {text!r}") from e


def parse_point(text: str) -> Point:
    x, y = _coordinates(text, 2)
    return Point.affine(x, y)


def parse_triangle(text: str) -> Triangle:
    """x1,y1,x2,y2,x3,y3 as exact rationals."""
    xs = _coordinates(text, 6)
    try:
        return Triangle(*(Point.affine(xs[i], xs[i + 1]) for i in (0, 2, 4)))
    except PreconditionError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kiepert-yiu",
        description="Construct and verify Yiu's equilateral triangles in a Kiepert hyperbola.",
    )
    # shared by every subcommand so the flags may follow it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config",
        default=None,
        help="Path to configuration file (default: ~/.kiepert_config.json)",
    )
    common.add_argument(
        "--tol", type=float, default=None, help="Relative tolerance (overrides KIEPERT_TOL)"
    )
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debug"
    )
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", default=None, help="Write output here instead of stdout")
    commands = parser.add_subparsers(dest="command", required=True)

    def subcommand(name: str, summary: str) -> argparse.ArgumentParser:
        return commands.add_parser(name, parents=[common], help=summary)

    verify = subcommand("verify", "Check a theorem and report certificates")
    verify.add_argument("subject", choices=("theorem1", "theorem2", "lemma28", "theorem3"))
    verify.add_argument("--triangle", type=parse_triangle, default=None)
    verify.add_argument("--t", type=parse_rational, default=None)
    verify.add_argument("--y0", type=parse_height, default=None)
    verify.add_argument("--y0b", type=parse_height, default=None)
    verify.add_argument("--trials", type=int, default=None)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--route", choices=("centroid", "fermat"), default="centroid")

    construct = subcommand("construct", "Build a scene and emit it as JSON")
    construct.add_argument("what", choices=("yiu",))
    construct.add_argument("--triangle", type=parse_triangle, required=True)
    construct.add_argument("--route", choices=("centroid", "fermat"), default="centroid")

    recon = subcommand("reconstruct", "Recover a triangle from its hyperbola")
    recon.add_argument("--scene", required=True)
    recon.add_argument("--vertex", type=parse_point, required=True)
    recon.add_argument("--fermat", choices=("first", "second"), default="first")

    figure = subcommand("figure", "Draw a scene as SVG")
    figure.add_argument("--scene", required=True)
    figure.add_argument("--kind", choices=("yiu", "construction"), default="yiu")
    figure.add_argument("--vertex", type=parse_point, default=None)
    figure.add_argument("--fermat", choices=("first", "second"), default="first")
    figure.add_argument("--width", type=int, default=None)
    figure.add_argument("--height", type=int, default=None)

    oracle = subcommand("oracle", "Evaluate the exact closed forms at (t, y0)")
    oracle.add_argument("--t", type=parse_rational, required=True)
    oracle.add_argument("--y0", type=parse_height, default=None)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        print(text)
        return
    Path(out).write_text(text + "\n", encoding="utf-8")
    logger.info("Wrote %s", out)


def _subject(name: str, config: KiepertConfig, eps: float, route: str) -> BaseSubject:
    if name == "theorem1":
        return Theorem1Subject(config, eps, "fermat" if route == "fermat" else "centroid")
    if name == "theorem2":
        return Theorem2Subject(config, eps)
    if name == "lemma28":
        return Lemma28Subject(config, eps)
    if name == "theorem3":
        return Theorem3Subject(config, eps)
    raise ValueError(f"Unknown subject: {name}")


async def cmd_verify(args: argparse.Namespace, config: KiepertConfig, eps: float) -> int:
    if args.seed is None:
        args.seed = config.seed
    if args.trials is None:
        args.trials = config.trials
    subject = _subject(args.subject, config, eps, args.route)
    report = await subject.verify(args)
    if args.format == "text":
        _emit(format_report_text(report), args.out)
    else:
        _emit(report.model_dump_json(indent=2), args.out)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_construct(args: argparse.Namespace) -> int:
    scene = build_scene(args.triangle, args.route)
    certs = certify(scene)
    _emit(dump_scene(scene, certs), args.out)
    return EXIT_OK if certs.passed else EXIT_FAILED


def _emit_reconstruction(result: ReconstructionResult, args: argparse.Namespace) -> None:
    report = reconstruction_model(result)
    if args.format == "text":
        _emit(format_reconstruction_text(report), args.out)
    else:
        _emit(report.model_dump_json(indent=2), args.out)


def cmd_reconstruct(args: argparse.Namespace) -> int:
    scene = load_scene(args.scene)
    f = scene.f1 if args.fermat == "first" else scene.f2
    try:
        result = reconstruct(scene.conic, f, args.fermat, args.vertex)
    except NoValidCandidate as e:
        if isinstance(e.result, ReconstructionResult):
            _emit_reconstruction(e.result, args)
        raise
    _emit_reconstruction(result, args)
    return EXIT_OK


def cmd_figure(args: argparse.Namespace, config: KiepertConfig) -> int:
    scene = load_scene(args.scene)
    spec = FigureSpec(
        kind=args.kind,
        width=args.width or config.figure.width,
        height=args.height or config.figure.height,
        padding=config.figure.padding,
    )
    result = None
    if args.kind == "construction":
        vertex = args.vertex if args.vertex is not None else scene.reference.a
        f = scene.f1 if args.fermat == "first" else scene.f2
        result = reconstruct(scene.conic, f, args.fermat, vertex)
    svg = render_figure(scene, spec, result)
    if args.out is None:
        sys.stdout.buffer.write(svg)
    else:
        Path(args.out).write_bytes(svg)
        logger.info("Wrote %s", args.out)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    payload = oracle_payload(args.t, args.y0)
    if args.format == "text":
        _emit("\n".join(f"{key}: {json.dumps(value)}" for key, value in payload.items()), args.out)
    else:
        _emit(json.dumps(payload, indent=2), args.out)
    return EXIT_OK


async def run(args: argparse.Namespace, config: KiepertConfig, eps: float) -> int:
    with tolerance(eps):
        if args.command == "verify":
            return await cmd_verify(args, config, eps)
        if args.command == "construct":
            return cmd_construct(args)
        if args.command == "reconstruct":
            return cmd_reconstruct(args)
        if args.command == "figure":
            return cmd_figure(args, config)
        return cmd_oracle(args)


async def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )

    try:
        config = load_config(args.config)
        eps = resolve_tolerance(args.tol, config)
        return await run(args, config, eps)
    except PreconditionError as e:
        print(f"Error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except VerificationError as e:
        print(f"Verification failed: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAILED
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_IO


def cli() -> None:
    """Synchronous entry point for CLI."""
    sys.exit(asyncio.run(main()))


if __name__ == "__main__":
    cli()
