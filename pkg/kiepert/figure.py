"""Static SVG figures of a Yiu scene: the inscribed triangles, or the reconstruction."""

import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from lxml import etree

from .centers import Triangle, circle_through
from .conics import Circle, Conic, center_of, radical_axis
from .errors import DegenerateConic
from .kiepert_yiu import triple_perspectivity
from .models import FigureSpec
from .projective import Line, Point
from .reconstruction import ReconstructionResult, reconstruct
from .scene import YiuScene

logger = logging.getLogger(__name__)

FloatArray = npt.NDArray[np.float64]

SVG_NS = "http://www.w3.org/2000/svg"
PATH_CLASSES: dict[str, tuple[str, ...]] = {
    "yiu": ("conic", "circle", "reference", "yiu", "radical_axis", "perspector_axis"),
    "construction": ("conic", "circle", "reference", "yiu", "radical_axis", "construction"),
}
# chord sag allowed in pixels before an interval is split
SAG_PX = 0.35
MAX_REFINE = 12


def _tag(name: str) -> str:
    return f"{{{SVG_NS}}}{name}"


def _xy(p: Point) -> tuple[float, float] | None:
    if p.is_at_infinity:
        return None
    x, y = p.xy
    return float(x), float(y)


@dataclass(frozen=True)
class Canvas:
    """Viewport in scene coordinates mapped onto a width x height pixel box (y up)."""

    xmin: float
    ymin: float
    xmax: float
    ymax: float
    width: int
    height: int

    @property
    def sx(self) -> float:
        return self.width / (self.xmax - self.xmin)

    @property
    def sy(self) -> float:
        return self.height / (self.ymax - self.ymin)

    def to_px(self, xy: FloatArray) -> FloatArray:
        px = (xy[:, 0] - self.xmin) * self.sx
        py = (self.ymax - xy[:, 1]) * self.sy
        return np.column_stack([px, py])

    def inside(self, xy: FloatArray, margin: float = 0.05) -> npt.NDArray[np.bool_]:
        mx = margin * (self.xmax - self.xmin)
        my = margin * (self.ymax - self.ymin)
        return (
            (xy[:, 0] >= self.xmin - mx)
            & (xy[:, 0] <= self.xmax + mx)
            & (xy[:, 1] >= self.ymin - my)
            & (xy[:, 1] <= self.ymax + my)
        )

    def reach(self, cx: float, cy: float) -> float:
        """Distance from (cx, cy) to the farthest viewport corner."""
        return max(
            math.hypot(x - cx, y - cy)
            for x in (self.xmin, self.xmax)
            for y in (self.ymin, self.ymax)
        )

    def visible_runs(self, pts: FloatArray) -> list[FloatArray]:
        """Split a polyline into the runs near the viewport, one outside point kept at each end."""
        mask = self.inside(pts)
        runs: list[FloatArray] = []
        idx = np.flatnonzero(mask)
        if idx.size == 0:
            return runs
        breaks = np.flatnonzero(np.diff(idx) > 1)
        starts = np.concatenate([[idx[0]], idx[breaks + 1]])
        ends = np.concatenate([idx[breaks], [idx[-1]]])
        for s, e in zip(starts, ends):
            lo, hi = max(int(s) - 1, 0), min(int(e) + 2, len(pts))
            if hi - lo >= 2:
                runs.append(pts[lo:hi])
        return runs


def fit_canvas(points: Sequence[Point], spec: FigureSpec) -> Canvas:
    if spec.viewport is not None:
        return Canvas(*spec.viewport, spec.width, spec.height)
    xy = np.array([c for c in (_xy(p) for p in points) if c is not None])
    lo, hi = xy.min(axis=0), xy.max(axis=0)
    extent = max(float((hi - lo).max()), 1e-9)
    pad = spec.padding * extent
    xmin, ymin = lo - pad
    xmax, ymax = hi + pad
    # match the pixel aspect ratio so circles stay round
    want = spec.width / spec.height
    w, h = xmax - xmin, ymax - ymin
    if w / h < want:
        grow = (h * want - w) / 2
        xmin, xmax = xmin - grow, xmax + grow
    else:
        grow = (w / want - h) / 2
        ymin, ymax = ymin - grow, ymax + grow
    return Canvas(float(xmin), float(ymin), float(xmax), float(ymax), spec.width, spec.height)


def _adaptive(
    curve: Callable[[FloatArray], FloatArray], lo: float, hi: float, canvas: Canvas
) -> FloatArray:
    """Sample a parametrized curve, bisecting visible intervals until the chords are flat."""
    ts = np.linspace(lo, hi, 65)
    for _ in range(MAX_REFINE):
        pts = curve(ts)
        mids = (ts[:-1] + ts[1:]) / 2
        mid_pts = curve(mids)
        px = canvas.to_px(pts)
        sag = np.linalg.norm(canvas.to_px(mid_pts) - (px[:-1] + px[1:]) / 2, axis=1)
        near = canvas.inside(pts)
        visible = near[:-1] | near[1:]
        split = (sag > SAG_PX) & visible
        if not split.any():
            break
        ts = np.sort(np.concatenate([ts, mids[split]]))
    return curve(ts)


def conic_branches(k: Conic, canvas: Canvas) -> list[FloatArray]:
    """Visible polylines of a central conic, each hyperbola branch sampled on its own."""
    cx, cy = (float(c) for c in center_of(k).xy)
    quad = np.array(
        [[float(k.A), float(k.B) / 2], [float(k.B) / 2, float(k.C)]], dtype=np.float64
    )
    f0 = float(k.evaluate(Point.affine(cx, cy)))
    lam, vecs = np.linalg.eigh(quad)
    scale = float(np.abs(lam).max())
    if abs(f0) <= 1e-12 * scale * max(1.0, cx * cx + cy * cy):
        raise DegenerateConic(f"{k} is a pair of lines")
    center = np.array([cx, cy])

    if lam[0] * lam[1] < 0:
        i = 0 if -f0 / lam[0] > 0 else 1
        j = 1 - i
        a = math.sqrt(-f0 / lam[i])
        b = math.sqrt(f0 / lam[j])
        ei, ej = vecs[:, i], vecs[:, j]
        s_max = math.asinh(canvas.reach(cx, cy) / min(a, b)) + 0.5
        runs: list[FloatArray] = []
        for sign in (1.0, -1.0):

            def branch(s: FloatArray, sign: float = sign) -> FloatArray:
                return (
                    center
                    + np.outer(sign * a * np.cosh(s), ei)
                    + np.outer(b * np.sinh(s), ej)
                )

            runs.extend(canvas.visible_runs(_adaptive(branch, -s_max, s_max, canvas)))
        logger.debug("hyperbola: %d visible runs", len(runs))
        return runs

    if np.all(-f0 / lam > 0):
        a, b = (math.sqrt(-f0 / v) for v in lam)

        def ellipse(s: FloatArray) -> FloatArray:
            return (
                center
                + np.outer(a * np.cos(s), vecs[:, 0])
                + np.outer(b * np.sin(s), vecs[:, 1])
            )

        return canvas.visible_runs(_adaptive(ellipse, 0.0, 2 * math.pi, canvas))
    raise DegenerateConic(f"{k} has no real points")


def clip_line(line: Line, canvas: Canvas) -> FloatArray | None:
    """The chord of the viewport cut by a line, or None when they miss."""
    if line.is_at_infinity:
        return None
    a, b, c = (float(v) for v in line.coords)
    hits: list[tuple[float, float]] = []
    if abs(b) > 1e-15:
        for x in (canvas.xmin, canvas.xmax):
            y = -(a * x + c) / b
            if canvas.ymin <= y <= canvas.ymax:
                hits.append((x, y))
    if abs(a) > 1e-15:
        for y in (canvas.ymin, canvas.ymax):
            x = -(b * y + c) / a
            if canvas.xmin <= x <= canvas.xmax:
                hits.append((x, y))
    if len(hits) < 2:
        return None
    pts = np.array(hits)
    d = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=2)
    i, j = np.unravel_index(int(np.argmax(d)), d.shape)
    if d[i, j] == 0:
        return None
    return pts[[i, j]]


def _triangle_loop(t: Triangle) -> FloatArray:
    return np.array([_xy(v) for v in t.vertices], dtype=np.float64)


def _collinear_span(points: Sequence[Point]) -> FloatArray | None:
    """Segment covering the finite points of a collinear set."""
    xy = np.array([c for c in (_xy(p) for p in points) if c is not None])
    if len(xy) < 2:
        return None
    direction = xy[-1] - xy[0]
    t = xy @ direction
    return xy[[int(np.argmin(t)), int(np.argmax(t))]]


def _path_data(polylines: Sequence[FloatArray], canvas: Canvas, closed: bool = False) -> str:
    parts = []
    for poly in polylines:
        px = canvas.to_px(poly)
        head = f"M {px[0, 0]:.2f},{px[0, 1]:.2f}"
        tail = " ".join(f"L {x:.2f},{y:.2f}" for x, y in px[1:])
        parts.append(f"{head} {tail}{' Z' if closed else ''}")
    return " ".join(parts)


def _line_data(line: Line, canvas: Canvas) -> str:
    span = clip_line(line, canvas)
    return _path_data([span] if span is not None else [], canvas)


def _circle_data(circles: Sequence[Circle], canvas: Canvas) -> str:
    parts = []
    for circle in circles:
        center = _xy(circle.center)
        if center is None:
            continue
        r = math.sqrt(float(circle.radius_sq))
        (cx, cy), = canvas.to_px(np.array([center]))
        rx, ry = r * canvas.sx, r * canvas.sy
        parts.append(
            f"M {cx + rx:.2f},{cy:.2f} "
            f"A {rx:.2f},{ry:.2f} 0 1 0 {cx - rx:.2f},{cy:.2f} "
            f"A {rx:.2f},{ry:.2f} 0 1 0 {cx + rx:.2f},{cy:.2f} Z"
        )
    return " ".join(parts)


def _labels(scene: YiuScene, extra: dict[str, Point]) -> dict[str, Point]:
    names = dict(zip(("A", "B", "C"), scene.reference.vertices))
    names |= dict(zip(("P", "Q", "R"), scene.pqr.vertices))
    names |= dict(zip(("P'", "Q'", "R'"), scene.pqr_prime.vertices))
    names |= {"F1": scene.f1, "F2": scene.f2, "O": scene.center}
    return names | extra


def _construction(result: ReconstructionResult) -> tuple[Triangle | None, list[FloatArray], Point]:
    """Recovered triangle and the chords through V of the first valid attempt."""
    for i, attempt in enumerate(result.attempts):
        if not attempt.valid or attempt.v is None or attempt.triangle is None:
            continue
        yiu = result.pqr.vertices
        recovered = attempt.triangle.vertices
        groups = [
            (attempt.yiu_vertex, result.vertex, attempt.v),
            (yiu[(i + 1) % 3], attempt.v, recovered[1]),
            (yiu[(i + 2) % 3], attempt.v, recovered[2]),
        ]
        spans = [s for s in (_collinear_span(g) for g in groups) if s is not None]
        return attempt.triangle, spans, attempt.v
    return None, [], result.vertex


def render_figure(
    scene: YiuScene, spec: FigureSpec, reconstruction: ReconstructionResult | None = None
) -> bytes:
    """Standalone SVG 1.1 document with one path per element class of `spec.kind`."""
    circles = [circle_through(scene.f2, scene.f1), circle_through(scene.f1, scene.f2)]
    axis = radical_axis(circles[0], circles[1])
    points = [
        *scene.reference.vertices,
        *scene.pqr.vertices,
        *scene.pqr_prime.vertices,
        scene.f1,
        scene.f2,
    ]
    canvas = fit_canvas(points, spec)

    data: dict[str, str] = {
        "conic": _path_data(conic_branches(scene.conic, canvas), canvas),
        "circle": _circle_data(circles, canvas),
        "radical_axis": _line_data(axis, canvas),
    }
    extra: dict[str, Point] = {}
    if spec.kind == "yiu":
        tp = triple_perspectivity(scene.pqr, scene.reference)
        data["reference"] = _path_data([_triangle_loop(scene.reference)], canvas, closed=True)
        data["yiu"] = _path_data(
            [_triangle_loop(scene.pqr), _triangle_loop(scene.pqr_prime)], canvas, closed=True
        )
        data["perspector_axis"] = _line_data(tp.axis, canvas)
    else:
        if reconstruction is None:
            reconstruction = reconstruct(scene.conic, scene.f1, "first", scene.reference.a)
        recovered, spans, v = _construction(reconstruction)
        loops = [_triangle_loop(recovered)] if recovered is not None else []
        data["reference"] = _path_data(loops, canvas, closed=True)
        data["yiu"] = _path_data([_triangle_loop(reconstruction.pqr)], canvas, closed=True)
        data["construction"] = _path_data(spans, canvas)
        extra["V"] = v

    root = etree.Element(
        _tag("svg"),
        nsmap={None: SVG_NS},
        version="1.1",
        width=str(spec.width),
        height=str(spec.height),
        viewBox=f"0 0 {spec.width} {spec.height}",
    )
    defs = etree.SubElement(root, _tag("defs"))
    clip = etree.SubElement(defs, _tag("clipPath"), id="viewport")
    etree.SubElement(
        clip, _tag("rect"), x="0", y="0", width=str(spec.width), height=str(spec.height)
    )
    group = etree.SubElement(root, _tag("g"), {"clip-path": "url(#viewport)"})
    for cls in PATH_CLASSES[spec.kind]:
        attrs = {"class": cls, "id": cls, "style": spec.styles[cls], "d": data[cls]}
        etree.SubElement(group, _tag("path"), attrs)

    labels = etree.SubElement(
        root, _tag("g"), {"class": "labels", "style": spec.styles["labels"]}
    )
    for name, p in _labels(scene, extra).items():
        xy = _xy(p)
        if xy is None:
            continue
        (px, py), = canvas.to_px(np.array([xy]))
        text = etree.SubElement(labels, _tag("text"), x=f"{px + 4:.2f}", y=f"{py - 4:.2f}")
        text.text = name
    return etree.tostring(root, pretty_print=True, xml_declaration=True, encoding="UTF-8")
