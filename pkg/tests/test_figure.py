import numpy as np
import pytest
from lxml import etree

from kiepert.centers import Triangle
from kiepert.conics import Conic
from kiepert.errors import DegenerateConic
from kiepert.figure import PATH_CLASSES, SVG_NS, Canvas, clip_line, conic_branches, render_figure
from kiepert.models import FigureSpec
from kiepert.projective import Line, Point
from kiepert.scene import build_scene

NS = {"svg": SVG_NS}


@pytest.fixture
def scene():
    return build_scene(Triangle(Point.affine(0, 0), Point.affine(4, 0), Point.affine(1, 3)))


@pytest.fixture
def canvas():
    return Canvas(-4.0, -4.0, 4.0, 4.0, 400, 400)


def test_canvas_maps_y_up(canvas):
    px = canvas.to_px(np.array([[-4.0, 4.0], [4.0, -4.0]]))
    assert np.allclose(px, [[0, 0], [400, 400]])


def test_hyperbola_branches_stay_on_conic(canvas):
    k = Conic.from_coeffs([1, -2, -1, 0, 0, -1])
    runs = conic_branches(k, canvas)
    assert len(runs) >= 2
    for run in runs:
        x, y = run[:, 0], run[:, 1]
        assert np.allclose(x * x - 2 * x * y - y * y - 1, 0, atol=1e-8)


def test_ellipse_and_degenerate(canvas):
    circle = Conic.from_coeffs([1, 0, 1, 0, 0, -4])
    (run,) = conic_branches(circle, canvas)
    assert np.allclose(np.hypot(run[:, 0], run[:, 1]), 2)
    with pytest.raises(DegenerateConic):
        conic_branches(Conic.from_coeffs([1, 0, 1, 0, 0, 4]), canvas)


def test_clip_line(canvas):
    span = clip_line(Line(1, 0, 0), canvas)
    assert np.allclose(sorted(span[:, 1]), [-4, 4])
    assert clip_line(Line(1, 0, -10), canvas) is None
    assert clip_line(Line.at_infinity(), canvas) is None


@pytest.mark.parametrize("kind", ["yiu", "construction"])
def test_render_figure_is_well_formed(scene, kind):
    svg = render_figure(scene, FigureSpec(kind=kind, width=600, height=400))
    root = etree.fromstring(svg)
    assert root.tag == f"{{{SVG_NS}}}svg"
    assert root.get("viewBox") == "0 0 600 400"
    paths = root.findall(".//svg:path", NS)
    assert [p.get("class") for p in paths] == list(PATH_CLASSES[kind])
    drawn = {p.get("class"): p.get("d") for p in paths}
    assert all(drawn[cls] for cls in ("conic", "circle", "reference", "yiu"))
    labels = {t.text for t in root.findall(".//svg:g[@class='labels']/svg:text", NS)}
    assert {"A", "B", "C", "P", "Q", "R", "F1", "F2"} <= labels
    if kind == "construction":
        assert "V" in labels


def test_viewport_validation():
    with pytest.raises(ValueError):
        FigureSpec(viewport=(1.0, 0.0, 0.0, 1.0))
