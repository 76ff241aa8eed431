from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from linarr.builtins import builtin, builtin_hexagon
from linarr.hexagon import pascal_line, pascal_octic, six_points_on_conic
from linarr.poly import LinearForm
from linarr.render import SvgScene, chart_matrix, clip_line, render_arrangement, viewport

BOX = (Fraction(-1), Fraction(1), Fraction(-1), Fraction(1))


def test_clip_line_exact_endpoints():
    assert clip_line(LinearForm.of(1, -1, 0), BOX) == ((-1, -1), (1, 1))
    assert clip_line(LinearForm.of(0, 1, 0), BOX) == ((-1, 0), (1, 0))
    assert clip_line(LinearForm.of(1, 0, -5), BOX) is None
    assert clip_line(LinearForm.of(0, 0, 1), BOX) is None


def test_chart_matrix_sends_line_to_infinity():
    for text in ("z", "x+y+z", "x", "2x-y"):
        l = LinearForm.of(text)
        m = chart_matrix(l)
        assert m[2] == list(l.coeffs)


def test_viewport_covers_multiple_points():
    xmin, xmax, ymin, ymax = viewport(builtin("AD"))
    assert xmin < 0 < xmax and ymin < 0 < ymax


def test_empty_viewport_rejected():
    with pytest.raises(ValueError):
        SvgScene(Fraction(0), Fraction(0), Fraction(0), Fraction(1))


def _scene(name):
    h = builtin_hexagon(name)
    conic = six_points_on_conic([p.coords for p in h.vertices]).conic
    return render_arrangement(builtin(name), conic, pascal_line(h), pascal_octic(h).quartic)


def test_az_figure_contents():
    scene = _scene("AZ")
    # z = 0 is the line at infinity of the chart
    assert scene.count("arrangement") == 8
    assert scene.count("conic") >= 2
    assert scene.count("pascal") == 1
    assert scene.count("quartic") >= 2


def test_ad_figure_contents():
    scene = _scene("AD")
    assert scene.count("arrangement") == 9
    assert scene.count("conic") >= 1
    assert scene.count("pascal") == 1
    assert scene.count("quartic") >= 1


def test_triangle_chart_choice():
    a = builtin("TRIANGLE")
    assert render_arrangement(a).count("arrangement") == 2
    assert render_arrangement(a, chart=LinearForm.of("x+y+z")).count("arrangement") == 3


def test_svg_is_well_formed_with_styles():
    svg = _scene("AZ").to_svg()
    root = ET.fromstring(svg)
    kinds = {el.get("class") for el in root if el.get("class")}
    assert kinds == {"arrangement", "conic", "pascal", "quartic"}
    dotted = [el for el in root if el.get("class") == "arrangement"]
    assert all(el.get("stroke-dasharray") for el in dotted)
