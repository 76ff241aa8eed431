"""SVG pictures of an arrangement in an affine chart (by default z = 1).

Lines are clipped to the viewport exactly (rational arithmetic) and only
converted to floats when written out. Curves (the conic through the hexagon
and the quartic of the octic) are traced as zero-level contours of a grid
sample, the only place where floating point is used.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from contourpy import contour_generator

from .arrangement import Arrangement, adjugate, det3, intersection_lattice
from .poly import HomPoly, LinearForm

DOTTED = {"stroke": "black", "stroke-width": "1.2", "stroke-dasharray": "1.5,3", "fill": "none"}
DASHED = {"stroke": "red", "stroke-width": "1.4", "stroke-dasharray": "8,5", "fill": "none"}
SOLID = {"stroke": "green", "stroke-width": "1.6", "fill": "none"}

STYLES = {"arrangement": DOTTED, "conic": DASHED, "pascal": SOLID, "quartic": SOLID}


@dataclass
class SvgScene:
    """A viewport in the affine chart z = 1 (after any chart change) and its strokes."""

    xmin: Fraction
    xmax: Fraction
    ymin: Fraction
    ymax: Fraction
    segments: list[tuple[str, tuple[Fraction, Fraction], tuple[Fraction, Fraction]]] = field(default_factory=list)
    paths: list[tuple[str, np.ndarray]] = field(default_factory=list)
    width: int = 600

    def __post_init__(self):
        if not (self.xmin < self.xmax and self.ymin < self.ymax):
            raise ValueError("viewport must be a nonempty finite rectangle")

    def count(self, kind: str) -> int:
        return (sum(1 for k, *_ in self.segments if k == kind)
                + sum(1 for k, _ in self.paths if k == kind))

    def add_line(self, kind: str, line: LinearForm) -> bool:
        """Clip ``a x + b y + c = 0`` to the viewport; the line at infinity is skipped."""
        seg = clip_line(line, (self.xmin, self.xmax, self.ymin, self.ymax))
        if seg is None:
            return False
        self.segments.append((kind, *seg))
        return True

    def add_curve(self, kind: str, f: HomPoly, resolution: int = 400) -> int:
        """Zero set of ``f(x, y, 1)`` traced on a grid; returns the number of pieces."""
        xs = np.linspace(float(self.xmin), float(self.xmax), resolution)
        ys = np.linspace(float(self.ymin), float(self.ymax), resolution)
        gx, gy = np.meshgrid(xs, ys)
        vals = np.zeros_like(gx)
        scale = max(abs(float(c)) for c in f.coeffs.values()) or 1.0
        for (a, b, c), coef in f.coeffs.items():
            vals += (float(coef) / scale) * gx ** a * gy ** b
        pieces = [p for p in contour_generator(xs, ys, vals).lines(0.0) if len(p) > 1]
        self.paths.extend((kind, p) for p in pieces)
        return len(pieces)

    def _map(self, x: float, y: float) -> tuple[float, float]:
        sx = self.width / float(self.xmax - self.xmin)
        return (x - float(self.xmin)) * sx, (float(self.ymax) - y) * sx

    def to_svg(self) -> str:
        height = self.width * float(self.ymax - self.ymin) / float(self.xmax - self.xmin)
        out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width}" '
               f'height="{height:.0f}" viewBox="0 0 {self.width} {height:.2f}">',
               '<rect width="100%" height="100%" fill="white"/>']
        for kind, p, q in self.segments:
            (x1, y1), (x2, y2) = self._map(float(p[0]), float(p[1])), self._map(float(q[0]), float(q[1]))
            out.append(f'<line class="{kind}" x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" '
                       f'y2="{y2:.2f}" {_attrs(STYLES[kind])}/>')
        for kind, pts in self.paths:
            coords = " ".join("{:.2f},{:.2f}".format(*self._map(x, y)) for x, y in pts)
            out.append(f'<polyline class="{kind}" points="{coords}" {_attrs(STYLES[kind])}/>')
        out.append("</svg>")
        return "\n".join(out) + "\n"


def _attrs(style: dict[str, str]) -> str:
    return " ".join(f'{k}="{v}"' for k, v in style.items())


def clip_line(line: LinearForm, box: Sequence[Fraction]):
    """Exact segment of ``a x + b y + c = 0`` inside ``[xmin, xmax] x [ymin, ymax]``."""
    a, b, c = line.coeffs
    xmin, xmax, ymin, ymax = box
    if a == 0 and b == 0:
        return None
    pts = set()
    if b != 0:
        for x in (xmin, xmax):
            y = Fraction(-a * x - c, b)
            if ymin <= y <= ymax:
                pts.add((x, y))
    if a != 0:
        for y in (ymin, ymax):
            x = Fraction(-b * y - c, a)
            if xmin <= x <= xmax:
                pts.add((x, y))
    if len(pts) < 2:
        return None
    pts = sorted(pts)
    return pts[0], pts[-1]


def viewport(a: Arrangement, extra: Sequence = (), pad: Fraction = Fraction(1, 5)):
    """Bounding box of the finite multiple points (and ``extra`` points), padded."""
    pts = [mp.point.coords for mp in intersection_lattice(a).points] + [tuple(p) for p in extra]
    affine = [(Fraction(x) / z, Fraction(y) / z) for x, y, z in pts if z != 0]
    if not affine:
        return Fraction(-1), Fraction(1), Fraction(-1), Fraction(1)
    xs = [p[0] for p in affine]
    ys = [p[1] for p in affine]
    w = max(max(xs) - min(xs), max(ys) - min(ys), Fraction(1))
    return (min(xs) - pad * w, max(xs) + pad * w, min(ys) - pad * w, max(ys) + pad * w)


def chart_matrix(at_infinity: LinearForm) -> list[list[int]]:
    """Coordinate change sending the given line to z = 0.

    The new x and y are coordinate functions completing the line to a basis,
    so the chart z = 1 is the identity.
    """
    units = ([1, 0, 0], [0, 1, 0], [0, 0, 1])
    row = list(at_infinity.coeffs)
    for i in range(3):
        for j in range(i + 1, 3):
            if det3(units[i], units[j], row) != 0:
                return [units[i], units[j], row]
    raise ValueError("degenerate chart line")


def render_arrangement(a: Arrangement, conic: HomPoly | None = None,
                       pascal: LinearForm | None = None, quartic: HomPoly | None = None,
                       width: int = 600, chart: LinearForm | None = None) -> SvgScene:
    """Scene of ``a`` in the chart where ``chart`` (default z) is the line at infinity."""
    chart = chart or LinearForm.of(0, 0, 1)
    m = chart_matrix(chart)
    inv = adjugate(m)
    a = a.transform(m)
    scene = SvgScene(*viewport(a), width=width)
    for line in a.lines:
        scene.add_line("arrangement", line)
    if conic is not None:
        scene.add_curve("conic", conic.substitute(inv))
    if pascal is not None:
        scene.add_line("pascal", Arrangement((pascal,)).transform(m).lines[0])
    if quartic is not None:
        scene.add_curve("quartic", quartic.substitute(inv))
    return scene
