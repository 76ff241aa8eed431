"""Hexagons, Pascal lines and the quartic pencil behind the octic gap element.

Vertices are indexed from 0. Side ``j`` joins vertices ``j`` and ``j+1``,
diagonal ``k`` joins ``k`` and ``k+3``, the opposite-side points are
``sides[k] & sides[k+3]`` and the secondary points ``sides[j] & sides[j+2]``
(all indices mod 6).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .arrangement import (
    Arrangement, ArrangementError, ProjPoint, collinear, det3, intersection_lattice, join, meet,
)
from .linalg import RatMatrix, canonical_vector, kernel_basis, rank
from .poly import HomPoly, LinearForm, chart_of, monomials, product


class DegenerateHexagonError(ArrangementError):
    pass


class ProportionalBranchError(ValueError):
    pass


@dataclass(frozen=True)
class Hexagon:
    vertices: tuple[ProjPoint, ...]

    def __post_init__(self):
        vs = tuple(v if isinstance(v, ProjPoint) else ProjPoint.of(v) for v in self.vertices)
        if len(vs) != 6:
            raise DegenerateHexagonError(f"a hexagon has 6 vertices, got {len(vs)}")
        if len(set(vs)) != 6:
            raise DegenerateHexagonError("vertices are not pairwise distinct")
        for j in range(6):
            if collinear(vs[j - 1], vs[j], vs[(j + 1) % 6]):
                raise DegenerateHexagonError(f"vertices {(j - 1) % 6}, {j}, {(j + 1) % 6} are collinear")
        object.__setattr__(self, "vertices", vs)

    @classmethod
    def of(cls, vertices: Sequence) -> "Hexagon":
        return cls(tuple(ProjPoint.of(v) for v in vertices))

    @property
    def sides(self) -> tuple[LinearForm, ...]:
        v = self.vertices
        return tuple(join(v[j], v[(j + 1) % 6]) for j in range(6))

    @property
    def diagonals(self) -> tuple[LinearForm, ...]:
        v = self.vertices
        return tuple(join(v[k], v[k + 3]) for k in range(3))

    @property
    def opposite_points(self) -> tuple[ProjPoint, ...]:
        s = self.sides
        if any(s[k] == s[k + 3] for k in range(3)):
            raise DegenerateHexagonError("two opposite sides coincide")
        return tuple(meet(s[k], s[k + 3]) for k in range(3))

    @property
    def secondary_points(self) -> tuple[ProjPoint, ...]:
        s = self.sides
        return tuple(meet(s[j], s[(j + 2) % 6]) for j in range(6))

    def rotated(self, shift: int = 1) -> "Hexagon":
        v = self.vertices
        return Hexagon(tuple(v[(j + shift) % 6] for j in range(6)))

    def transformed(self, matrix) -> "Hexagon":
        from .arrangement import transform_point
        return Hexagon(tuple(transform_point(matrix, v) for v in self.vertices))

    def to_json(self) -> dict:
        return {"vertices": [[str(c) for c in v.coords] for v in self.vertices]}


# ---------------------------------------------------------------------------
# conics and Pascal


def veronese_row(p: Sequence) -> list[Fraction]:
    x, y, z = (Fraction(t) for t in p)
    return [x * x, x * y, y * y, x * z, y * z, z * z]


_CONIC_MONOMIALS = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]


@dataclass(frozen=True)
class ConicResult:
    on_conic: bool
    conic: HomPoly | None = None
    kind: str | None = None  # "smooth", "line pair", "double line"
    unique: bool = True


def conic_kind(q: HomPoly) -> str:
    a, b, c, d, e, f = (q.coeffs.get(m, Fraction(0)) for m in _CONIC_MONOMIALS)
    sym = RatMatrix.from_rows([[2 * a, b, d], [b, 2 * c, e], [d, e, 2 * f]])
    return {3: "smooth", 2: "line pair", 1: "double line"}[rank(sym)]


def six_points_on_conic(points: Sequence) -> ConicResult:
    """Whether six points lie on a conic: rank of the 6x6 Veronese matrix <= 5."""
    rows = [veronese_row(tuple(p)) for p in points]
    ker = kernel_basis(RatMatrix.from_rows(rows, 6))
    if not ker:
        return ConicResult(False)
    q = HomPoly(2, dict(zip(_CONIC_MONOMIALS, ker[0]))).canonical()
    return ConicResult(True, q, conic_kind(q), len(ker) == 1)


def pascal_line(h: Hexagon) -> LinearForm | None:
    """Line through the three opposite-side points, or ``None`` if they are not collinear."""
    b = h.opposite_points
    if len(set(b)) < 3:
        raise DegenerateHexagonError("opposite-side intersection points coincide")
    if det3(b[0], b[1], b[2]) != 0:
        return None
    return join(b[0], b[1])


# ---------------------------------------------------------------------------
# arrangement of sides and diagonals


@dataclass
class GenericityReport:
    generic: bool
    counts: dict[int, int]
    extra: list[str]

    def to_json(self) -> dict:
        return {"generic": self.generic, "counts": {str(k): v for k, v in self.counts.items()},
                "extra_incidences": self.extra}


def build_arrangement(h: Hexagon) -> tuple[Arrangement, GenericityReport]:
    """Sides then diagonals, plus a check for exactly 6 triple and 18 double points."""
    lines = h.sides + h.diagonals
    if len(set(lines)) != 9:
        raise DegenerateHexagonError("sides and diagonals are not pairwise distinct")
    a = Arrangement(lines)
    lat = intersection_lattice(a)
    counts = lat.multiplicity_counts()
    verts = set(h.vertices)
    extra = []
    for mp in lat.points:
        expected = 3 if mp.point in verts else 2
        if mp.multiplicity != expected:
            names = ", ".join(str(lines[i]) for i in mp.lines)
            extra.append(f"{mp.point}: multiplicity {mp.multiplicity} on {names}")
    generic = not extra and counts == {2: 18, 3: 6}
    return a, GenericityReport(generic, counts, extra)


def hexagon_decompositions(a: Arrangement) -> list[Hexagon]:
    """All hexagons whose sides and diagonals are the lines of ``a``.

    Each is listed once, starting at its smallest vertex and walking toward the
    smaller neighbour.
    """
    if len(a) != 9:
        return []
    lat = intersection_lattice(a)
    triples = [mp for mp in lat.points if mp.multiplicity == 3]
    if len(triples) != 6:
        return []
    pts = [mp.point for mp in triples]
    edge = {}
    for i in range(9):
        on = [t for t in range(6) if i in triples[t].lines]
        if len(on) != 2:
            return []
        edge[frozenset(on)] = i
    found = []
    for perm in permutations(range(1, 6)):
        cyc = (0,) + perm
        if cyc[1] > cyc[5]:
            continue
        sides = [frozenset((cyc[j], cyc[(j + 1) % 6])) for j in range(6)]
        diags = [frozenset((cyc[k], cyc[k + 3])) for k in range(3)]
        if all(e in edge for e in sides + diags):
            found.append(Hexagon(tuple(pts[t] for t in cyc)))
    return found


def hexagon_from_arrangement(a: Arrangement, diagonals: Sequence) -> Hexagon:
    """The hexagon of ``a`` whose diagonals are the given lines."""
    want = {d if isinstance(d, LinearForm) else LinearForm.of(d) for d in diagonals}
    for hx in hexagon_decompositions(a):
        if set(hx.diagonals) == want:
            return hx
    raise DegenerateHexagonError("no hexagon of the arrangement has these diagonals")


# ---------------------------------------------------------------------------
# quartic pencil and the tangent system


def quartic_basis(h: Hexagon) -> tuple[HomPoly, HomPoly, HomPoly]:
    """Products of four sides: omit sides {0,3}, {1,4}, {2,5} respectively."""
    s = [l.poly() for l in h.sides]
    return (product([s[1], s[2], s[4], s[5]]),
            product([s[0], s[2], s[3], s[5]]),
            product([s[0], s[1], s[3], s[4]]))


def quartics_through(points: Sequence) -> int:
    """Dimension of the space of quartics vanishing at the given points."""
    rows = [[HomPoly(4, {m: 1}).evaluate(tuple(p)) for m in monomials(4)] for p in points]
    return 15 - rank(RatMatrix.from_rows(rows, 15))


def d4_tangent(a1: Sequence, a2: Sequence, a3: Sequence) -> tuple[int, int]:
    """Coefficient of du^dv in d(a1) ^ d(a2 a3), as a primitive binary linear form.

    Each argument is a local linear form ``(p, q)`` meaning ``p u + q v``.
    """
    forms = [tuple(Fraction(t) for t in a) for a in (a1, a2, a3)]
    for i in range(3):
        for j in range(i + 1, 3):
            if forms[i][0] * forms[j][1] - forms[i][1] * forms[j][0] == 0:
                raise ProportionalBranchError("branches are proportional")
    (p1, q1), (p2, q2), (p3, q3) = forms
    # d(a2 a3) = (a2 p3 + a3 p2) du + (a2 q3 + a3 q2) dv
    # du^dv coefficient: p1 (a2 q3 + a3 q2) - q1 (a2 p3 + a3 p2)
    cu = p1 * (p2 * q3 + p3 * q2) - q1 * (2 * p2 * p3)
    cv = p1 * (2 * q2 * q3) - q1 * (q2 * p3 + q3 * p2)
    return tuple(canonical_vector([cu, cv]))


def _local_form(line: LinearForm, chart: int) -> tuple[int, int]:
    others = [k for k in range(3) if k != chart]
    return line.coeffs[others[0]], line.coeffs[others[1]]


def _local_gradient(q: HomPoly, p: ProjPoint) -> tuple[Fraction, Fraction]:
    chart, center = chart_of(p.coords)
    others = [k for k in range(3) if k != chart]
    grad = q.gradient()
    return grad[others[0]].evaluate(center), grad[others[1]].evaluate(center)


@dataclass
class TangentSystem:
    matrix: RatMatrix
    rank: int
    solution: tuple[int, int, int] | None

    def to_json(self) -> dict:
        return {"matrix": [[str(c) for c in self.matrix.row(i)] for i in range(self.matrix.rows)],
                "rank": self.rank,
                "solution": list(self.solution) if self.solution else None}


def tangent_rows(h: Hexagon) -> list[list[Fraction]]:
    """One row per vertex: the quartic's tangent must match the D4 direction.

    At vertex ``j`` the branches are diagonal ``j mod 3`` and sides ``j-1``, ``j``.
    Proportionality of the required direction ``(A, B)`` with the quartic
    gradient ``(q_u, q_v)`` is the 2x2 determinant ``A q_v - B q_u``.
    """
    sides, diags = h.sides, h.diagonals
    basis = quartic_basis(h)
    rows = []
    for j, p in enumerate(h.vertices):
        chart, _ = chart_of(p.coords)
        A, B = d4_tangent(_local_form(diags[j % 3], chart),
                          _local_form(sides[j - 1], chart),
                          _local_form(sides[j], chart))
        row = []
        for q in basis:
            qu, qv = _local_gradient(q, p)
            row.append(A * qv - B * qu)
        rows.append(row)
    return rows


def _normalize_solution(v: Sequence[int]) -> tuple[int, int, int]:
    return tuple(canonical_vector(v))


def tangent_system(h: Hexagon) -> TangentSystem:
    m = RatMatrix.from_rows(tangent_rows(h), 3)
    r = rank(m)
    sol = None
    if r == 2:
        sol = _normalize_solution(kernel_basis(m)[0])
    return TangentSystem(m, r, sol)


def conic_parameter_rows(t: Sequence) -> list[list[Fraction]]:
    """Closed-form rows of the tangent system for vertices ``(t_j : t_j^2 : 1)``.

    Independent of :func:`tangent_rows`; used to cross-check it. The columns
    refer to quartics built from sides written as
    ``(t_j + t_{j+1}) x - y - t_j t_{j+1} z``, which differ from
    :func:`quartic_basis` by one constant per column.
    """
    t1, t2, t3, t4, t5, t6 = (Fraction(s) for s in t)
    return [
        [(t1 - t3) * (t4 - t6), 0, (t1 - t5) * (t2 - t4)],
        [(t2 - t6) * (t3 - t5), (t2 - t4) * (t5 - t1), 0],
        [0, (t3 - t1) * (t4 - t6), (t3 - t5) * (t6 - t2)],
        [(t4 - t6) * (t1 - t3), 0, (t4 - t2) * (t5 - t1)],
        [(t5 - t3) * (t6 - t2), (t5 - t1) * (t2 - t4), 0],
        [0, (t6 - t4) * (t1 - t3), (t6 - t2) * (t3 - t5)],
    ]


def conic_vertex_tangent(t: Sequence) -> tuple[int, int]:
    """Closed-form D4 direction at ``(t_1 : t_1^2 : 1)`` in the chart ``u = x - t_1, v = y - t_1^2``."""
    t1, t2, _, t4, _, t6 = (Fraction(s) for s in t)
    cu = t1 * t2 + t1 * t6 + 2 * t2 * t6 - 2 * t1 * t4 - t2 * t4 - t4 * t6
    cv = -(t2 + t6 - 2 * t4)
    return tuple(canonical_vector([cu, cv]))


@dataclass
class PascalOctic:
    hexagon: Hexagon
    pascal_line: LinearForm
    system: TangentSystem
    quartic: HomPoly
    octic: HomPoly
    certification: dict

    def to_json(self) -> dict:
        return {"hexagon": self.hexagon.to_json(),
                "pascal_line": [str(c) for c in self.pascal_line.coeffs],
                "system": self.system.to_json(),
                "quartic": str(self.quartic),
                "octic": [str(c) for c in self.octic.to_vector()],
                "octic_text": str(self.octic),
                "certification": self.certification}


class NoOcticError(ValueError):
    pass


def pascal_octic(h: Hexagon) -> PascalOctic:
    """Pascal line times diagonals times the quartic singled out by the tangent system."""
    from .singular import certify_gap

    line = pascal_line(h)
    if line is None:
        raise NoOcticError("opposite-side points are not collinear")
    ts = tangent_system(h)
    if ts.solution is None:
        raise NoOcticError(f"tangent system has rank {ts.rank}")
    q1, q2, q3 = quartic_basis(h)
    c1, c2, c3 = ts.solution
    q = (q1 * c1 + q2 * c2 + q3 * c3).canonical()
    octic = product([line.poly()] + [d.poly() for d in h.diagonals] + [q]).canonical()
    arr, _ = build_arrangement(h)
    cert = certify_gap(arr, octic)
    return PascalOctic(h, line, ts, q, octic, cert)
