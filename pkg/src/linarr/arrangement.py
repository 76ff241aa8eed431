"""Line arrangements in the projective plane and their intersection lattices."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .linalg import canonical_vector, integer_row
from .poly import HomPoly, LinearForm, product


class ArrangementError(ValueError):
    pass


class DuplicateLineError(ArrangementError):
    pass


class CombinatoricsChangedError(ArrangementError):
    pass


def cross(u: Sequence, v: Sequence) -> tuple:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def det3(a: Sequence, b: Sequence, c: Sequence):
    return sum(x * y for x, y in zip(a, cross(b, c)))


@dataclass(frozen=True, order=True)
class ProjPoint:
    coords: tuple[int, int, int]

    def __post_init__(self):
        c = tuple(canonical_vector(integer_row([Fraction(t) for t in self.coords])))
        if not any(c):
            raise ValueError("the zero vector is not a projective point")
        object.__setattr__(self, "coords", c)

    @classmethod
    def of(cls, *coords) -> "ProjPoint":
        if len(coords) == 1:
            coords = tuple(coords[0])
        return cls(tuple(Fraction(t) for t in coords))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __str__(self):
        return "(" + ":".join(str(t) for t in self.coords) + ")"


def join(p: Sequence, q: Sequence) -> LinearForm:
    """Line through two distinct points."""
    c = cross(tuple(p), tuple(q))
    if not any(c):
        raise ArrangementError(f"points {tuple(p)} and {tuple(q)} coincide")
    return LinearForm.of(c)


def meet(l1: LinearForm | Sequence, l2: LinearForm | Sequence) -> ProjPoint:
    """Intersection point of two distinct lines."""
    c = cross(tuple(l1), tuple(l2))
    if not any(c):
        raise ArrangementError("lines coincide")
    return ProjPoint.of(c)


def collinear(p: Sequence, q: Sequence, r: Sequence) -> bool:
    return det3(tuple(p), tuple(q), tuple(r)) == 0


@dataclass(frozen=True)
class Arrangement:
    lines: tuple[LinearForm, ...]

    def __post_init__(self):
        lines = tuple(l if isinstance(l, LinearForm) else LinearForm.of(l) for l in self.lines)
        if not lines:
            raise ArrangementError("an arrangement needs at least one line")
        seen = set()
        for l in lines:
            if l in seen:
                raise DuplicateLineError(f"line {l} occurs twice")
            seen.add(l)
        object.__setattr__(self, "lines", lines)

    @classmethod
    def of(cls, lines: Iterable) -> "Arrangement":
        return cls(tuple(lines))

    def __len__(self):
        return len(self.lines)

    @property
    def degree(self) -> int:
        return len(self.lines)

    def polynomial(self) -> HomPoly:
        return product(l.poly() for l in self.lines)

    def line_set(self) -> frozenset[LinearForm]:
        return frozenset(self.lines)

    def transform(self, matrix: Sequence[Sequence]) -> "Arrangement":
        """Apply the projective change ``p -> M p`` to every line.

        A line ``l`` becomes ``l M^{-1}``; ``M^{-1}`` is taken up to scalar as
        the adjugate so everything stays integral.
        """
        adj = adjugate(matrix)
        new = []
        for l in self.lines:
            new.append(LinearForm.of([sum(l.coeffs[i] * adj[i][j] for i in range(3))
                                      for j in range(3)]))
        return Arrangement(tuple(new))

    def __str__(self):
        return " * ".join(f"({l})" for l in self.lines)


def adjugate(m: Sequence[Sequence]) -> list[list[Fraction]]:
    m = [[Fraction(a) for a in row] for row in m]
    cols = [[m[i][j] for i in range(3)] for j in range(3)]
    # rows of the adjugate are cross products of columns
    adj = [list(cross(cols[1], cols[2])), list(cross(cols[2], cols[0])),
           list(cross(cols[0], cols[1]))]
    if not any(any(r) for r in adj) or sum(m[0][j] * adj[j][0] for j in range(3)) == 0:
        raise ArrangementError("singular coordinate change")
    return adj


def transform_point(matrix: Sequence[Sequence], p: Sequence) -> ProjPoint:
    return ProjPoint.of([sum(Fraction(matrix[i][j]) * p[j] for j in range(3)) for i in range(3)])


# ---------------------------------------------------------------------------
# lattice


@dataclass(frozen=True)
class MultPoint:
    point: ProjPoint
    multiplicity: int
    lines: tuple[int, ...]


@dataclass(frozen=True)
class Lattice:
    n_lines: int
    points: tuple[MultPoint, ...]

    def multiplicity_counts(self) -> dict[int, int]:
        return dict(sorted(Counter(p.multiplicity for p in self.points).items()))

    def points_of_multiplicity(self, m: int) -> list[MultPoint]:
        return [p for p in self.points if p.multiplicity == m]

    def line_invariant(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(p.multiplicity for p in self.points if i in p.lines))

    def check(self) -> None:
        total = sum(comb(p.multiplicity, 2) for p in self.points)
        if total != comb(self.n_lines, 2):
            raise AssertionError(f"pair count {total} != C({self.n_lines},2)")

    def summary(self) -> dict:
        return {"lines": self.n_lines,
                "points": {str(m): c for m, c in self.multiplicity_counts().items()}}


def intersection_lattice(a: Arrangement) -> Lattice:
    """Multiple points of ``a`` with incident line indices, in sorted point order."""
    incid: dict[ProjPoint, set[int]] = {}
    lines = a.lines
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            p = meet(lines[i], lines[j])
            s = incid.setdefault(p, set())
            s.add(i)
            s.add(j)
    pts = tuple(MultPoint(p, len(s), tuple(sorted(s))) for p, s in sorted(incid.items()))
    lat = Lattice(len(lines), pts)
    lat.check()
    return lat


def total_tjurina(a: Arrangement | Lattice) -> int:
    """Sum of (m-1)^2 over the multiple points: ordinary m-fold points."""
    lat = a if isinstance(a, Lattice) else intersection_lattice(a)
    return sum((p.multiplicity - 1) ** 2 for p in lat.points)


def lattice_isomorphic(l1: Lattice, l2: Lattice) -> tuple[bool, tuple[int, ...] | None]:
    """Unlabelled isomorphism of intersection lattices.

    Looks for a bijection ``sigma`` of line indices carrying every point of
    multiplicity >= 3 of ``l1`` onto one of ``l2`` (double points then match
    automatically). Returns ``(True, sigma)`` with ``sigma[i]`` the image of
    line ``i``, or ``(False, None)``.
    """
    n = l1.n_lines
    if n != l2.n_lines or l1.multiplicity_counts() != l2.multiplicity_counts():
        return False, None
    big1 = [frozenset(p.lines) for p in l1.points if p.multiplicity >= 3]
    big2 = {frozenset(p.lines) for p in l2.points if p.multiplicity >= 3}
    inv1 = [l1.line_invariant(i) for i in range(n)]
    inv2 = [l2.line_invariant(i) for i in range(n)]
    if sorted(inv1) != sorted(inv2):
        return False, None
    # lines of l1 ordered so that heavily constrained ones are placed first
    order = sorted(range(n), key=lambda i: (-len(inv1[i]), inv1[i], i))
    sigma = [-1] * n
    used = [False] * n

    def consistent(upto: int) -> bool:
        placed = set(order[:upto])
        for s in big1:
            if s <= placed:
                if frozenset(sigma[i] for i in s) not in big2:
                    return False
        return True

    def extend(k: int) -> bool:
        if k == n:
            return True
        i = order[k]
        for j in range(n):
            if not used[j] and inv2[j] == inv1[i]:
                sigma[i] = j
                used[j] = True
                if consistent(k + 1) and extend(k + 1):
                    return True
                used[j] = False
                sigma[i] = -1
        return False

    if extend(0):
        # |big1| == |big2| and the map is injective on point sets, so it is onto
        return True, tuple(sigma)
    return False, None


def add_line(a: Arrangement, l: LinearForm | Sequence) -> Arrangement:
    l = l if isinstance(l, LinearForm) else LinearForm.of(l)
    if l in a.line_set():
        raise DuplicateLineError(f"line {l} already in the arrangement")
    return Arrangement(a.lines + (l,))


def move_triple_point(a: Arrangement, p: Sequence, p_new: Sequence) -> Arrangement:
    """Move a triple point, keeping each incident line through its other triple point.

    Every line through ``p`` is replaced by the line joining ``p_new`` with
    the other point of multiplicity >= 3 on it; lines already through
    ``p_new`` are kept. The result must have the same lattice as ``a``.
    """
    p = ProjPoint.of(p)
    p_new = ProjPoint.of(p_new)
    lat = intersection_lattice(a)
    here = [mp for mp in lat.points if mp.point == p]
    if not here or here[0].multiplicity != 3:
        raise ArrangementError(f"{p} is not a triple point of the arrangement")
    if p == p_new:
        return a
    big = [mp for mp in lat.points if mp.multiplicity >= 3 and mp.point != p]
    new_lines = list(a.lines)
    for i in here[0].lines:
        line = a.lines[i]
        if line(p_new.coords) == 0:
            continue
        others = [mp.point for mp in big if i in mp.lines]
        if len(others) != 1:
            raise ArrangementError(
                f"line {line} through {p} carries {len(others)} other multiple points")
        new_lines[i] = join(p_new.coords, others[0].coords)
    try:
        moved = Arrangement(tuple(new_lines))
    except DuplicateLineError as exc:
        raise CombinatoricsChangedError(str(exc)) from exc
    ok, _ = lattice_isomorphic(lat, intersection_lattice(moved))
    if not ok:
        raise CombinatoricsChangedError("moving the point changed the intersection lattice")
    return moved
