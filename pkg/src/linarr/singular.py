"""Saturated Jacobian ideal of a line arrangement through local jet conditions.

At an ordinary m-fold point the curve is locally ``g = a_1 ... a_m`` (a
product of the incident lines in affine coordinates centred at the point)
times a unit, so the local Tjurina ideal is ``(g_u, g_v)``. That ideal is
homogeneous and contains every monomial of degree ``2m - 3``, hence the
membership of a form ``h`` only depends on its jet below that order and can
be tested degree by degree. Each point contributes ``(m-1)^2`` linear
functionals on ``S_k``; their common kernel is ``I_k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arrangement import Arrangement, Lattice, MultPoint, intersection_lattice, total_tjurina
from .linalg import RowSpace, canonical_vector, echelon, integer_row, kernel_basis
from .poly import HomPoly, chart_of, graded_dim, monomial_jet, monomials
from .syzygy import mdr as compute_mdr


class NonOrdinaryPointError(ValueError):
    pass


def truncation_order(m: int) -> int:
    return max(1, 2 * m - 3)


def _binary_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    """Product of binary forms given by coefficients of u^e, u^(e-1)v, ..., v^e."""
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def local_branches(mp: MultPoint, a: Arrangement) -> tuple[int, list[list[Fraction]]]:
    """Chart and the incident lines as binary linear forms [coef u, coef v]."""
    chart, _ = chart_of(mp.point.coords)
    others = [k for k in range(3) if k != chart]
    branches = []
    for i in mp.lines:
        c = a.lines[i].coeffs
        branches.append([Fraction(c[others[0]]), Fraction(c[others[1]])])
    return chart, branches


def _jacobian_pieces(branches: list[list[Fraction]]) -> tuple[list[Fraction], list[Fraction]]:
    g = [Fraction(1)]
    for b in branches:
        g = _binary_mul(g, b)
    m = len(g) - 1
    # g = sum g[j] u^(m-j) v^j
    gu = [g[j] * (m - j) for j in range(m)]
    gv = [g[j + 1] * (j + 1) for j in range(m)]
    return gu, gv


def local_annihilators(branches: list[list[Fraction]],
                       order: int | None = None) -> list[tuple[int, list[int]]]:
    """Functionals ``(e, lambda)`` on degree-e binary forms killing (g_u, g_v)_e.

    Their joint kernel on jets of order ``2m - 3`` is exactly the local
    Jacobian ideal; a larger ``order`` must add nothing. Raises if the count
    is not (m-1)^2.
    """
    m = len(branches)
    for i in range(m):
        for j in range(i + 1, m):
            bi, bj = branches[i], branches[j]
            if bi[0] * bj[1] - bi[1] * bj[0] == 0:
                raise NonOrdinaryPointError("two incident lines share a tangent")
    n = truncation_order(m) if order is None else order
    gu, gv = _jacobian_pieces(branches) if m >= 2 else ([], [])
    out = []
    for e in range(n):
        span = []
        s = e - (m - 1)
        if s >= 0 and m >= 2:
            for i in range(s + 1):
                mono = [Fraction(0)] * (s + 1)
                mono[i] = Fraction(1)
                span.append(_binary_mul(mono, gu))
                span.append(_binary_mul(mono, gv))
        if span:
            for lam in kernel_basis(([integer_row(r) for r in span], e + 1)):
                out.append((e, lam))
        else:
            for j in range(e + 1):
                out.append((e, [int(i == j) for i in range(e + 1)]))
    if len(out) != (m - 1) ** 2:
        raise AssertionError(f"{len(out)} local conditions at an ordinary {m}-fold point")
    return out


def local_conditions(mp: MultPoint, a: Arrangement, k: int) -> list[list[Fraction]]:
    """Rows (functionals on S_k in monomial order) for membership in I at ``mp``."""
    chart, center = chart_of(mp.point.coords)
    _, branches = local_branches(mp, a)
    ann = local_annihilators(branches)
    n = truncation_order(mp.multiplicity)
    jets = [monomial_jet(mono, chart, center, n) for mono in monomials(k)]
    rows = []
    for e, lam in ann:
        row = []
        for jet in jets:
            s = Fraction(0)
            for j, c in enumerate(lam):
                if c:
                    t = jet.get((e - j, j))
                    if t:
                        s += c * t
            row.append(s)
        rows.append(row)
    return rows


@dataclass
class ConditionMatrix:
    degree: int
    rows: list[list[Fraction]]
    groups: list[tuple[str, int, int]]  # (point, multiplicity, row count)

    @property
    def cols(self) -> int:
        return graded_dim(self.degree)

    def rank(self) -> int:
        return len(echelon([integer_row(r) for r in self.rows], self.cols)[0])

    def annihilates(self, h: HomPoly) -> bool:
        v = h.to_vector()
        return all(sum(a * b for a, b in zip(r, v)) == 0 for r in self.rows)


def condition_matrix(a: Arrangement, k: int, lattice: Lattice | None = None) -> ConditionMatrix:
    lat = lattice or intersection_lattice(a)
    rows, groups = [], []
    for mp in lat.points:
        r = local_conditions(mp, a, k)
        rows.extend(r)
        groups.append((str(mp.point), mp.multiplicity, len(r)))
    return ConditionMatrix(k, rows, groups)


def jacobian_rows(f: HomPoly, k: int) -> list[list[Fraction]]:
    """Spanning set of J_k: monomials of degree k-d+1 times each partial."""
    s = k - (f.degree - 1)
    if s < 0:
        return []
    grad = f.gradient()
    return [(HomPoly(s, {mono: 1}) * g).to_vector() for g in grad for mono in monomials(s)]


def jacobian_space(f: HomPoly, k: int) -> RowSpace:
    return RowSpace(graded_dim(k), jacobian_rows(f, k))


def ideal_basis(a: Arrangement, k: int, lattice: Lattice | None = None) -> list[list[int]]:
    """Basis of I_k as coefficient vectors."""
    cm = condition_matrix(a, k, lattice)
    if not cm.rows:
        return [[int(i == j) for i in range(cm.cols)] for j in range(cm.cols)]
    return kernel_basis(([integer_row(r) for r in cm.rows], cm.cols))


def ideal_dim(a: Arrangement, k: int, lattice: Lattice | None = None) -> tuple[int, int]:
    """``(dim I_k, dim J_k)``."""
    cm = condition_matrix(a, k, lattice)
    dim_i = cm.cols - cm.rank()
    dim_j = jacobian_space(a.polynomial(), k).dim
    return dim_i, dim_j


@dataclass
class DefectReport:
    tau: int
    d: int
    mdr: int
    dim_I: list[int]
    dim_J: list[int]
    quotient: list[int]
    defects: list[int]

    @property
    def threshold(self) -> int:
        return 2 * self.d - 5 - self.mdr

    def consistent_with_threshold(self) -> bool:
        """defect_k = 0 exactly when k > 2d - 5 - r."""
        return all((df == 0) == (k > self.threshold) for k, df in enumerate(self.defects))

    def to_json(self) -> dict:
        return {"tau": self.tau, "d": self.d, "mdr": self.mdr, "threshold": self.threshold,
                "dim_I": self.dim_I, "dim_J": self.dim_J, "quotient": self.quotient,
                "defects": self.defects}

    @classmethod
    def from_json(cls, data: dict) -> "DefectReport":
        return cls(data["tau"], data["d"], data["mdr"], list(data["dim_I"]),
                   list(data["dim_J"]), list(data["quotient"]), list(data["defects"]))

    def __eq__(self, other):
        return isinstance(other, DefectReport) and self.to_json() == other.to_json()


def defect_sequence(a: Arrangement, top: int | None = None, r: int | None = None) -> DefectReport:
    """defect_k = tau - dim S_k/I_k for k = 0..top (default 2d)."""
    lat = intersection_lattice(a)
    tau = total_tjurina(lat)
    d = a.degree
    f = a.polynomial()
    top = 2 * d if top is None else top
    r = compute_mdr(f) if r is None else r
    dim_i, dim_j, quot, defects = [], [], [], []
    for k in range(top + 1):
        cm = condition_matrix(a, k, lat)
        rk = cm.rank()
        dim_i.append(cm.cols - rk)
        dim_j.append(jacobian_space(f, k).dim)
        quot.append(rk)
        defects.append(tau - rk)
    if top >= 2 * d and quot[-1] != tau:
        raise AssertionError(f"dim S_k/I_k stabilized at {quot[-1]}, lattice gives tau={tau}")
    return DefectReport(tau, d, r, dim_i, dim_j, quot, defects)


@dataclass
class GapCertificate:
    degree: int
    h: HomPoly
    jacobian_basis: list[list[int]]
    transcript: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"degree": self.degree,
                "h": [str(c) for c in self.h.to_vector()],
                "h_text": str(self.h),
                "jacobian_basis": [[str(c) for c in row] for row in self.jacobian_basis],
                "transcript": self.transcript}

    @classmethod
    def from_json(cls, data: dict) -> "GapCertificate":
        from .linalg import parse_rational
        k = data["degree"]
        h = HomPoly.from_vector(k, [parse_rational(c) for c in data["h"]])
        basis = [[int(c) for c in row] for row in data["jacobian_basis"]]
        return cls(k, h, basis, dict(data.get("transcript", {})))

    def __eq__(self, other):
        return isinstance(other, GapCertificate) and self.to_json() == other.to_json()


def certify_gap(a: Arrangement, h: HomPoly, lattice: Lattice | None = None) -> dict:
    """Check ``h`` in I_k (every local condition) and not in J_k (rank test)."""
    k = h.degree
    lat = lattice or intersection_lattice(a)
    per_point = []
    ok_local = True
    for mp in lat.points:
        rows = local_conditions(mp, a, k)
        v = h.to_vector()
        good = all(sum(x * y for x, y in zip(r, v)) == 0 for r in rows)
        ok_local &= good
        per_point.append({"point": str(mp.point), "m": mp.multiplicity, "in_local_ideal": good})
    jac = jacobian_space(a.polynomial(), k)
    outside = not jac.contains(h.to_vector())
    return {"local_membership": per_point, "in_I": ok_local, "dim_J": jac.dim,
            "rank_J_plus_h": jac.dim + (1 if outside else 0), "not_in_J": outside,
            "certified": ok_local and outside}


def gap_certificate(a: Arrangement, k: int) -> GapCertificate | None:
    """A certified element of I_k outside J_k, or ``None`` when I_k = J_k.

    The representative is the first basis vector of I_k that survives
    reduction modulo the reduced echelon basis of J_k, reduced and made
    primitive.
    """
    lat = intersection_lattice(a)
    f = a.polynomial()
    jac = jacobian_space(f, k)
    for v in ideal_basis(a, k, lat):
        rem = jac.reduce(v)
        if any(rem):
            h = HomPoly.from_vector(k, canonical_vector(rem))
            transcript = certify_gap(a, h, lat)
            if not transcript["certified"]:
                raise AssertionError("gap representative failed its own certification")
            return GapCertificate(k, h, [list(r) for r in jac.rows], transcript)
    return None


def congruent_mod_jacobian(f: HomPoly, h1: HomPoly, h2: HomPoly) -> bool:
    """``h1 = c h2 + j`` with ``c != 0`` and ``j`` in J, both outside J."""
    if h1.degree != h2.degree:
        return False
    jac = jacobian_space(f, h1.degree)
    r1, r2 = jac.reduce(h1.to_vector()), jac.reduce(h2.to_vector())
    if not any(r1) or not any(r2):
        return False
    return canonical_vector(r1) == canonical_vector(r2)
