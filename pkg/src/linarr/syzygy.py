"""Jacobian syzygies ``a f_x + b f_y + c f_z = 0`` computed degree by degree."""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .linalg import kernel_from_rref, sparse_echelon
from .modular import nullity, rank_mod
from .poly import HomPoly, graded_dim, monomial_index, monomials


def _syzygy_rows(f: HomPoly, k: int) -> list[dict[int, int]]:
    """Sparse integer matrix of S_k^3 -> S_{k+d-1}; rows are target monomials."""
    grad = f.gradient()
    src = monomials(k)
    tgt = monomial_index(k + f.degree - 1)
    n = len(src)
    rows: list[dict[int, int]] = [{} for _ in range(len(tgt))]
    den = 1
    for g in grad:
        for c in g.coeffs.values():
            den = lcm(den, c.denominator)
    for slot, g in enumerate(grad):
        terms = [(m, int(c * den)) for m, c in g.coeffs.items()]
        for j, (a, b, e) in enumerate(src):
            col = slot * n + j
            for (a2, b2, e2), c in terms:
                row = rows[tgt[(a + a2, b + b2, e + e2)]]
                row[col] = row.get(col, 0) + c
    return rows


def syzygy_dim(f: HomPoly, k: int) -> int:
    if k < 0:
        return 0
    return nullity(_syzygy_rows(f, k), 3 * graded_dim(k))


def syzygy_space(f: HomPoly, k: int) -> list[tuple[HomPoly, HomPoly, HomPoly]]:
    """Basis of D_0(f)_k as triples of degree-k forms."""
    if k < 0:
        return []
    return [_split(v, k) for v in _kernel(_syzygy_rows(f, k), 3 * graded_dim(k))[0]]


def _kernel(rows: list[dict[int, int]], n: int) -> tuple[list[list[int]], list[int]]:
    """Reduced-echelon kernel basis and its free columns.

    Full rank modulo a prime settles the zero case without exact work.
    """
    if rank_mod(rows, n) == n:
        return [], []
    rref, piv = sparse_echelon(rows, reduced=True)
    pivot_set = set(piv)
    return kernel_from_rref(rref, piv, n), [j for j in range(n) if j not in pivot_set]


def _split(v, k: int) -> tuple[HomPoly, HomPoly, HomPoly]:
    n = graded_dim(k)
    return tuple(HomPoly.from_vector(k, v[s * n:(s + 1) * n]) for s in range(3))


def apply_syzygy(f: HomPoly, rho) -> HomPoly:
    fx, fy, fz = f.gradient()
    a, b, c = rho
    return a * fx + b * fy + c * fz


def mdr(f: HomPoly) -> int:
    """Least k with a nonzero Jacobian syzygy of degree k.

    Stops at ``d - 1`` at the latest, where the Koszul syzygy
    ``(f_y, -f_x, 0)`` lives.
    """
    for k in range(0, f.degree):
        if syzygy_dim(f, k):
            return k
    raise AssertionError("no syzygy up to degree d-1; f is not reduced")


@dataclass
class SyzygyProfile:
    d: int
    dims: list[int]
    generators: list[int]
    mdr: int
    free: bool
    cap: int = 0

    def to_json(self) -> dict:
        return {"d": self.d, "dims": list(self.dims), "generators": list(self.generators),
                "mdr": self.mdr, "free": self.free}

    @classmethod
    def from_json(cls, data: dict) -> "SyzygyProfile":
        return cls(d=data["d"], dims=list(data["dims"]), generators=list(data["generators"]),
                   mdr=data["mdr"], free=data["free"], cap=len(data["dims"]) - 1)

    @property
    def m(self) -> int:
        return len(self.generators)


def _shift(v: list[int], k: int, var: int) -> list[int]:
    """Multiply a syzygy vector of degree k by x, y or z."""
    src = monomials(k)
    tgt = monomial_index(k + 1)
    n, n1 = len(src), len(tgt)
    out = [0] * (3 * n1)
    for s in range(3):
        for j, m in enumerate(src):
            c = v[s * n + j]
            if c:
                e = list(m)
                e[var] += 1
                out[s * n1 + tgt[tuple(e)]] = c
    return out


def minimal_generator_degrees(f: HomPoly, cap: int | None = None) -> SyzygyProfile:
    """Degrees of a minimal generating set of D_0(f) found up to ``cap``.

    New generators in degree k number ``dim D_k - dim S_1 D_{k-1}`` (graded
    Nakayama). An element of D_k is determined by its coordinates on the free
    columns of the reduced echelon form, so the image rank is taken there.
    Default cap is ``2d - 3`` (at least ``d - 1``).
    """
    d = f.degree
    if cap is None:
        cap = max(2 * d - 3, d - 1)
    if cap < d - 1:
        raise ValueError(f"cap {cap} below d-1 = {d - 1}")
    dims: list[int] = []
    gens: list[int] = []
    prev: list[list[int]] = []
    for k in range(cap + 1):
        n = 3 * graded_dim(k)
        basis, free = _kernel(_syzygy_rows(f, k), n)
        dim_k = len(basis)
        dims.append(dim_k)
        if dim_k == 0:
            prev = []
            continue
        image = 0
        if prev:
            shifted = []
            for v in prev:
                for var in range(3):
                    w = _shift(v, k - 1, var)
                    shifted.append({i: w[j] for i, j in enumerate(free) if w[j]})
            image = len(sparse_echelon(shifted)[0])
        gens.extend([k] * (dim_k - image))
        prev = basis if k < cap else []
    r = next(k for k, v in enumerate(dims) if v)
    free_module = False
    if len(gens) == 2:
        d1, d2 = gens
        free_module = d1 + d2 == d - 1 and all(
            dims[k] == graded_dim(k - d1) + graded_dim(k - d2) for k in range(cap + 1))
    return SyzygyProfile(d=d, dims=dims, generators=gens, mdr=r, free=free_module, cap=cap)
