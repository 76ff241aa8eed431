"""Homogeneous polynomials in x, y, z with rational coefficients.

Monomials are exponent triples ``(a, b, c)`` for ``x^a y^b z^c``. The
canonical order is graded-lexicographic with x > y > z, which inside one
degree means descending ``a`` and then descending ``b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence

from .linalg import canonical_vector, integer_row

VARS = ("x", "y", "z")
Monomial = tuple[int, int, int]


def graded_dim(k: int) -> int:
    """Dimension of the space of degree-k forms in three variables."""
    if k < 0:
        return 0
    return (k + 1) * (k + 2) // 2


@lru_cache(maxsize=None)
def monomials(k: int) -> tuple[Monomial, ...]:
    if k < 0:
        return ()
    return tuple((a, b, k - a - b) for a in range(k, -1, -1) for b in range(k - a, -1, -1))


@lru_cache(maxsize=None)
def monomial_index(k: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(monomials(k))}


class InhomogeneousError(ValueError):
    def __init__(self, deg1: int, deg2: int):
        super().__init__(f"inhomogeneous polynomial: terms of degree {deg1} and {deg2}")
        self.degrees = (deg1, deg2)


@dataclass(frozen=True)
class HomPoly:
    """A form of fixed degree. The zero form keeps its degree tag."""

    degree: int
    coeffs: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for m, c in self.coeffs.items():
            if sum(m) != self.degree:
                raise InhomogeneousError(self.degree, sum(m))
            c = Fraction(c)
            if c:
                clean[tuple(m)] = c
        object.__setattr__(self, "coeffs", clean)

    # construction ------------------------------------------------------

    @classmethod
    def zero(cls, degree: int) -> "HomPoly":
        return cls(degree, {})

    @classmethod
    def var(cls, name: str) -> "HomPoly":
        e = [0, 0, 0]
        e[VARS.index(name)] = 1
        return cls(1, {tuple(e): Fraction(1)})

    @classmethod
    def constant(cls, c) -> "HomPoly":
        return cls(0, {(0, 0, 0): Fraction(c)})

    @classmethod
    def linear(cls, a, b, c) -> "HomPoly":
        return cls(1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    @classmethod
    def from_vector(cls, degree: int, vec: Sequence) -> "HomPoly":
        mons = monomials(degree)
        if len(vec) != len(mons):
            raise ValueError(f"expected {len(mons)} coefficients, got {len(vec)}")
        return cls(degree, {m: Fraction(c) for m, c in zip(mons, vec) if c})

    # inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_vector(self) -> list[Fraction]:
        return [self.coeffs.get(m, Fraction(0)) for m in monomials(self.degree)]

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        idx = monomial_index(self.degree)
        return sorted(self.coeffs.items(), key=lambda t: idx[t[0]])

    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    # arithmetic ------------------------------------------------------------

    def __add__(self, other: "HomPoly") -> "HomPoly":
        if other.degree != self.degree:
            if other.is_zero():
                return self
            if self.is_zero():
                return other
            raise InhomogeneousError(self.degree, other.degree)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return HomPoly(self.degree, out)

    def __neg__(self) -> "HomPoly":
        return HomPoly(self.degree, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other: "HomPoly") -> "HomPoly":
        return self + (-other)

    def __mul__(self, other) -> "HomPoly":
        if not isinstance(other, HomPoly):
            c = Fraction(other)
            return HomPoly(self.degree, {m: c * v for m, v in self.coeffs.items()})
        out: dict[Monomial, Fraction] = {}
        for (a1, b1, c1), u in self.coeffs.items():
            for (a2, b2, c2), v in other.coeffs.items():
                m = (a1 + a2, b1 + b2, c1 + c2)
                out[m] = out.get(m, 0) + u * v
        return HomPoly(self.degree + other.degree, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "HomPoly":
        out = HomPoly.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def partial(self, var: str) -> "HomPoly":
        i = VARS.index(var)
        if self.degree == 0:
            return HomPoly.zero(0)
        out = {}
        for m, c in self.coeffs.items():
            if m[i]:
                e = list(m)
                e[i] -= 1
                out[tuple(e)] = c * m[i]
        return HomPoly(self.degree - 1, out)

    def gradient(self) -> tuple["HomPoly", "HomPoly", "HomPoly"]:
        return self.partial("x"), self.partial("y"), self.partial("z")

    def __call__(self, x, y, z) -> Fraction:
        return self.evaluate((x, y, z))

    def evaluate(self, p: Sequence) -> Fraction:
        x, y, z = (Fraction(t) for t in p)
        return sum((c * x ** a * y ** b * z ** e for (a, b, e), c in self.coeffs.items()),
                   Fraction(0))

    def substitute(self, matrix: Sequence[Sequence]) -> "HomPoly":
        """Compose with the linear substitution ``v -> matrix @ v``."""
        lin = [HomPoly.linear(*row) for row in matrix]
        out = HomPoly.zero(self.degree)
        for (a, b, c), v in self.coeffs.items():
            out = out + (lin[0] ** a) * (lin[1] ** b) * (lin[2] ** c) * v
        return out

    def canonical(self) -> "HomPoly":
        """Primitive integer coefficients, first (graded-lex) coefficient positive."""
        if self.is_zero():
            return self
        return HomPoly.from_vector(self.degree, canonical_vector(self.to_vector()))

    def __repr__(self):
        return f"HomPoly({self.degree}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def partial(f: HomPoly, var: str) -> HomPoly:
    return f.partial(var)


def product(polys: Iterable[HomPoly]) -> HomPoly:
    out = HomPoly.constant(1)
    for p in polys:
        out = out * p
    return out


def _format_monomial(m: Monomial) -> str:
    parts = []
    for name, e in zip(VARS, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: HomPoly) -> str:
    """Canonical text: graded-lex order, explicit ``*`` and ``^``."""
    if f.is_zero():
        return "0"
    out = []
    for m, c in f.terms():
        mono = _format_monomial(m)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if mono and a == 1:
            body = mono
        elif mono:
            body = f"{a}*{mono}"
        else:
            body = str(a)
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


# ---------------------------------------------------------------------------
# linear forms


@dataclass(frozen=True)
class LinearForm:
    """Normalized linear form: primitive integers, first nonzero positive."""

    coeffs: tuple[int, int, int]

    def __post_init__(self):
        c = tuple(canonical_vector(self.coeffs))
        if not any(c):
            raise ValueError("linear form with all coefficients zero")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def of(cls, a, b=None, c=None) -> "LinearForm":
        if isinstance(a, str):
            from .parse import parse
            a = parse(a)
        if isinstance(a, HomPoly):
            if a.degree != 1:
                raise ValueError(f"degree {a.degree} form is not linear")
            return cls(tuple(integer_row(a.to_vector())))
        if b is None:
            a, b, c = a
        return cls(tuple(integer_row((Fraction(a), Fraction(b), Fraction(c)))))

    def poly(self) -> HomPoly:
        return HomPoly.linear(*self.coeffs)

    def __call__(self, p: Sequence) -> Fraction:
        a, b, c = self.coeffs
        return a * Fraction(p[0]) + b * Fraction(p[1]) + c * Fraction(p[2])

    def __str__(self):
        return format_poly(self.poly())

    def __iter__(self):
        return iter(self.coeffs)


# ---------------------------------------------------------------------------
# local jets


@dataclass(frozen=True)
class LocalJet:
    """Polynomial in local coordinates (u, v) truncated below total degree ``order``.

    ``chart`` is the index of the homogeneous coordinate set to 1; ``local_vars``
    names the coordinates that became u and v, and ``center`` is the point in
    that chart.
    """

    order: int
    coeffs: Mapping[tuple[int, int], Fraction]
    chart: int = 2
    center: tuple[Fraction, Fraction, Fraction] = (Fraction(0), Fraction(0), Fraction(1))

    def __post_init__(self):
        clean = {}
        for (i, j), c in self.coeffs.items():
            if i + j >= self.order:
                continue
            c = Fraction(c)
            if c:
                clean[(i, j)] = c
        object.__setattr__(self, "coeffs", clean)

    @property
    def local_vars(self) -> tuple[str, str]:
        rest = [v for k, v in enumerate(VARS) if k != self.chart]
        return rest[0], rest[1]

    def homogeneous_part(self, e: int) -> list[Fraction]:
        """Coefficients of ``u^e, u^(e-1) v, ..., v^e``."""
        return [self.coeffs.get((e - j, j), Fraction(0)) for j in range(e + 1)]

    def __mul__(self, other: "LocalJet") -> "LocalJet":
        n = min(self.order, other.order)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), a in self.coeffs.items():
            for (i2, j2), b in other.coeffs.items():
                if i1 + i2 + j1 + j2 < n:
                    key = (i1 + i2, j1 + j2)
                    out[key] = out.get(key, 0) + a * b
        return LocalJet(n, out, self.chart, self.center)

    def __eq__(self, other):
        if not isinstance(other, LocalJet):
            return NotImplemented
        return (self.order, self.coeffs, self.chart) == (other.order, other.coeffs, other.chart)

    def __hash__(self):
        return hash((self.order, frozenset(self.coeffs.items()), self.chart))


def chart_of(p: Sequence) -> tuple[int, tuple[Fraction, Fraction, Fraction]]:
    """Chart index (largest-index nonzero coordinate) and the point scaled into it."""
    p = [Fraction(t) for t in p]
    for k in (2, 1, 0):
        if p[k]:
            s = p[k]
            return k, tuple(t / s for t in p)
    raise ValueError("the zero vector is not a projective point")


def _binomial_row(base: Fraction, e: int, order: int) -> list[Fraction]:
    """Coefficients of (base + w)^e in w, truncated below ``order``."""
    return [comb(e, i) * base ** (e - i) for i in range(min(e, order - 1) + 1)]


def monomial_jet(m: Monomial, chart: int, center: Sequence[Fraction], order: int) -> dict:
    others = [k for k in range(3) if k != chart]
    ru = _binomial_row(center[others[0]], m[others[0]], order)
    rv = _binomial_row(center[others[1]], m[others[1]], order)
    out = {}
    for i, a in enumerate(ru):
        if not a:
            continue
        for j, b in enumerate(rv):
            if i + j >= order:
                break
            if b:
                out[(i, j)] = a * b
    return out


def local_jet(f: HomPoly, p: Sequence, order: int) -> LocalJet:
    """Expand ``f`` around ``p`` in the affine chart where ``p`` is finite.

    The chart sets the largest-index nonzero coordinate of ``p`` to 1 (z, then
    y, then x); the other two coordinates become ``center + (u, v)``.
    """
    chart, center = chart_of(p)
    out: dict[tuple[int, int], Fraction] = {}
    for m, c in f.coeffs.items():
        for key, v in monomial_jet(m, chart, center, order).items():
            out[key] = out.get(key, 0) + c * v
    return LocalJet(order, out, chart, center)
