"""Random hexagon experiment: how mdr depends on the position of the vertices.

Every sample is drawn from one seeded generator before any evaluation, so the
CSV is byte-identical for a given seed whether samples run serially or in a
process pool. Degenerate samples are kept as rows with a reason code.
"""

from __future__ import annotations

import csv
import io
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .arrangement import ProjPoint
from .hexagon import (
    DegenerateHexagonError, Hexagon, build_arrangement, six_points_on_conic, tangent_system,
)
from .syzygy import mdr, syzygy_dim

MODES = ("on-conic", "off-conic", "mixed")

COLUMNS = ["index", "mode", "status", "reason", "v0", "v1", "v2", "v3", "v4", "v5",
           "on_conic", "conic_kind", "tangent_rank", "mdr", "d0_4"]

# reason codes for rows that are not evaluated
REPEATED_VERTEX = "repeated-vertex"
COLLINEAR_VERTICES = "collinear-consecutive-vertices"
REPEATED_LINE = "repeated-side-or-diagonal"
NONGENERIC_LATTICE = "nongeneric-lattice"


def _random_matrix(rng: random.Random, bound: int) -> list[list[int]]:
    while True:
        m = [[rng.randint(-bound, bound) for _ in range(3)] for _ in range(3)]
        det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
               - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
               + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        if det:
            return m


def on_conic_vertices(rng: random.Random, bound: int = 6) -> list[ProjPoint]:
    """Six points of a random rational conic: a random projective image of x z = y^2."""
    m = _random_matrix(rng, 2)
    ts = rng.sample(range(-bound, bound + 1), 6)
    pts = []
    for t in ts:
        p = (t * t, t, 1)
        pts.append(ProjPoint.of(*(sum(m[i][j] * p[j] for j in range(3)) for i in range(3))))
    return pts


def off_conic_vertices(rng: random.Random, bound: int = 6) -> list[ProjPoint]:
    """Six affine points with small integer coordinates (chart z = 1)."""
    return [ProjPoint.of(rng.randint(-bound, bound), rng.randint(-bound, bound), 1)
            for _ in range(6)]


def draw_samples(count: int, mode: str, seed: int) -> list[tuple[str, list[ProjPoint]]]:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
    rng = random.Random(seed)
    out = []
    for i in range(count):
        kind = mode if mode != "mixed" else MODES[i % 2]
        pts = on_conic_vertices(rng) if kind == "on-conic" else off_conic_vertices(rng)
        out.append((kind, pts))
    return out


@dataclass
class SampleResult:
    index: int
    mode: str
    vertices: list[ProjPoint]
    status: str = "ok"
    reason: str = ""
    on_conic: bool | None = None
    conic_kind: str = ""
    tangent_rank: int | None = None
    mdr: int | None = None
    d0_4: int | None = None

    @property
    def generic(self) -> bool:
        return self.status == "ok"

    def row(self) -> dict[str, str]:
        def cell(v):
            if v is None:
                return ""
            if isinstance(v, bool):
                return "1" if v else "0"
            return str(v)
        out = {"index": str(self.index), "mode": self.mode, "status": self.status,
               "reason": self.reason, "on_conic": cell(self.on_conic),
               "conic_kind": self.conic_kind, "tangent_rank": cell(self.tangent_rank),
               "mdr": cell(self.mdr), "d0_4": cell(self.d0_4)}
        for j, p in enumerate(self.vertices):
            out[f"v{j}"] = ":".join(str(c) for c in p.coords)
        return out


def evaluate(index: int, mode: str, vertices: list[ProjPoint]) -> SampleResult:
    """Classify one sample and, when its lattice is generic, compute its mdr exactly."""
    res = SampleResult(index, mode, vertices)
    conic = six_points_on_conic([p.coords for p in vertices])
    res.on_conic = conic.on_conic
    res.conic_kind = conic.kind or ""
    try:
        h = Hexagon(tuple(vertices))
    except DegenerateHexagonError as exc:
        res.status = "degenerate"
        res.reason = REPEATED_VERTEX if "distinct" in str(exc) else COLLINEAR_VERTICES
        return res
    try:
        arr, report = build_arrangement(h)
    except DegenerateHexagonError:
        res.status, res.reason = "degenerate", REPEATED_LINE
        return res
    res.tangent_rank = tangent_system(h).rank
    if not report.generic:
        res.status, res.reason = "degenerate", NONGENERIC_LATTICE
        return res
    f = arr.polynomial()
    res.d0_4 = syzygy_dim(f, 4)
    res.mdr = mdr(f)
    return res


def _evaluate_packed(args) -> SampleResult:
    return evaluate(*args)


def run_search(count: int, mode: str = "mixed", seed: int = 0, jobs: int = 1) -> list[SampleResult]:
    samples = draw_samples(count, mode, seed)
    packed = [(i, kind, pts) for i, (kind, pts) in enumerate(samples)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_evaluate_packed, packed, chunksize=4))
    return [_evaluate_packed(p) for p in packed]


def to_csv(results: Iterable[SampleResult]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in results:
        w.writerow(r.row())
    return buf.getvalue()


@dataclass
class SearchSummary:
    samples: int = 0
    generic: int = 0
    degenerate: dict[str, int] = field(default_factory=dict)
    mdr_counts: dict[str, dict[int, int]] = field(default_factory=dict)
    off_conic_mdr5: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"samples": self.samples, "generic": self.generic,
                "degenerate": dict(self.degenerate),
                "mdr_counts": {k: {str(m): n for m, n in v.items()}
                               for k, v in self.mdr_counts.items()},
                "off_conic_mdr5": list(self.off_conic_mdr5)}


def summarize(results: Iterable[SampleResult]) -> SearchSummary:
    s = SearchSummary()
    for r in results:
        s.samples += 1
        if not r.generic:
            s.degenerate[r.reason] = s.degenerate.get(r.reason, 0) + 1
            continue
        s.generic += 1
        key = "on-conic" if r.on_conic else "off-conic"
        counts = s.mdr_counts.setdefault(key, {})
        counts[r.mdr] = counts.get(r.mdr, 0) + 1
        if not r.on_conic and r.mdr == 5:
            s.off_conic_mdr5.append(r.index)
    return s


def parse_vertex(cell: str) -> ProjPoint:
    return ProjPoint.of(*(Fraction(c) for c in cell.split(":")))
