from __future__ import annotations

import csv
import io
import random

import pytest

from linarr.search import (
    COLLINEAR_VERTICES, COLUMNS, REPEATED_VERTEX, draw_samples, evaluate, off_conic_vertices,
    on_conic_vertices, parse_vertex, run_search, summarize, to_csv,
)
from linarr.hexagon import six_points_on_conic


def test_on_conic_sampler_lands_on_a_conic():
    rng = random.Random(1)
    for _ in range(50):
        pts = on_conic_vertices(rng)
        assert six_points_on_conic([p.coords for p in pts]).on_conic


def test_off_conic_sampler_is_mostly_off():
    rng = random.Random(2)
    off = sum(not six_points_on_conic([p.coords for p in off_conic_vertices(rng)]).on_conic
              for _ in range(100))
    assert off >= 90


def test_mixed_mode_alternates():
    kinds = [k for k, _ in draw_samples(6, "mixed", 0)]
    assert kinds == ["on-conic", "off-conic"] * 3
    with pytest.raises(ValueError):
        draw_samples(1, "sideways", 0)


def test_same_seed_same_csv():
    a = to_csv(run_search(12, "mixed", seed=5))
    b = to_csv(run_search(12, "mixed", seed=5))
    assert a == b
    assert a != to_csv(run_search(12, "mixed", seed=6))


def test_pool_matches_serial():
    assert to_csv(run_search(8, "mixed", seed=3, jobs=2)) == to_csv(run_search(8, "mixed", seed=3))


def test_csv_schema_and_vertex_cells():
    results = run_search(6, "off-conic", seed=9)
    rows = list(csv.DictReader(io.StringIO(to_csv(results))))
    assert list(rows[0].keys()) == COLUMNS
    for r, res in zip(rows, results):
        assert [parse_vertex(r[f"v{j}"]) for j in range(6)] == res.vertices
        if r["status"] == "ok":
            assert r["mdr"] in {"5", "6"} and r["d0_4"] == "0"
        else:
            assert r["reason"] and r["mdr"] == ""


def test_degenerate_samples_keep_a_reason():
    p = parse_vertex("0:0:1")
    res = evaluate(0, "off-conic", [p] * 6)
    assert res.status == "degenerate" and res.reason == REPEATED_VERTEX
    line = [parse_vertex(f"{t}:0:1") for t in range(3)] + [parse_vertex(c) for c in ("4:5:1", "1:6:1", "-2:3:1")]
    res = evaluate(1, "off-conic", line)
    assert res.reason == COLLINEAR_VERTICES
    assert not res.generic and res.mdr is None


def test_summary_splits_by_conic_position():
    results = run_search(16, "mixed", seed=11)
    s = summarize(results)
    assert s.samples == 16
    assert s.generic + sum(s.degenerate.values()) == 16
    assert set(s.mdr_counts.get("on-conic", {})) <= {5, 6}
    assert set(s.mdr_counts.get("off-conic", {})) <= {5, 6}
    assert s.to_json()["samples"] == 16
