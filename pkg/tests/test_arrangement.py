from __future__ import annotations

import random
from math import comb

import pytest

from linarr.arrangement import (
    Arrangement, CombinatoricsChangedError, DuplicateLineError, ProjPoint, add_line, collinear,
    intersection_lattice, join, lattice_isomorphic, meet, move_triple_point, total_tjurina,
)
from linarr.builtins import MOVED_FROM, NAMES, builtin
from linarr.hexagon import Hexagon
from linarr.parse import parse_linear_factors
from linarr.poly import LinearForm
from oracles import random_matrix


def _arr(text: str) -> Arrangement:
    return Arrangement.of(parse_linear_factors(text))


def test_projective_point_normalization():
    assert ProjPoint.of(-2, 4, 0) == ProjPoint.of(1, -2, 0)
    assert ProjPoint.of(0, 0, 3).coords == (0, 0, 1)
    with pytest.raises(ValueError):
        ProjPoint.of(0, 0, 0)


def test_join_and_meet():
    p, q = ProjPoint.of(1, 0, 1), ProjPoint.of(0, 1, 1)
    l = join(p, q)
    assert l(p) == 0 and l(q) == 0
    assert meet(LinearForm.of(1, 0, 0), LinearForm.of(0, 1, 0)) == ProjPoint.of(0, 0, 1)
    assert collinear((1, 0, 1), (0, 1, 1), (2, -1, 1))
    assert not collinear((1, 0, 1), (0, 1, 1), (1, -1, 3))


def test_lattice_of_az():
    lat = intersection_lattice(builtin("AZ"))
    assert lat.multiplicity_counts() == {2: 18, 3: 6}
    assert total_tjurina(lat) == 42


def test_lattice_of_triangle():
    lat = intersection_lattice(builtin("TRIANGLE"))
    assert lat.multiplicity_counts() == {2: 3}
    assert total_tjurina(lat) == 3


def test_generic_hexagon_sides_have_15_nodes():
    h = Hexagon.of([(0, 0, 1), (3, 0, 1), (5, 2, 1), (4, 5, 1), (1, 6, 1), (-2, 3, 1)])
    lat = intersection_lattice(Arrangement(h.sides))
    assert lat.multiplicity_counts() == {2: 15}


@pytest.mark.parametrize("name", NAMES)
def test_pair_count_identity(name):
    lat = intersection_lattice(builtin(name))
    n = lat.n_lines
    assert sum(comb(p.multiplicity, 2) for p in lat.points) == comb(n, 2)
    assert all(p.multiplicity >= 2 for p in lat.points)


@pytest.mark.parametrize("a,b", [("AZ", "AZp"), ("AD", "ADp"), ("BZ", "BZp")])
def test_pairs_share_their_lattice(a, b):
    la, lb = intersection_lattice(builtin(a)), intersection_lattice(builtin(b))
    iso, sigma = lattice_isomorphic(la, lb)
    assert iso
    # the witness maps every multiple point onto one of the same multiplicity
    targets = {frozenset(p.lines): p.multiplicity for p in lb.points}
    for p in la.points:
        assert targets[frozenset(sigma[i] for i in p.lines)] == p.multiplicity
    assert total_tjurina(la) == total_tjurina(lb)


def test_lattice_isomorphism_negative_cases():
    assert lattice_isomorphic(intersection_lattice(builtin("AZ")),
                              intersection_lattice(builtin("TRIANGLE"))) == (False, None)
    assert not lattice_isomorphic(intersection_lattice(builtin("AZ")),
                                  intersection_lattice(builtin("BZ")))[0]
    # four general lines against a pencil of three plus one line
    assert not lattice_isomorphic(intersection_lattice(_arr("xyz(x+y+z)")),
                                  intersection_lattice(_arr("xy(x+y)z")))[0]


def test_lattice_isomorphism_is_an_equivalence_on_the_corpus():
    lats = {n: intersection_lattice(builtin(n)) for n in NAMES}
    iso = {(a, b): lattice_isomorphic(lats[a], lats[b])[0] for a in NAMES for b in NAMES}
    for a in NAMES:
        assert iso[a, a]
        for b in NAMES:
            assert iso[a, b] == iso[b, a]
            for c in NAMES:
                if iso[a, b] and iso[b, c]:
                    assert iso[a, c]
            if iso[a, b]:
                assert lats[a].multiplicity_counts() == lats[b].multiplicity_counts()
                assert total_tjurina(lats[a]) == total_tjurina(lats[b])


def test_isomorphism_found_under_line_relabelling():
    a = builtin("AD")
    rng = random.Random(7)
    lines = list(a.lines)
    rng.shuffle(lines)
    iso, sigma = lattice_isomorphic(intersection_lattice(a), intersection_lattice(Arrangement(tuple(lines))))
    assert iso
    assert sorted(sigma) == list(range(9))


def test_add_line_gives_bz():
    bz = add_line(builtin("AZ"), LinearForm.of("x-y-z"))
    assert bz == builtin("BZ")
    assert intersection_lattice(bz).multiplicity_counts() == {2: 18, 3: 3, 4: 3}


def test_add_generic_line_to_triangle():
    a = add_line(builtin("TRIANGLE"), (1, 1, 1))
    assert intersection_lattice(a).multiplicity_counts() == {2: 6}


def test_add_existing_line_fails():
    with pytest.raises(DuplicateLineError):
        add_line(builtin("AZ"), (1, 0, 0))


def test_move_triple_point_identity():
    assert move_triple_point(builtin("AZ"), MOVED_FROM, MOVED_FROM) == builtin("AZ")


def test_move_to_printed_target_changes_combinatorics():
    # moving to (0:2:1) creates an extra triple point, so the lattice is not preserved
    with pytest.raises(CombinatoricsChangedError):
        move_triple_point(builtin("AZ"), (0, 1, 1), (0, 2, 1))


def test_move_making_replaced_lines_coincide_fails():
    a = builtin("AZ")
    lat = intersection_lattice(a)
    triples = [mp.point for mp in lat.points if mp.multiplicity == 3]
    p = ProjPoint.of(*MOVED_FROM)
    others = [t for t in triples if t != p]
    # a point on the line through two other triple points that both pair with p
    partners = []
    for mp in lat.points:
        if mp.point == p:
            for i in mp.lines:
                partners.extend(t for t in others if a.lines[i](t) == 0)
    q1, q2 = partners[0], partners[1]
    # the two replaced lines through q1 and q2 both become the line q1 q2
    target = next(t for t in (ProjPoint.of(*(u + k * v for u, v in zip(q1.coords, q2.coords)))
                              for k in range(1, 50))
                  if t not in triples and join(q1, q2)(t.coords) == 0)
    with pytest.raises(CombinatoricsChangedError):
        move_triple_point(a, p, target)


@pytest.mark.parametrize("seed", range(5))
def test_lattice_and_tau_invariant_under_coordinate_change(seed):
    rng = random.Random(seed)
    for name in ("AZ", "BZ"):
        a = builtin(name)
        b = a.transform(random_matrix(rng))
        la, lb = intersection_lattice(a), intersection_lattice(b)
        assert lattice_isomorphic(la, lb)[0]
        assert total_tjurina(la) == total_tjurina(lb)


def test_duplicate_lines_rejected():
    with pytest.raises(DuplicateLineError):
        Arrangement.of([(1, 0, 0), (2, 0, 0)])
