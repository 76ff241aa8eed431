from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linarr.builtins import AZ_TEXT, NAMES, builtin
from linarr.parse import ParseError, parse, parse_linear_factors
from linarr.poly import (
    HomPoly, InhomogeneousError, LinearForm, LocalJet, graded_dim, local_jet, monomials, partial,
    product,
)

x, y, z = HomPoly.var("x"), HomPoly.var("y"), HomPoly.var("z")


def test_graded_dim():
    assert graded_dim(8) == 45
    assert graded_dim(4) == 15
    assert graded_dim(0) == 1
    assert graded_dim(-1) == 0
    assert all(len(monomials(k)) == graded_dim(k) for k in range(12))


def test_monomial_order_is_graded_lex():
    assert monomials(2) == ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))


def test_parse_fz_gives_degree_nine():
    f = parse(AZ_TEXT)
    assert f.degree == 9
    assert f == x * y * z * parse("(x+y-z)(x-y+z)(2x-2y+z)(2x-y-2z)(2x+y+z)(2x-y-z)")


def test_parse_conic():
    assert parse("x^2+y^2-z^2") == x * x + y * y - z * z


def test_parse_rejects_inhomogeneous():
    with pytest.raises(InhomogeneousError):
        parse("x + y^2")


@pytest.mark.parametrize("text", ["x+", "(x", "x $ y", "1.5x", "x/y", ""])
def test_parse_errors_carry_position(text):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.position >= 0


def test_parse_variants():
    assert parse("2x-y") == parse("2*x - y")
    assert parse("x**2") == parse("x^2") == x * x
    assert parse("x − y") == x - y
    assert parse("x/2 + y/3") == x * Fraction(1, 2) + y * Fraction(1, 3)


def test_linear_factors():
    fac = parse_linear_factors("3xy(x-y+z)")
    assert fac == [LinearForm.of(1, 0, 0), LinearForm.of(0, 1, 0), LinearForm.of(1, -1, 1)]
    assert parse_linear_factors("x-y-z") == [LinearForm.of(1, -1, -1)]
    assert parse_linear_factors("x^2+y^2-z^2") is None


def test_partials():
    assert partial(x * y * z, "x") == y * z
    assert partial(x * x + y * y - z * z, "z") == z * (-2)


@pytest.mark.parametrize("name", NAMES)
def test_euler_relation(name):
    f = builtin(name).polynomial()
    fx, fy, fz = f.gradient()
    assert x * fx + y * fy + z * fz == f * f.degree


def test_homogeneity_preserved():
    f, g = parse("x^2 - 3yz"), parse("x y + z^2")
    assert (f + g).degree == 2
    assert (f * g).degree == 4
    assert partial(f * g, "y").degree == 3
    with pytest.raises(InhomogeneousError):
        f + x


def test_zero_form_keeps_degree():
    zero = x * 2 - x * 2
    assert zero.is_zero()
    assert zero.degree == 1
    assert HomPoly.zero(5).degree == 5


def _random_form(rng: random.Random, degree: int) -> HomPoly:
    return HomPoly(degree, {m: Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                            for m in monomials(degree) if rng.random() < 0.6})


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32), st.integers(0, 6))
def test_print_parse_round_trip(seed, degree):
    f = _random_form(random.Random(seed), degree)
    if f.is_zero():
        return
    text = str(f)
    g = parse(text)
    assert g == f
    assert str(g) == text


def test_evaluate_and_substitute():
    f = parse("x^2 + y z")
    assert f.evaluate((1, 2, 3)) == 7
    swapped = f.substitute([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert swapped == parse("y^2 + x z")


def test_linear_form_normalization():
    assert LinearForm.of(-2, 4, 0).coeffs == (1, -2, 0)
    assert LinearForm.of(Fraction(1, 2), Fraction(1, 3), 0).coeffs == (3, 2, 0)
    assert LinearForm.of("2y - 4z").coeffs == (0, 1, -2)
    with pytest.raises(ValueError):
        LinearForm.of(0, 0, 0)


def test_local_jet_of_z_at_origin_is_constant():
    jet = local_jet(z, (0, 0, 1), 3)
    assert jet.coeffs == {(0, 0): 1}


def test_local_jet_of_line_through_its_zero():
    jet = local_jet(parse("x+y-z"), (1, 0, 1), 2)
    assert jet.chart == 2
    assert jet.center == (1, 0, 1)
    assert jet.coeffs == {(1, 0): 1, (0, 1): 1}


def test_local_jet_at_triple_point_of_fz():
    f = parse(AZ_TEXT)
    p = (0, 1, 1)
    jet = local_jet(f, p, 4)
    assert all(not any(jet.homogeneous_part(e)) for e in range(3))
    cubic = jet.homogeneous_part(3)
    assert any(cubic)
    # the cubic part is a constant times the product of the three incident lines
    a = builtin("AZ")
    through = [l for l in a.lines if l(p) == 0]
    assert len(through) == 3
    others = product([l.poly() for l in a.lines if l(p) != 0])
    expected = local_jet(product([l.poly() for l in through]), p, 4).homogeneous_part(3)
    scale = others.evaluate(p)
    assert cubic == [scale * c for c in expected]
    # three pairwise non-proportional local factors
    forms = [(l.coeffs[0], l.coeffs[1]) for l in through]
    for i in range(3):
        for j in range(i + 1, 3):
            assert forms[i][0] * forms[j][1] != forms[i][1] * forms[j][0]


@pytest.mark.parametrize("seed", range(10))
def test_local_jet_is_multiplicative(seed):
    rng = random.Random(seed)
    f, g = _random_form(rng, rng.randint(1, 4)), _random_form(rng, rng.randint(1, 4))
    p = rng.choice([(1, 2, 3), (0, 1, 5), (3, 0, 0), (2, -1, 0)])
    order = rng.randint(1, 5)
    assert local_jet(f * g, p, order) == local_jet(f, p, order) * local_jet(g, p, order)


def test_local_jet_truncates():
    jet = LocalJet(2, {(0, 0): 1, (1, 0): 2, (1, 1): 5})
    assert (1, 1) not in jet.coeffs
