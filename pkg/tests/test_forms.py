from fractions import Fraction

from hypothesis import given, settings, strategies as st
import pytest

from unexpected_curves.forms import (
    BinaryForm, Polynomial, ProjPoint, TernaryForm, X, Y, Z, binary_gcd, cross, divides,
    monomials, parse_form, veronese,
)
from unexpected_curves.fixtures import b3_k1, instantiate_curve
from unexpected_curves.scalars import root_of_unity


def test_monomial_order():
    assert monomials(2) == ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
    assert len(monomials(5)) == 21


def test_derivatives():
    assert (X**3).diff("x") == (X**2).scale(3)
    assert (X * Y * Z).diff(1) == X * Z
    f = X * Y * Z * (X + Y + Z)
    fx, fy, fz = f.gradient()
    assert X * fx + Y * fy + Z * fz == f.scale(4)


def test_evaluate():
    assert not (X**2 - Y**2).evaluate((1, 1, 0))
    w = root_of_unity(3)
    assert (X + Y.scale(w)).evaluate((1, w * w, 0)) == 2
    f = X * Y * Z * (X**2 - Y**2) * (X**2 - Z**2) * (Y**2 - Z**2)
    assert not f.evaluate((1, 1, 1))


def test_substitute_linear():
    assert (X**2).substitute_linear(Y, X, Z) == Y**2
    al, be, ga = 0, 0, 1
    q = (Z.scale(be) - Y.scale(ga), X.scale(ga) - Z.scale(al), Y.scale(al) - X.scale(be))
    assert X.substitute_linear(*q) == -Y
    s = X + Y + Z
    assert s.substitute_linear(X, Y, Z) == s


def test_restrict_to_line():
    assert X.restrict_to_line((1, 0, 0), (0, 1, 0)) == BinaryForm({(1, 0): 1}, 1)
    assert not (X**2 - Y**2).restrict_to_line((1, 1, 0), (0, 0, 1))
    with pytest.raises(ValueError):
        X.restrict_to_line((1, 2, 3), (2, 4, 6))


def test_restriction_of_b3_agrees_with_evaluation(b3_arr):
    p0, p1 = (1, 3, -2), (2, -1, 5)
    r = b3_arr.f.restrict_to_line(p0, p1)
    assert r.degree == 9 and r
    for lam, mu in [(1, 0), (0, 1), (2, 3), (-1, 4), (5, -7), (3, 3), (1, -2), (4, 1), (-3, -5), (7, 2)]:
        pt = tuple(lam * a + mu * b for a, b in zip(p0, p1))
        assert r.evaluate(lam, mu) == b3_arr.f.evaluate(pt)


def test_multiplicity():
    assert (X**2 * Y).multiplicity_at((0, 0, 1)) == 3
    assert (X**2 * Y).multiplicity_at((0, 1, 0)) == 2
    assert (X**2 * Y).multiplicity_at((1, 1, 1)) == 0
    with pytest.raises(ValueError):
        TernaryForm.zero(2).multiplicity_at((1, 0, 0))


def test_b3_quartic_triple_point():
    _, quartic = b3_k1()
    for P in [(3, -5, 1), (Fraction(2, 7), 11, 1)]:
        C = instantiate_curve(quartic, P)
        assert C.degree == 4
        assert C.multiplicity_at(P) == 3


def test_gcd_and_divisibility():
    lm2 = BinaryForm({(2, 1): 1}, 3)
    l2m = BinaryForm({(1, 2): 1}, 3)
    assert binary_gcd(lm2, l2m).equal_up_to_scalar(BinaryForm({(1, 1): 1}, 2))
    assert divides(X + Y, X**2 - Y**2)
    assert not divides(X - Z, X**2 - Y**2)
    _, quartic = b3_k1()
    C = instantiate_curve(quartic, (3, -5, 1))
    # x does not divide: the quartic is nonzero somewhere on x = 0
    assert C.evaluate((0, 1, 2)) and not divides(X, C)


def test_parse_form_and_text_round_trip():
    f = parse_form("49*x^3*y - 49*x*y^3 + 168*x^2*y*z + 140x y^2 z + 44xyz^2")
    assert parse_form(str(f)) == f
    assert f.degree == 4


def test_primitive_normalization():
    f = (X.scale(Fraction(2, 3)) - Y.scale(Fraction(4, 9)))
    p = f.primitive()
    assert p == X.scale(3) - Y.scale(2)
    assert (-f).primitive() == p


def test_proj_point_canonical():
    assert ProjPoint(2, 4, 6) == ProjPoint(1, 2, 3)
    assert ProjPoint.parse("0, -3, 6") == ProjPoint(0, 1, -2)
    with pytest.raises(ValueError):
        ProjPoint(0, 0, 0)
    # coefficients of (x + 2y + 3z)^2
    assert list(veronese((1, 2, 3), 2)) == [1, 4, 6, 4, 12, 9]
    assert cross((1, 0, 0), (0, 1, 0)) == (0, 0, 1)


def test_polynomial_substitution():
    x, y = Polynomial.variable(3, 0), Polynomial.variable(3, 1)
    p = (x + y) ** 2
    assert p.substitute({1: x}) == x.scale(4) * x
    assert p.diff(0, 1) == (x + y).scale(2)


coef = st.integers(-4, 4)


def ternary_forms(degree):
    return st.lists(coef, min_size=len(monomials(degree)), max_size=len(monomials(degree))).map(
        lambda cs: TernaryForm.from_vector(cs, degree)
    )


point = st.tuples(coef, coef, coef).filter(any)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 4).flatmap(ternary_forms), point, point, point)
def test_substitute_then_evaluate(f, a, b, c):
    sx, sy, sz = (TernaryForm.linear(*v) for v in (a, b, c))
    g = f.substitute_linear(sx, sy, sz)
    for pt in [(1, 2, 3), (-1, 0, 4)]:
        img = (sx.evaluate(pt), sy.evaluate(pt), sz.evaluate(pt))
        assert g.evaluate(pt) == f.evaluate(img)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 4).flatmap(ternary_forms), point, point)
def test_restriction_agrees_with_evaluation(f, p0, p1):
    if not any(cross(p0, p1)):
        return
    r = f.restrict_to_line(p0, p1)
    assert r.degree == f.degree
    for lam, mu in [(1, 2), (3, -1), (0, 1)]:
        assert r.evaluate(lam, mu) == f.evaluate(tuple(lam * a + mu * b for a, b in zip(p0, p1)))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3).flatmap(ternary_forms), st.integers(1, 3).flatmap(ternary_forms), point)
def test_multiplicity_is_additive(f, g, P):
    if not f or not g:
        return
    assert (f * g).multiplicity_at(P) == f.multiplicity_at(P) + g.multiplicity_at(P)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3).flatmap(ternary_forms), st.integers(1, 3).flatmap(ternary_forms))
def test_products_divisible(f, g):
    if not f or not g:
        return
    assert divides(f, f * g) and divides(g, f * g)
    assert (f * g).degree == f.degree + g.degree
