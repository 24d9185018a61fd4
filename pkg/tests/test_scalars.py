from fractions import Fraction

from hypothesis import given, settings, strategies as st
import pytest

from unexpected_curves.scalars import (
    CycloScalar, evaluate_expression, format_scalar, parse_scalar, root_of_unity,
)

from conftest import to_complex


def test_root_of_unity_small_orders():
    assert root_of_unity(1) == 1
    i = root_of_unity(4)
    assert i * i == -1
    w = root_of_unity(3)
    assert w * w + w + 1 == 0


def test_spec_arithmetic_examples():
    z5 = root_of_unity(5)
    assert z5 * z5**4 == 1
    i = root_of_unity(4)
    assert (1 + i) * (1 - i) == 2
    w = root_of_unity(3)
    assert w.inverse() == w * w == -1 - w


def test_rationals_behave_like_fractions():
    a = CycloScalar(Fraction(3, 4))
    assert a.is_rational()
    assert (a / 3).to_fraction() == Fraction(1, 4)
    assert CycloScalar(0).is_zero()
    with pytest.raises(ZeroDivisionError):
        CycloScalar(0).inverse()


def test_mixed_orders_embed():
    # zeta_3 * zeta_4 lives in Q(zeta_12) and is a primitive 12th root
    p = root_of_unity(3) * root_of_unity(4)
    assert p.order == 12
    assert p**12 == 1 and p**6 != 1 and p**4 != 1


def test_parse_and_format_round_trip():
    s = parse_scalar("-3/2*e + e^2", 5)
    assert parse_scalar(format_scalar(s), 5) == s
    assert parse_scalar("7") == 7


def test_implicit_multiplication():
    val = evaluate_expression("5b^2c - (1/2)a", {"a": 4, "b": 2, "c": 3})
    assert val == 58


@pytest.mark.parametrize("bad", ["2 ** -1", "foo(1)", "1 +"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        evaluate_expression(bad, {})


def elements(order):
    phi = {3: 2, 4: 2, 5: 4, 12: 4}[order]
    small = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    return st.lists(small, min_size=phi, max_size=phi).map(lambda cs: CycloScalar.from_coeffs(cs, order))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 4, 5, 12]).flatmap(lambda n: st.tuples(elements(n), elements(n), elements(n))))
def test_field_axioms(abc):
    a, b, c = abc
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a:
        assert a * a.inverse() == 1


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 5, 12]).flatmap(lambda n: st.tuples(elements(n), elements(n))))
def test_matches_complex_embedding(ab):
    a, b = ab
    assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-9
    assert abs(to_complex(a - b) - (to_complex(a) - to_complex(b))) < 1e-9
    if b:
        assert abs(to_complex(a / b) - to_complex(a) / to_complex(b)) < 1e-8
