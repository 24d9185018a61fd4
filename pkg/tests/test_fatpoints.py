from hypothesis import given, settings, strategies as st
import pytest

from unexpected_curves.arrangements import GenericityError, PointConfig, b3, fermat_dual
from unexpected_curves.fatpoints import (
    certified_value, dim_table, fatpoint_dimension, generic_points, ideal_dimension,
    imposes_independent, dimension_from_exponents,
)

P0 = generic_points(0, 1)[0]


def test_ideal_dimension(df4):
    assert ideal_dimension(df4, 7) == 36 - 19
    assert ideal_dimension(PointConfig(1, ((1, 2, 3),)), 1) == 2
    assert ideal_dimension(b3(), 12) == 91 - 9


def test_independence(df4):
    assert imposes_independent(df4, 7)
    assert not imposes_independent(fermat_dual(5), 7)
    line = PointConfig(1, ((1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 2, 0)))
    assert not imposes_independent(line, 1)


def test_fat_point_examples(df4):
    assert fatpoint_dimension(df4, P0, 5, 7) == 3
    Z3 = fermat_dual(3)
    assert fatpoint_dimension(Z3, P0, 4, 5) == 1
    assert fatpoint_dimension(Z3, P0, 0, 5) == ideal_dimension(Z3, 5)


@pytest.mark.parametrize("j,t", [(1, 3), (3, 4), (4, 5), (5, 7)])
def test_chart_agrees_with_stacked_oracle(j, t):
    Z = fermat_dual(3)
    for P in generic_points(9, 2):
        assert fatpoint_dimension(Z, P, j, t, "chart") == fatpoint_dimension(Z, P, j, t, "stacked")


def test_b3_table():
    t = dim_table(b3(), 1, j_max=7)
    assert t.values()[2:7] == [0, 1, 2, 4, 6]
    assert t.is_convex()


def test_df3_table():
    t = dim_table(fermat_dual(3), 2, j_max=4)
    assert t.values()[2:] == [0, 3, 6]


def test_dimension_from_exponents():
    assert dimension_from_exponents((4, 7), 4) == 1
    assert dimension_from_exponents((3, 5), 6) == 6


def test_certified_value_rules():
    assert certified_value([3, 3], 0) == 3
    assert certified_value([3, 4, 3, 5], 0) == 3
    with pytest.raises(GenericityError):
        certified_value([3, 4, 5, 6], 0)


def test_single_sample_rejected():
    with pytest.raises(ValueError):
        dim_table(b3(), 1, samples=1)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 2))
def test_tables_convex_below_threshold(seed, k):
    t = dim_table(b3(), k, seed=seed, j_max=6)
    vals, diffs = t.values(), t.differences()
    assert all(a <= b for a, b in zip(vals, vals[1:]))
    assert all(a <= b for a, b in zip(diffs, diffs[1:]))
    assert diffs[-1] <= k + 1
