import pytest

from unexpected_curves.arrangements import b3, fermat_dual
from unexpected_curves.splitting import SplittingType
from unexpected_curves.unexpectedness import (
    criterion_epsilon, criterion_simple, expected_dimension, format_table, in_range,
    is_unexpected_direct, reconcile, reconciliation_problems, splitting_table, unexpected_types,
)


def test_df4_type_7_5(df4):
    v = is_unexpected_direct(df4, 5, 2)
    assert (v.actual_dim, v.expected_dim, v.verdict_direct, v.independent) == (3, 2, True, True)
    assert expected_dimension(df4, 5, 2) == 2
    assert v.curve_type == (7, 5) and not v.starred


def test_criteria_on_table_rows():
    st = SplittingType(1, (4, 7))
    assert criterion_simple(st, 1) and not criterion_simple(st, 2)
    assert criterion_epsilon(st, 0) and not criterion_epsilon(st, 1)
    with pytest.raises(IndexError):
        criterion_simple(st, 0)
    st = SplittingType(2, (4, 5, 7))
    assert [criterion_epsilon(st, j) for j in range(3)] == [True, True, False]


def test_types_df3_and_b3():
    assert unexpected_types(fermat_dual(3), SplittingType(1, (4, 7))) == [(5, 4, False)]
    assert unexpected_types(b3(), SplittingType(1, (3, 5))) == [(4, 3, False)]
    assert unexpected_types(fermat_dual(3), SplittingType(2, (3, 3, 3))) == []


def test_starred_entry_df5():
    types = unexpected_types(fermat_dual(5), SplittingType(3, (4, 5, 6, 7)))
    assert (7, 4, True) in types and (8, 5, False) in types


def test_reconciliation_b3():
    Z = b3()
    for k, exps in ((1, (3, 5)), (2, (2, 2, 2))):
        assert reconciliation_problems(reconcile(Z, SplittingType(k, exps))) == []


def test_in_range():
    assert in_range(12, 4) and not in_range(12, 5)
    assert in_range(28, 6) and not in_range(28, 7)


def test_table_df3():
    rows = splitting_table(fermat_dual(3))
    assert [r.k for r in rows] == [1, 2, 3, 4, 5]
    assert [str(r.splitting) for r in rows[:4]] == ["4,7", "3,3,3", "1,1,2,2", "0,0,0,1,1"]
    assert not rows[4].converged and rows[4].error
    text = format_table(rows)
    assert "(5,4)" in text and "non-convergent" in text
    assert rows[0].to_json()["unexpected"] == [{"type": [5, 4], "starred": False}]
