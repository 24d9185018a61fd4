import pytest

from unexpected_curves.arrangements import b3, fermat_dual
from unexpected_curves.fatpoints import DimTable
from unexpected_curves.splitting import (
    NonConvergenceError, SplittingType, chern_sum_check, epsilon_decomposition,
    splitting_from_table, splitting_type,
)


@pytest.mark.parametrize(
    "Z,k,expected",
    [(fermat_dual(3), 1, (4, 7)), (fermat_dual(5), 3, (4, 5, 6, 7)), (b3(), 2, (2, 2, 2)), (b3(), 1, (3, 5))],
)
def test_splitting_examples(Z, k, expected):
    st = splitting_type(Z, k)
    assert st.exponents == expected and st.consistent


@pytest.mark.parametrize(
    "exps,decomp",
    [((4, 5, 7), (4, (1, 3), (1, 1, 1))), ((3, 3, 3), (3, (), (3,))), ((7, 9, 9), (7, (2,), (1, 2)))],
)
def test_epsilon_decomposition(exps, decomp):
    assert epsilon_decomposition(SplittingType(len(exps) - 1, exps)) == decomp


def test_chern_sum():
    assert chern_sum_check(SplittingType(1, (4, 7)), 12)
    assert chern_sum_check(SplittingType(3, (3, 3, 3, 4)), 19)
    assert chern_sum_check(SplittingType(2, (2, 2, 2)), 9)
    assert not chern_sum_check(SplittingType(2, (2, 2, 3)), 9)


def test_splitting_type_validation():
    assert SplittingType(1, (7, 4)).exponents == (4, 7)
    with pytest.raises(ValueError):
        SplittingType(2, (1, 2))
    with pytest.raises(ValueError):
        SplittingType(1, (-1, 3))
    assert str(SplittingType(2, (4, 5, 7))) == "4,5,7"


def test_from_table_round_trip():
    st = SplittingType(2, (4, 5, 7))
    table = DimTable(2, {j: st.dimension(j) for j in range(9)})
    assert splitting_from_table(table, 19, 2).exponents == (4, 5, 7)


def test_from_table_rejects_steep_slope():
    table = DimTable(1, {0: 0, 1: 3})
    with pytest.raises(NonConvergenceError):
        splitting_from_table(table, 5, 1)


def test_out_of_range_rows_do_not_converge():
    with pytest.raises(NonConvergenceError):
        splitting_type(fermat_dual(3), 5)
    with pytest.raises(NonConvergenceError):
        splitting_type(b3(), 4)
