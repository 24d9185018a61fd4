from hypothesis import given, settings, strategies as st
import pytest

from unexpected_curves.fatpoints import evaluation_matrix
from unexpected_curves.forms import monomials
from unexpected_curves.linalg import ExactMatrix, kernel_basis, rank, rref
from unexpected_curves.scalars import CycloScalar, root_of_unity


def test_rank_examples():
    assert rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert rank([[1, 2, 3], [4, 5, 6], [1, 2, 3]]) < 3
    assert rank([]) == 0


def test_kernel_examples():
    assert kernel_basis([[0, 0], [0, 0]]) == [[1, 0], [0, 1]]
    assert kernel_basis([[1, 1]]) == [[-1, 1]]


def test_df4_evaluation_matrix_full_rank(df4):
    M = evaluation_matrix(df4.points, monomials(7))
    assert len(M) == 19 and len(M[0]) == 36
    assert rank(M) == 19


def test_cyclotomic_rank():
    w = root_of_unity(3)
    # rows (1, w) and (w^2, 1) are proportional since w^3 = 1
    assert rank([[1, w], [w * w, 1]]) == 1


def test_rref_pivots():
    red, piv = rref([[0, 2, 4], [1, 1, 1]])
    assert piv == [0, 1]
    assert red[1][:2] == [0, 1]


def test_exact_matrix_wrapper():
    M = ExactMatrix([[1, 2], [2, 4]])
    assert M.shape == (2, 2) and M.rank() == 1
    assert M.transpose().rank() == 1
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2], [3]])


entries = st.integers(-3, 3)


def matrices():
    return st.integers(1, 5).flatmap(
        lambda r: st.integers(1, 6).flatmap(
            lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_nullity_and_kernel(M):
    cols = len(M[0])
    ker = kernel_basis(M)
    assert rank(M) + len(ker) == cols
    for v in ker:
        for row in M:
            assert sum((CycloScalar(a) * b for a, b in zip(row, v)), CycloScalar(0)) == 0


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_of_transpose(M):
    assert rank(M) == rank([list(c) for c in zip(*M)])


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_kernel_is_echelon(M):
    _, pivots = rref(M)
    free = [c for c in range(len(M[0])) if c not in pivots]
    ker = kernel_basis(M)
    assert len(ker) == len(free)
    for v, f in zip(ker, free):
        assert [v[c] for c in free] == [1 if c == f else 0 for c in free]
