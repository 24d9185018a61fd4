import cmath

import pytest

from unexpected_curves import b3, build_arrangement, fermat_dual, make_generic_line


def to_complex(s):
    """Numerical embedding zeta_n -> exp(2 pi i / n); an oracle independent of the field code."""
    n = s.order
    return sum(float(c) * cmath.exp(2j * cmath.pi * i / n) for i, c in enumerate(s.coeffs))


@pytest.fixture(scope="session")
def b3_arr():
    return build_arrangement(b3())


@pytest.fixture(scope="session")
def b3_line(b3_arr):
    return make_generic_line(b3_arr, seed=0)


@pytest.fixture(scope="session")
def df4():
    return fermat_dual(4)


@pytest.fixture(scope="session")
def df4_arr(df4):
    return build_arrangement(df4)


@pytest.fixture(scope="session")
def df4_line(df4_arr):
    return make_generic_line(df4_arr, seed=0)
