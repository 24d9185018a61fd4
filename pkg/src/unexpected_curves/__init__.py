"""Exact construction and certification of unexpected plane curves.

Curves of degree d + k through a finite point set Z with a point of
multiplicity d at a generic point, built from syzygies of powers of the
Jacobian ideal of the dual line arrangement and checked against fat-point
dimension counts.  All arithmetic is exact over cyclotomic fields.
"""

from .scalars import CycloScalar, root_of_unity, parse_scalar
from .forms import BinaryForm, ProjPoint, TernaryForm, binary_gcd, divides, parse_form
from .linalg import ExactMatrix, kernel_basis, rank
from .arrangements import (
    Arrangement, GenericLine, GenericityError, PointConfig, b3, build_arrangement,
    fermat_dual, load_points, make_generic_line,
)
from .fatpoints import (
    DimTable, dim_table, fatpoint_dimension, ideal_dimension, imposes_independent,
)
from .splitting import (
    NonConvergenceError, SplittingType, chern_sum_check, epsilon_decomposition, splitting_type,
)
from .syzygies import (
    CertificationError, SyzygyVector, e_generators, non_determined_points, phi_e_identity,
    restricted_syzygies, verify_global_syzygy,
)
from .construction import (
    CurveReport, construct_curve, duality_check, line_component_check, verify_curve,
)
from .unexpectedness import (
    criterion_epsilon, criterion_simple, expected_dimension, is_unexpected_direct,
    splitting_table,
)

__version__ = "0.1.0"
