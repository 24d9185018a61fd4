"""# DF4 and the (7,5) curves

The space of septics through the 19 points with a 5-fold point at P is 3-dimensional
but only 2 is expected.  On a generic line the syzygies of degree 5 for k = 2
form a 3-dimensional space too; singularity at given points is linear, so we can
ask for the member double at (0,1,0) and (0,0,1)."""

from unexpected_curves import build_arrangement, fermat_dual, make_generic_line, restricted_syzygies
from unexpected_curves.construction import construct_curve, singular_combinations, verify_curve
from unexpected_curves.fixtures import curve_text, instantiate_curve
from unexpected_curves.forms import ProjPoint
from unexpected_curves.unexpectedness import is_unexpected_direct

Z = fermat_dual(4)
A = build_arrangement(Z)
v = is_unexpected_direct(Z, 5, 2)
print(f"actual {v.actual_dim}, expected {v.expected_dim}, unexpected {v.verdict_direct}")

# %%
L = make_generic_line(A, seed=0)
basis = restricted_syzygies(A, L, 2, 5)
for i, s in enumerate(basis, 1):
    print(i, construct_curve(s, L, A).multiplicity_profile())

# %%
doubles = [ProjPoint(0, 1, 0), ProjPoint(0, 0, 1)]
(s,) = singular_combinations(basis, L, doubles)
rep = construct_curve(s, L, A)
print("profile", rep.multiplicity_profile(), "mult at P", rep.mult_at_P)
print("equals stored C_4_7_5:", rep.curve.equal_up_to_scalar(instantiate_curve(curve_text("C_4_7_5"), L.dual_point)))

# %%
""" The second stored septic: its support misses x^7, x^6 y, x^6 z, so (1,0,0) is singular. """

P = L.dual_point
other = verify_curve(instantiate_curve(curve_text("C_4_7_5_prime"), P), Z, P, 5)
print("profile", other.multiplicity_profile(), "mult at P", other.mult_at_P)
print("singular:", [str(p) for p, m in other.multiplicities_at_Z if m > 1])
