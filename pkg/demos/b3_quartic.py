"""# A quartic with a triple point through nine points

Nine points in the dual plane, dual to the B3 arrangement
xyz(x^2-y^2)(x^2-z^2)(y^2-z^2).  One syzygy of degree 3 on a generic
line gives a quartic through all nine points with a triple point."""

from unexpected_curves import b3, build_arrangement, make_generic_line, restricted_syzygies
from unexpected_curves.construction import construct_curve
from unexpected_curves.splitting import splitting_type

# %%
Z = b3()
A = build_arrangement(Z)
print("f =", A.f)

st = splitting_type(Z, 1)
print("splitting type for k=1:", st)

# %%
L = make_generic_line(A, seed=0)
print(L)

basis = restricted_syzygies(A, L, 1, st.base)
print(len(basis), "syzygy of degree", st.base)
for g in basis[0].restricted:
    print("   ", g)

# %%
""" The curve is sum_I g_I(lam(X), mu(X)) X^I, with lam, mu vanishing at P. """

rep = construct_curve(basis[0], L, A)
print("C =", rep.curve)
print("degree", rep.degree, "multiplicity at P:", rep.mult_at_P)
print("on Z:", rep.multiplicity_profile())

# %%
""" Moving the line moves the triple point. """

for seed in (1, 2, 3):
    L2 = make_generic_line(A, seed=seed)
    r = construct_curve(restricted_syzygies(A, L2, 1, 3)[0], L2, A)
    print(L2.dual_point, "->", r.mult_at_P, r.multiplicity_profile())
