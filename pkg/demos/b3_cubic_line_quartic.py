"""# B3 with k = 2: curves of degree 4 with a double point

The splitting type is (2, 2, 2), so degree-2 syzygies already exist and
each one yields a quartic double at P through the nine points."""

from unexpected_curves import GenericLine, b3, build_arrangement, restricted_syzygies
from unexpected_curves.construction import construct_curve, duality_check
from unexpected_curves.fixtures import b3_k2
from unexpected_curves.syzygies import SyzygyVector, restrict_tuple, verify_global_syzygy

A = build_arrangement(b3())
P, sigmas, reference = b3_k2()
L = GenericLine.from_dual_point(P)
print(L)

# %%
""" Three global syzygies with cofactor divisible by f; their slot order is graded-lex. """

for i, sg in enumerate(sigmas, 1):
    ok, _ = verify_global_syzygy(A, L, 2, sg, modulus="f")
    print(f"sigma{i}:", [str(g) for g in sg], "f | sum:", ok)

# %%
rep = construct_curve(SyzygyVector(2, 2, restrict_tuple(sigmas[1], L)), L, A)
print("C =", rep.curve)
print("matches reference:", rep.curve.equal_up_to_scalar(reference))
print("non-determined points:", [str(n.point) for n in rep.non_determined])
print("line components:", [str(l) for l in rep.line_components])

# %%
""" The deterministic basis on the same line. """

for i, s in enumerate(restricted_syzygies(A, L, 2, 2), 1):
    r = construct_curve(s, L, A)
    print(i, r.curve, "| kept factor:", r.kept_factor)

# %%
print("duality:", duality_check(A, sigmas[1], 2, 2))
