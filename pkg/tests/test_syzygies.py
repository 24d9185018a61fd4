import pytest

from unexpected_curves.arrangements import GenericLine, b3, build_arrangement, fermat_dual, make_generic_line
from unexpected_curves.fixtures import b3_k1, b3_k2
from unexpected_curves.forms import BinaryForm, TernaryForm, X, Y, Z, veronese
from unexpected_curves.splitting import splitting_type
from unexpected_curves.syzygies import (
    SyzygyVector, check_restricted, e_generators, in_span_modulo_euler, line_crossings,
    non_determined_points, phi_e_identity, restrict_tuple, restricted_dimension_profile,
    restricted_residual, restricted_syzygies, restricted_syzygy_dimension, verify_global_syzygy,
)


def test_b3_k1_unique_syzygy(b3_arr, b3_line):
    assert restricted_syzygies(b3_arr, b3_line, 1, 2) == []
    basis = restricted_syzygies(b3_arr, b3_line, 1, 3)
    assert len(basis) == 1
    syz, _ = b3_k1()
    ref = SyzygyVector(1, 3, restrict_tuple(syz, b3_line))
    assert in_span_modulo_euler(ref, basis, b3_line)
    exact = restricted_syzygies(b3_arr, b3_line, 1, 3, mode="exact")
    assert len(exact) == 1
    ratio = None
    for g, h in zip(exact[0].restricted, ref.restricted):
        assert g.equal_up_to_scalar(h)


def test_b3_k2_three_generators(b3_arr, b3_line):
    basis = restricted_syzygies(b3_arr, b3_line, 2, 2)
    assert len(basis) == 3
    for s in basis:
        assert check_restricted(s, b3_arr, b3_line)
        assert len(s.restricted) == 6 and s.d == 2


def test_exact_mode_residual_vanishes(b3_arr, b3_line):
    for s in restricted_syzygies(b3_arr, b3_line, 1, 4, mode="exact"):
        assert not restricted_residual(s, b3_arr, b3_line)


def test_unknown_mode(b3_arr, b3_line):
    with pytest.raises(ValueError):
        restricted_syzygies(b3_arr, b3_line, 1, 3, mode="lazy")
    assert restricted_syzygies(b3_arr, b3_line, 1, -1) == []


@pytest.mark.parametrize("name,Z,ks", [("B3", b3(), (1, 2, 3)), ("DF3", fermat_dual(3), (1, 2, 3, 4))])
def test_dimensions_follow_splitting(name, Z, ks):
    A = build_arrangement(Z)
    L = make_generic_line(A, seed=1)
    for k in ks:
        st = splitting_type(Z, k)
        top = len(Z) - 2
        assert restricted_dimension_profile(A, L, k, top) == [st.dimension(d) for d in range(top + 1)]
        # the direct basis count agrees with the shortcut
        d = st.exponents[-1]
        assert len(restricted_syzygies(A, L, k, d)) == restricted_syzygy_dimension(A, L, k, d)


def test_global_verification(b3_arr, b3_line):
    syz, _ = b3_k1()
    ok, cof = verify_global_syzygy(b3_arr, b3_line, 1, syz)
    assert ok and not cof
    zero = [TernaryForm.zero(2)] * 6
    assert verify_global_syzygy(b3_arr, b3_line, 2, zero)[0]
    gen = e_generators(2)[1]
    assert not verify_global_syzygy(b3_arr, b3_line, 2, list(gen.components))[0]
    assert verify_global_syzygy(b3_arr, b3_line, 2, list(gen.components), modulus="f")[0]


def test_reference_sigmas_need_grlex_order(b3_arr):
    P, sigmas, _ = b3_k2()
    L = GenericLine.from_dual_point(P)
    for sg in sigmas:
        assert verify_global_syzygy(b3_arr, L, 2, sg, modulus="f")[0]
    assert not verify_global_syzygy(b3_arr, L, 2, list(reversed(sigmas[1])), modulus="f")[0]


def test_e_generators_shape():
    (gen,) = e_generators(1)
    assert gen.components == (X, Y, Z)
    gens = e_generators(2)
    assert len(gens) == 3
    assert gens[0].components[:3] == (X, Y, Z) and not any(gens[0].components[3:])
    assert all(len(g.nonzero_slots()) == 3 for g in e_generators(3))
    with pytest.raises(ValueError):
        e_generators(0)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_phi_identity_b3(b3_arr, k):
    assert all(phi_e_identity(b3_arr, g) for g in e_generators(k))


def test_non_determined_on_arrangement(b3_arr, b3_line):
    s = restricted_syzygies(b3_arr, b3_line, 1, 3)[0]
    crossings = {Q for _, Q, _ in line_crossings(b3_arr, b3_line)}
    for nd in non_determined_points(s, b3_arr, b3_line):
        assert nd.point in crossings
        assert not b3_arr.f.evaluate(nd.point)


def test_sigma2_non_determined_points(b3_arr):
    P, sigmas, _ = b3_k2()
    L = GenericLine.from_dual_point(P)
    s = SyzygyVector(2, 2, restrict_tuple(sigmas[1], L))
    nds = non_determined_points(s, b3_arr, L)
    assert sorted(str(n.point) for n in nds) == ["(1, -1, 22/7)", "(1, 1, 2/7)"]


def test_reduce_divides_common_factor():
    lam = BinaryForm({(1, 0): 1}, 1)
    g = (BinaryForm({(1, 0): 1, (0, 1): 2}, 1) * lam, BinaryForm({(0, 1): 3}, 1) * lam, BinaryForm.zero(2))
    s = SyzygyVector(1, 2, g)
    assert not s.reduced
    r = s.reduce()
    assert r.d == 1 and r.reduced
    assert r.reduce() is r


def test_lift_lies_in_f_and_line(b3_arr, b3_line):
    from unexpected_curves.syzygies import lift_tuple

    for s in restricted_syzygies(b3_arr, b3_line, 2, 3):
        g = lift_tuple(s, b3_line)
        assert restrict_tuple(g, b3_line) == s.restricted
        assert verify_global_syzygy(b3_arr, b3_line, 2, g, modulus="f+line")[0]
    with pytest.raises(ValueError):
        verify_global_syzygy(b3_arr, b3_line, 1, [X, Y, Z], modulus="nope")
