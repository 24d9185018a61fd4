"""Syzygies of powers of the Jacobian ideal, restricted to a generic line.

A restricted syzygy of degree d is a tuple (g_I) of binary forms of degree d,
one per exponent I with |I| = k (graded-lex order), in the line parameters
(lam, mu) of L.  With w = grad f restricted to L the defining relation is

    sum_I g_I * w^I  ==  0      modulo f|_L   (mode "quotient", default)
    sum_I g_I * w^I  ==  0      exactly       (mode "exact")

In quotient mode the tuples coming from the Euler-type generators, i.e.
S_Q(X) = (Q . X) * H_Q(X), satisfy the relation trivially and contribute
nothing to the constructed curve, so the returned basis spans a complement of
their span.  Since f|_L has simple roots Q_j = l_j cap L and
grad f(Q_j) is a multiple of z_j, the relation is equivalent to the |Z| linear
conditions S_{Q_j}(z_j) = 0 with S_Q(X) = sum_I g_I(Q) X^I.
"""

from dataclasses import dataclass

from .forms import (
    BinaryForm, ProjPoint, TernaryForm, binary_gcd, cross, monomial_index, monomials, veronese,
)
from .linalg import kernel_basis, rank, rref
from .scalars import CycloScalar

__all__ = [
    "SyzygyVector",
    "DerGenerator",
    "CertificationError",
    "NonDetermined",
    "restricted_syzygies",
    "restricted_syzygy_dimension",
    "restricted_dimension_profile",
    "restricted_residual",
    "in_span_modulo_euler",
    "tuple_vector",
    "check_restricted",
    "verify_global_syzygy",
    "restrict_tuple",
    "lift_tuple",
    "line_crossings",
    "non_determined_points",
    "e_generators",
    "phi_e_identity",
    "euler_tuple",
]

_ZERO = CycloScalar(0)
_ONE = CycloScalar(1)


class CertificationError(ArithmeticError):
    """An exact certificate that should hold for generic data failed."""


@dataclass(frozen=True)
class SyzygyVector:
    k: int
    d: int
    restricted: tuple
    mode: str = "quotient"
    global_: tuple = None
    cofactor: TernaryForm = None

    @property
    def gcd(self):
        comps = [g for g in self.restricted if g]
        if not comps:
            raise ValueError("zero syzygy")
        g = comps[0].normalized()
        for c in comps[1:]:
            if g.degree == 0:
                break
            g = binary_gcd(g, c)
        return g

    @property
    def reduced(self):
        return self.gcd.degree == 0

    def reduce(self):
        """Divide out the common factor of the components (degree drops accordingly)."""
        g = self.gcd
        if g.degree == 0:
            return self
        comps = tuple(c.exact_div(g) if c else BinaryForm.zero(self.d - g.degree) for c in self.restricted)
        return SyzygyVector(self.k, self.d - g.degree, comps, self.mode)

    def at(self, lam, mu):
        """G(Q) = (g_I(lam, mu))_I."""
        return [g.evaluate(lam, mu) for g in self.restricted]

    def to_json(self):
        return {
            "k": self.k,
            "d": self.d,
            "mode": self.mode,
            "reduced": self.reduced,
            "components": [str(g) for g in self.restricted],
        }


@dataclass(frozen=True)
class DerGenerator:
    """x_m placed at slot I' + e_m, m = 0, 1, 2; zero elsewhere."""

    k: int
    index: tuple
    components: tuple

    def nonzero_slots(self):
        return [i for i, c in enumerate(self.components) if c]


def _restricted_jacobian(A, L):
    p0, p1 = L.span
    return [g.restrict_to_line(p0, p1) for g in A.jacobian]


def line_crossings(A, L):
    """(index, point, (lam, mu)) for every Q_j = l_j cap L."""
    P = tuple(L.dual_point)
    out = []
    for j, z in enumerate(A.points):
        Q = cross(tuple(z), P)
        out.append((j, ProjPoint(Q), L.parameter_of(Q)))
    return out


def _param_powers(lam, mu, d):
    lp = [_ONE]
    mp = [_ONE]
    for _ in range(d):
        lp.append(lp[-1] * lam)
        mp.append(mp[-1] * mu)
    return [lp[d - e] * mp[e] for e in range(d + 1)]


def _mono_values(point, k):
    a, b, c = tuple(point)
    return [a**i * b**j * c**l for i, j, l in monomials(k)]


def _vector_to_tuple(vec, k, d):
    n = d + 1
    return tuple(
        BinaryForm.from_coeffs(vec[i * n:(i + 1) * n]) for i in range(len(monomials(k)))
    )


def euler_tuple(L, index, k, d, e):
    """Coordinates of (Q . X) X^index lam^(d-1-e) mu^e, Q = lam p0 + mu p1."""
    monos = monomial_index(k)
    p0, p1 = L.span
    n = d + 1
    vec = [_ZERO] * (len(monos) * n)
    for m in range(3):
        slot = list(index)
        slot[m] += 1
        base = monos[tuple(slot)] * n
        # lam^(d-1-e) mu^e * (lam p0[m] + mu p1[m])
        vec[base + e] = vec[base + e] + p0[m]
        vec[base + e + 1] = vec[base + e + 1] + p1[m]
    return vec


def _euler_span(L, k, d):
    if d < 1:
        return []
    return [euler_tuple(L, idx, k, d, e) for idx in monomials(k - 1) for e in range(d)]


def _quotient_system(A, L, k, d):
    rows = []
    for j, Q, (lam, mu) in line_crossings(A, L):
        pw = _param_powers(lam, mu, d)
        zv = _mono_values(A.points[j], k)
        rows.append([zi * p for zi in zv for p in pw])
    return rows


def _exact_system(A, L, k, d):
    w = _restricted_jacobian(A, L)
    wI = [w[0] ** a * w[1] ** b * w[2] ** c for a, b, c in monomials(k)]
    top = d + k * (A.f.degree - 1)
    cols = []
    for form in wI:
        cf = form.coeffs()
        for e in range(d + 1):
            col = [_ZERO] * (top + 1)
            for i, c in enumerate(cf):
                col[i + e] = c
            cols.append(col)
    return [list(r) for r in zip(*cols)]


def _complement(kernel, span):
    """Deterministic representatives of kernel / span (span is inside kernel)."""
    if not span:
        red, _ = rref(kernel) if kernel else ([], [])
        return red
    sred, spiv = rref(span)
    reduced = []
    for v in kernel:
        v = list(v)
        for row, pc in zip(sred, spiv):
            c = v[pc]
            if c:
                v = [a - c * b if b else a for a, b in zip(v, row)]
        if any(v):
            reduced.append(v)
    if not reduced:
        return []
    out, _ = rref(reduced)
    if len(out) != len(kernel) - len(sred):
        raise CertificationError("Euler-type tuples are not contained in the solution space")
    return out


def tuple_vector(forms, d):
    """Flatten a tuple of degree-d binary forms into restricted-syzygy coordinates."""
    out = []
    for g in forms:
        out += g.coeffs() if g else [_ZERO] * (d + 1)
    return out


def in_span_modulo_euler(candidate, basis, L):
    """True iff ``candidate`` lies in span(basis) + the Euler-type span."""
    k, d = candidate.k, candidate.d
    rows = _euler_span(L, k, d) + [tuple_vector(b.restricted, d) for b in basis]
    before = rank(rows) if rows else 0
    return rank(rows + [tuple_vector(candidate.restricted, d)]) == before


def restricted_syzygies(A, L, k, d, mode="quotient"):
    """Deterministic basis of restricted syzygies of degree d."""
    if d < 0:
        return []
    if k < 1:
        raise ValueError("k must be at least 1")
    ncols = len(monomials(k)) * (d + 1)
    if mode == "quotient":
        kern = kernel_basis(_quotient_system(A, L, k, d), ncols)
        basis = _complement(kern, _euler_span(L, k, d))
    elif mode == "exact":
        basis = kernel_basis(_exact_system(A, L, k, d), ncols)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return [SyzygyVector(k, d, _vector_to_tuple(v, k, d), mode) for v in basis]


def restricted_syzygy_dimension(A, L, k, d):
    """Size of the quotient-mode basis without building it.

    Multiplication by Q . X is injective, so the Euler-type span has dimension
    d * C(k+1, 2) and only the rank of the |Z|-row system is needed.
    """
    if d < 0:
        return 0
    ncols = len(monomials(k)) * (d + 1)
    return ncols - rank(_quotient_system(A, L, k, d)) - d * len(monomials(k - 1))


def restricted_dimension_profile(A, L, k, d_max):
    """[restricted_syzygy_dimension(A, L, k, d) for d = 0..d_max].

    Once the |Z| crossing conditions are independent in some degree they stay
    independent in every higher degree (multiply by a linear form in lam, mu
    that vanishes at no crossing), so the count continues in closed form.
    """
    out = []
    full = False
    n, width = len(A.points), len(monomials(k))
    for d in range(d_max + 1):
        if not full:
            r = rank(_quotient_system(A, L, k, d))
            full = r == n
        else:
            r = n
        out.append(width * (d + 1) - r - d * len(monomials(k - 1)))
    return out


def restricted_residual(s, A, L):
    """sum_I g_I * w^I as a binary form."""
    w = _restricted_jacobian(A, L)
    acc = None
    for g, (a, b, c) in zip(s.restricted, monomials(s.k)):
        if not g:
            continue
        term = g * w[0] ** a * w[1] ** b * w[2] ** c
        acc = term if acc is None else acc + term
    return acc if acc is not None else BinaryForm.zero()


def check_restricted(s, A, L):
    """Re-multiply and check the defining relation of the syzygy's mode."""
    res = restricted_residual(s, A, L)
    if s.mode == "exact":
        return not res
    p0, p1 = L.span
    return A.f.restrict_to_line(p0, p1).divides(res)


def restrict_tuple(forms, L):
    p0, p1 = L.span
    return tuple(g.restrict_to_line(p0, p1) for g in forms)


def lift_tuple(s, L):
    """Ternary lifts g_I(y/gamma, -x/gamma), which agree with g_I on L."""
    ga = L.dual_point[2]
    lam = TernaryForm.linear(0, ga.inverse(), 0)
    mu = TernaryForm.linear(-ga.inverse(), 0, 0)
    return tuple(g.compose(lam, mu) if g else TernaryForm.zero(s.d) for g in s.restricted)


def _jacobian_power_sum(A, k, candidate):
    fx, fy, fz = A.jacobian
    acc = None
    for g, (a, b, c) in zip(candidate, monomials(k)):
        if not g:
            continue
        term = g * fx**a * fy**b * fz**c
        acc = term if acc is None else acc + term
    return acc


def verify_global_syzygy(A, L, k, candidate, modulus="line"):
    """Return (ok, cofactor) for R = sum_I candidate[I] * (grad f)^I.

    ``modulus="line"``: ok iff L | R, cofactor g = -R / L.
    ``modulus="f"``: ok iff f | R, cofactor R / f (syzygies of (J/f)^k).
    ``modulus="f+line"``: ok iff R lies in (f, L), i.e. f|_L divides R|_L;
    the cofactor is the binary quotient.  This is what a lift of a
    quotient-mode restricted syzygy satisfies.
    """
    candidate = tuple(candidate)
    if len(candidate) != len(monomials(k)):
        raise ValueError(f"need {len(monomials(k))} components for k={k}")
    degs = {g.degree for g in candidate if g}
    if len(degs) > 1:
        raise ValueError(f"components have mixed degrees {sorted(degs)}")
    R = _jacobian_power_sum(A, k, candidate)
    if R is None or not R:
        return True, TernaryForm.zero()
    if modulus == "line":
        q, r = R.divmod(L.form)
        return (not r), (-q if not r else None)
    if modulus == "f":
        q, r = R.divmod(A.f)
        return (not r), (q if not r else None)
    if modulus == "f+line":
        p0, p1 = L.span
        fl, rl = A.f.restrict_to_line(p0, p1), R.restrict_to_line(p0, p1)
        if not fl.divides(rl):
            return False, None
        return True, rl.exact_div(fl) if rl else BinaryForm.zero()
    raise ValueError(f"unknown modulus {modulus!r}")


@dataclass(frozen=True)
class NonDetermined:
    """A point Q of L where S_Q is divisible by the form Q . X."""

    parameter: tuple
    point: ProjPoint
    line_index: int
    veronese_proportional: bool

    def dual_line(self):
        return self.point.linear_form()

    def to_json(self):
        return {
            "parameter": [str(c) for c in self.parameter],
            "point": str(self.point),
            "line_index": self.line_index,
            "veronese_proportional": self.veronese_proportional,
        }


def _proportional(u, v):
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            if u[i] * v[j] != u[j] * v[i]:
                return False
    return any(u) and any(v)


def _divisibility_forms(s, L):
    """Coefficients (in Y) of S_Q(Q x Y) as binary forms in (lam, mu)."""
    p0, p1 = L.span
    # Q x Y, entries linear in (lam, mu) and in Y: (Q x Y)_m = sum_v c[m][v](lam, mu) Y_v
    lin = [BinaryForm({(1, 0): a, (0, 1): b}, 1) for a, b in zip(p0, p1)]
    zero1 = BinaryForm.zero(1)
    Qc = lin

    def cross_coeff(m, v):
        # coefficient of Y_v in (Q x Y)_m
        i, j = (m + 1) % 3, (m + 2) % 3
        if v == j:
            return Qc[i]
        if v == i:
            return -Qc[j]
        return zero1

    # polynomials in Y represented as dict exponent -> BinaryForm
    lin_y = []
    for m in range(3):
        lin_y.append({tuple(1 if t == v else 0 for t in range(3)): cross_coeff(m, v) for v in range(3)})

    def pmul(p, q):
        out = {}
        for ma, ca in p.items():
            for mb, cb in q.items():
                if not ca or not cb:
                    continue
                key = tuple(x + y for x, y in zip(ma, mb))
                val = ca * cb
                out[key] = out[key] + val if key in out else val
        return out

    powers = [[{(0, 0, 0): BinaryForm.constant(1)}] for _ in range(3)]
    for m in range(3):
        for _ in range(s.k):
            powers[m].append(pmul(powers[m][-1], lin_y[m]))
    total = {}
    for g, (a, b, c) in zip(s.restricted, monomials(s.k)):
        if not g:
            continue
        term = pmul(pmul(pmul({(0, 0, 0): g}, powers[0][a]), powers[1][b]), powers[2][c])
        for key, val in term.items():
            total[key] = total[key] + val if key in total else val
    return [v for v in total.values() if v]


def _linear_factor(lam, mu):
    # vanishes at (lam, mu): mu0 * lam - lam0 * mu
    return BinaryForm({(1, 0): mu, (0, 1): -lam}, 1)


def non_determined_points(s, A, L):
    """Points Q of L (parameters) where (Q . X) divides S_Q(X).

    Common zeros of all components are discarded first (they make S_Q vanish
    identically).  Every remaining root must be one of the crossings
    l_j cap L; otherwise :class:`CertificationError` is raised.
    """
    s = s.reduce()
    forms = _divisibility_forms(s, L)
    if not forms:
        raise CertificationError("S_Q is divisible by Q . X for every Q on L")
    g = forms[0].normalized()
    for h in forms[1:]:
        if g.degree == 0:
            break
        g = binary_gcd(g, h)
    found = []
    for j, Q, (lam, mu) in line_crossings(A, L):
        if g.degree == 0:
            break
        if g.evaluate(lam, mu):
            continue
        lin = _linear_factor(lam, mu)
        while g.degree and not g.evaluate(lam, mu):
            g = g.exact_div(lin)
        G = s.at(lam, mu)
        if A.f.evaluate(Q):
            raise CertificationError(f"non-determined point {Q} is off the arrangement")
        found.append(NonDetermined((lam, mu), Q, j, _proportional(G, veronese(Q, s.k))))
    if g.degree:
        raise CertificationError(
            f"S_Q is divisible by Q . X at {g.degree} point(s) of L off the arrangement"
        )
    return found


def e_generators(k):
    """All C(k+1, 2) generators, indexed by |I'| = k - 1 in graded-lex order."""
    if k < 1:
        raise ValueError("k must be at least 1")
    idx = monomial_index(k)
    xs = [TernaryForm.linear(1, 0, 0), TernaryForm.linear(0, 1, 0), TernaryForm.linear(0, 0, 1)]
    gens = []
    for base in monomials(k - 1):
        comps = [TernaryForm.zero(1)] * len(idx)
        for m in range(3):
            slot = list(base)
            slot[m] += 1
            comps[idx[tuple(slot)]] = xs[m]
        gens.append(DerGenerator(k, base, tuple(comps)))
    return gens


def phi_e_identity(A, gen):
    """sum_I comp_I (grad f)^I == deg(f) * f * (grad f)^I'."""
    lhs = _jacobian_power_sum(A, gen.k, gen.components)
    fx, fy, fz = A.jacobian
    a, b, c = gen.index
    rhs = (A.f * fx**a * fy**b * fz**c).scale(A.f.degree)
    return lhs == rhs
