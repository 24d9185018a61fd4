"""Curves assembled from restricted syzygies, and their certification.

For a point X of the plane, Q(X) = P x X is the point where L meets the line
through P and X, and (lam(X), mu(X)) are its line parameters.  The curve is

    C(X) = sum_I g_I(lam(X), mu(X)) * X^I,

a form of degree d + k vanishing to order >= d at P because lam and mu do.
"""

from dataclasses import dataclass, field

from .forms import BinaryForm, Polynomial, ProjPoint, TernaryForm, monomials
from .linalg import kernel_basis
from .syzygies import CertificationError, SyzygyVector, check_restricted, non_determined_points

__all__ = [
    "CurveReport",
    "ZeroCurveError",
    "CaseTooLargeError",
    "DualityResult",
    "construct_curve",
    "verify_curve",
    "duality_check",
    "line_component_check",
    "curve_from_global",
    "assembled_form",
    "singular_combinations",
    "certified_reduction",
]


class ZeroCurveError(ArithmeticError):
    """The assembled form vanished identically."""


class CaseTooLargeError(ValueError):
    """The symbolic check was asked for a case beyond its size limits."""


@dataclass
class CurveReport:
    curve: TernaryForm
    degree: int
    expected_degree: int
    d: int
    point: ProjPoint
    mult_at_P: int
    multiplicities_at_Z: list = field(default_factory=list)
    line_components: list = field(default_factory=list)
    non_determined: list = field(default_factory=list)
    removed_degree: int = 0
    kept_factor: str = None

    @property
    def passes_through_Z(self):
        return all(m >= 1 for _, m in self.multiplicities_at_Z)

    @property
    def ok(self):
        return self.mult_at_P >= self.d and self.passes_through_Z and self.degree <= self.expected_degree

    def multiplicity_profile(self):
        """{multiplicity: count} over the points of Z."""
        out = {}
        for _, m in self.multiplicities_at_Z:
            out[m] = out.get(m, 0) + 1
        return dict(sorted(out.items()))

    def to_json(self):
        return {
            "curve": str(self.curve),
            "degree": self.degree,
            "expected_degree": self.expected_degree,
            "removed_degree": self.removed_degree,
            "kept_factor": self.kept_factor,
            "d": self.d,
            "point": str(self.point),
            "mult_at_P": self.mult_at_P,
            "multiplicities_at_Z": [[str(p), m] for p, m in self.multiplicities_at_Z],
            "line_components": [str(l) for l in self.line_components],
            "non_determined": [n.to_json() for n in self.non_determined],
            "ok": self.ok,
        }


def _monomial(m):
    return TernaryForm({m: 1}, sum(m))


def _profile(curve, points):
    return [(p, curve.multiplicity_at(p)) for p in points]


def assembled_form(s, L):
    """sum_I g_I(lam(X), mu(X)) X^I without normalization (linear in s)."""
    lam, mu = L.lambda_mu
    C = TernaryForm.zero(s.d + s.k)
    for g, m in zip(s.restricted, monomials(s.k)):
        if g:
            C = C + g.compose(lam, mu) * _monomial(m)
    return C


def certified_reduction(s, L, arrangement=None):
    """The gcd-free quotient of ``s`` when it is still a restricted syzygy, else ``s``.

    Exact syzygies always survive division.  A quotient-mode representative is
    only pinned down modulo Euler-type terms, and its common factor may vanish
    at crossings where the quotient then fails the relation; in that case the
    factor stays and the curve contains the corresponding lines through P.
    """
    reduced = s.reduce()
    if reduced is s or s.mode == "exact":
        return reduced
    if arrangement is not None and check_restricted(reduced, arrangement, L):
        return reduced
    return s


def construct_curve(s, L, arrangement=None):
    """Assemble C_L from the restricted syzygy ``s`` and certify it."""
    k, d = s.k, s.d
    reduced = certified_reduction(s, L, arrangement)
    removed = d - reduced.d
    C = assembled_form(reduced, L)
    if not C:
        raise ZeroCurveError("the syzygy produces the zero form")
    C = C.primitive()
    P = L.dual_point
    mult = C.multiplicity_at(P)
    if mult < reduced.d:
        raise CertificationError(f"multiplicity {mult} at P is below {reduced.d}")
    report = CurveReport(C, C.degree, d + k, reduced.d, P, mult, removed_degree=removed)
    if not reduced.reduced:
        report.kept_factor = str(reduced.gcd)
    if arrangement is not None:
        report.multiplicities_at_Z = _profile(C, arrangement.points)
        report.non_determined = non_determined_points(reduced, arrangement, L)
        report.line_components = [n.dual_line() for n in report.non_determined]
    return report


def singular_combinations(basis, L, points):
    """Syzygies in the span of ``basis`` whose curves are singular at every given point.

    Singularity is linear in the syzygy, so this is a kernel computation on
    the first partials of the assembled forms.
    """
    if not basis:
        return []
    forms = [assembled_form(s, L) for s in basis]
    grads = [f.gradient() for f in forms]
    rows = [[g[v].evaluate(p) for g in grads] for p in points for v in range(3)]
    out = []
    for coeffs in kernel_basis(rows, len(basis)):
        comps = []
        for i in range(len(basis[0].restricted)):
            acc = BinaryForm.zero(basis[0].d)
            for s, c in zip(basis, coeffs):
                if c and s.restricted[i]:
                    acc = acc + s.restricted[i].scale(c)
            comps.append(acc)
        out.append(SyzygyVector(basis[0].k, basis[0].d, tuple(comps), basis[0].mode))
    return out


def verify_curve(C, Z, P, d):
    """Multiplicity profile of an externally supplied curve."""
    if not C:
        raise ZeroCurveError("cannot verify the zero form")
    P = ProjPoint.coerce(P)
    return CurveReport(
        C, C.degree, C.degree, d, P, C.multiplicity_at(P),
        multiplicities_at_Z=_profile(C, Z.points),
    )


def line_component_check(report):
    return all(report.curve.is_divisible_by(l) for l in report.line_components)


def curve_from_global(components, k, point):
    """sum_I g_I(P x X) X^I for ternary syzygy components g_I and a concrete P."""
    P = tuple(ProjPoint.coerce(point))
    x, y, z = (_monomial(m) for m in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    # P x X as linear forms in X
    q = (
        y.scale(-P[2]) + z.scale(P[1]),
        x.scale(P[2]) - z.scale(P[0]),
        y.scale(P[0]) - x.scale(P[1]),
    )
    C = None
    for g, m in zip(components, monomials(k)):
        if not g:
            continue
        term = g.substitute_linear(*q) * _monomial(m)
        C = term if C is None else C + term
    if C is None or not C:
        raise ZeroCurveError("the components produce the zero form")
    return C


@dataclass
class DualityResult:
    holds: bool
    max_order: int
    scalar: object = None
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.holds


def _biform(components, k):
    # variables 0..2 are x, y, z; 3..5 the coordinates of P
    v = [Polynomial.variable(6, i) for i in range(6)]
    x, y, z, al, be, ga = v
    q = {0: be * z - ga * y, 1: ga * x - al * z, 2: al * y - be * x}
    C = Polynomial(6)
    for g, m in zip(components, monomials(k)):
        if not g:
            continue
        gq = Polynomial.from_form(g).substitute(q)
        C = C + gq * x ** m[0] * y ** m[1] * z ** m[2]
    return C


def duality_check(A, components, k, d, max_order=None):
    """Compare X-derivatives at X = P with P-derivatives at P = X up to order ``max_order``.

    ``components`` are ternary syzygy components that do not depend on the
    line, so the curve is a biform in (X, P).  Both sides are polynomials in
    three variables; they must agree up to one common scalar.
    """
    if A.f.degree > 9 or k > 2:
        raise CaseTooLargeError("duality check is limited to deg f <= 9 and k <= 2")
    order = d if max_order is None else max_order
    C = _biform(components, k)
    v = [Polynomial.variable(6, i) for i in range(6)]
    to_p = {0: v[3], 1: v[4], 2: v[5]}
    to_x = {3: v[0], 4: v[1], 5: v[2]}
    swap = (3, 4, 5, 0, 1, 2)
    ratio = None
    failures = []
    for r in range(order + 1):
        for alpha in monomials(r):
            left = C
            right = C
            for i, e in enumerate(alpha):
                left = left.diff(i, e)
                right = right.diff(3 + i, e)
            left = left.substitute(to_p)
            right = right.substitute(to_x).rename(swap)
            if not left and not right:
                continue
            if not left or not right:
                failures.append(alpha)
                continue
            mono = max(left.terms)
            rc = right.terms.get(mono)
            if rc is None:
                failures.append(alpha)
                continue
            c = left.terms[mono] / rc
            if ratio is None:
                ratio = c
            if c != ratio or left != right.scale(ratio):
                failures.append(alpha)
    return DualityResult(not failures, order, ratio, failures)
