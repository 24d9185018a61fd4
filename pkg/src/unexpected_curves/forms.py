"""Homogeneous polynomials in three variables (and two line parameters).

Ternary forms are sparse maps from exponent triples to nonzero
:class:`CycloScalar` coefficients.  Every term of a form has the same total
degree; the zero form keeps a degree tag so that degree bookkeeping survives
cancellation.  Monomials of a fixed degree are always listed in graded
lexicographic order with x > y > z (see :func:`monomials`).
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd, lcm

from .scalars import CycloScalar, as_scalar, evaluate_expression, format_scalar, root_of_unity

__all__ = [
    "monomials",
    "monomial_index",
    "multinomial",
    "TernaryForm",
    "BinaryForm",
    "ProjPoint",
    "X",
    "Y",
    "Z",
    "parse_form",
    "divides",
    "binary_gcd",
    "Polynomial",
    "cross",
    "veronese",
]

_ZERO = CycloScalar(0)
_ONE = CycloScalar(1)
VARS = ("x", "y", "z")


@lru_cache(maxsize=None)
def monomials(k):
    """Exponent triples of total degree k in graded-lex order (x > y > z).

    >>> monomials(2)
    ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
    """
    if k < 0:
        return ()
    return tuple((i, j, k - i - j) for i in range(k, -1, -1) for j in range(k - i, -1, -1))


@lru_cache(maxsize=None)
def monomial_index(k):
    return {m: pos for pos, m in enumerate(monomials(k))}


def multinomial(exps):
    out = factorial(sum(exps))
    for e in exps:
        out //= factorial(e)
    return out


def _grlex_key(mono):
    return tuple(-e for e in mono[:-1])


def _scalar(c):
    return c if isinstance(c, CycloScalar) else as_scalar(c)


class TernaryForm:
    """A homogeneous polynomial in x, y, z with cyclotomic coefficients."""

    __slots__ = ("_terms", "_degree")

    def __init__(self, terms=None, degree=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = _scalar(c)
                if c:
                    clean[tuple(mono)] = c
        degs = {sum(m) for m in clean}
        if len(degs) > 1:
            raise ValueError(f"non-homogeneous terms with degrees {sorted(degs)}")
        if degs:
            d = degs.pop()
            if degree is not None and degree != d:
                raise ValueError(f"declared degree {degree} but terms have degree {d}")
            degree = d
        self._terms = clean
        self._degree = 0 if degree is None else degree

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, degree=0):
        return cls({}, degree)

    @classmethod
    def constant(cls, c):
        return cls({(0, 0, 0): c}, 0)

    @classmethod
    def linear(cls, a, b, c):
        return cls({(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c}, 1)

    @classmethod
    def from_vector(cls, coeffs, degree):
        """Inverse of :meth:`to_vector`."""
        return cls(dict(zip(monomials(degree), coeffs)), degree)

    # -- accessors -------------------------------------------------------
    @property
    def degree(self):
        return self._degree

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms in graded-lex order."""
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]))

    def coefficient(self, mono):
        return self._terms.get(tuple(mono), _ZERO)

    def to_vector(self):
        return [self._terms.get(m, _ZERO) for m in monomials(self._degree)]

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def order(self):
        """Smallest cyclotomic order holding all coefficients as stored."""
        n = 1
        for c in self._terms.values():
            n = lcm(n, c.order)
        return n

    def is_rational(self):
        return all(c.is_rational() for c in self._terms.values())

    def leading(self):
        """(monomial, coefficient) of the graded-lex leading term."""
        if not self._terms:
            raise ValueError("zero form has no leading term")
        mono = min(self._terms, key=_grlex_key)
        return mono, self._terms[mono]

    # -- ring operations -------------------------------------------------
    def _combine(self, other, sign):
        if not isinstance(other, TernaryForm):
            if isinstance(other, (int, Fraction, CycloScalar)):
                other = TernaryForm.constant(other) if other else TernaryForm.zero(self._degree)
            else:
                return NotImplemented
        if self._terms and other._terms and self._degree != other._degree:
            raise ValueError(f"adding forms of degrees {self._degree} and {other._degree}")
        degree = self._degree if self._terms or not other._terms else other._degree
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m)
            v = c * sign if v is None else v + c * sign
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return TernaryForm._trusted(out, degree)

    @classmethod
    def _trusted(cls, terms, degree):
        obj = object.__new__(cls)
        obj._terms = terms
        obj._degree = degree
        return obj

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self)._combine(other, 1)

    def __neg__(self):
        return TernaryForm._trusted({m: -c for m, c in self._terms.items()}, self._degree)

    def scale(self, c):
        c = _scalar(c)
        if not c:
            return TernaryForm.zero(self._degree)
        return TernaryForm._trusted({m: v * c for m, v in self._terms.items()}, self._degree)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloScalar)):
            return self.scale(other)
        if not isinstance(other, TernaryForm):
            return NotImplemented
        out = {}
        for (a, b, c), u in self._terms.items():
            for (d, e, f), v in other._terms.items():
                m = (a + d, b + e, c + f)
                w = out.get(m)
                out[m] = u * v if w is None else w + u * v
        out = {m: c for m, c in out.items() if c}
        return TernaryForm._trusted(out, self._degree + other._degree)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, CycloScalar)):
            return self.scale(1 / _scalar(other))
        if isinstance(other, TernaryForm):
            q, r = self.divmod(other)
            if r:
                raise ValueError("form division is not exact")
            return q
        return NotImplemented

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = TernaryForm.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycloScalar)):
            other = TernaryForm.constant(other) if other else TernaryForm.zero()
        if not isinstance(other, TernaryForm):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- calculus ----------------------------------------------------------
    def diff(self, var):
        """Formal partial derivative; ``var`` is 0/1/2 or 'x'/'y'/'z'."""
        v = VARS.index(var) if isinstance(var, str) else var
        out = {}
        for mono, c in self._terms.items():
            e = mono[v]
            if e:
                m = list(mono)
                m[v] -= 1
                out[tuple(m)] = c * e
        return TernaryForm._trusted(out, max(self._degree - 1, 0))

    def gradient(self):
        return tuple(self.diff(v) for v in range(3))

    def partial(self, alpha):
        """Mixed partial derivative d^alpha for an exponent triple alpha."""
        out = {}
        for mono, c in self._terms.items():
            if all(e >= a for e, a in zip(mono, alpha)):
                fac = 1
                for e, a in zip(mono, alpha):
                    for t in range(a):
                        fac *= e - t
                out[tuple(e - a for e, a in zip(mono, alpha))] = c * fac
        return TernaryForm._trusted(out, max(self._degree - sum(alpha), 0))

    def evaluate(self, point):
        """Value at the given coordinates (a ProjPoint uses its canonical representative)."""
        coords = tuple(point)
        pw = _power_tables(coords, self._degree)
        acc = _ZERO
        for (i, j, l), c in self._terms.items():
            acc = acc + c * pw[0][i] * pw[1][j] * pw[2][l]
        return acc

    __call__ = evaluate

    def substitute_linear(self, sx, sy, sz):
        """p(sx, sy, sz) for linear forms sx, sy, sz."""
        subs = (sx, sy, sz)
        for s in subs:
            if not isinstance(s, TernaryForm) or (s and s.degree != 1):
                raise ValueError("substituents must be linear ternary forms")
        powers = [[TernaryForm.constant(1)] for _ in range(3)]
        for v in range(3):
            for _ in range(self._degree):
                powers[v].append(powers[v][-1] * subs[v])
        out = TernaryForm.zero(self._degree)
        for (i, j, l), c in self._terms.items():
            out = out + (powers[0][i] * powers[1][j] * powers[2][l]).scale(c)
        return TernaryForm._trusted(out._terms, self._degree)

    def restrict_to_line(self, p0, p1):
        """The binary form (lam, mu) -> p(lam * p0 + mu * p1)."""
        # raw coordinates: normalizing would rescale lam and mu independently
        p0 = tuple(_scalar(c) for c in p0)
        p1 = tuple(_scalar(c) for c in p1)
        if not any(cross(p0, p1)):
            raise ValueError("restriction needs two distinct points")
        lins = [BinaryForm({(1, 0): p0[v], (0, 1): p1[v]}, 1) for v in range(3)]
        powers = [[BinaryForm.constant(1)] for _ in range(3)]
        for v in range(3):
            for _ in range(self._degree):
                powers[v].append(powers[v][-1] * lins[v])
        acc = {}
        for (i, j, l), c in self._terms.items():
            term = powers[0][i] * powers[1][j] * powers[2][l]
            for m, v in term._terms.items():
                w = acc.get(m)
                acc[m] = c * v if w is None else w + c * v
        return BinaryForm(acc, self._degree)

    def multiplicity_at(self, point):
        """Largest m such that every partial derivative of order < m vanishes at the point."""
        if not self._terms:
            raise ValueError("multiplicity of the zero form is undefined")
        point = tuple(point)
        layer = {(0, 0, 0): self}
        for m in range(self._degree + 1):
            if any(g.evaluate(point) for g in layer.values()):
                return m
            nxt = {}
            for alpha, g in layer.items():
                for v in range(3):
                    beta = list(alpha)
                    beta[v] += 1
                    beta = tuple(beta)
                    if beta not in nxt:
                        nxt[beta] = g.diff(v)
            layer = nxt
        raise AssertionError("nonzero form vanishing to order above its degree")

    # -- division ----------------------------------------------------------
    def divmod(self, divisor):
        """Division by one form with graded-lex leading terms: (q, r) with self = q*divisor + r.

        With a single divisor the remainder is zero exactly when divisor | self.
        """
        if not divisor:
            raise ZeroDivisionError("division by the zero form")
        lead_m, lead_c = divisor.leading()
        inv = lead_c.inverse()
        rem = dict(self._terms)
        quot = {}
        out_rem = {}
        dterms = list(divisor._terms.items())
        while rem:
            mono = min(rem, key=_grlex_key)
            c = rem[mono]
            if all(e >= f for e, f in zip(mono, lead_m)):
                qm = tuple(e - f for e, f in zip(mono, lead_m))
                qc = c * inv
                quot[qm] = quot.get(qm, _ZERO) + qc
                for dm, dc in dterms:
                    m = tuple(a + b for a, b in zip(qm, dm))
                    v = rem.get(m, _ZERO) - qc * dc
                    if v:
                        rem[m] = v
                    else:
                        rem.pop(m, None)
            else:
                out_rem[mono] = c
                del rem[mono]
        qdeg = max(self._degree - divisor._degree, 0)
        return TernaryForm(quot, qdeg), TernaryForm._trusted(out_rem, self._degree)

    def is_divisible_by(self, divisor):
        if not self._terms:
            return True
        if divisor.degree > self._degree:
            return False
        return not self.divmod(divisor)[1]

    # -- normalization -----------------------------------------------------
    def normalized(self):
        """Scale so the graded-lex leading coefficient is 1."""
        if not self._terms:
            return self
        return self.scale(self.leading()[1].inverse())

    def primitive(self):
        """Canonical representative up to scalar.

        Rational forms get coprime integer coefficients with a positive
        leading coefficient; other forms are made monic.
        """
        if not self._terms:
            return self
        if not self.is_rational():
            return self.normalized()
        fr = {m: c.to_fraction() for m, c in self._terms.items()}
        den = 1
        for v in fr.values():
            den = lcm(den, v.denominator)
        nums = {m: int(v * den) for m, v in fr.items()}
        g = 0
        for v in nums.values():
            g = gcd(g, v)
        lead = nums[self.leading()[0]]
        if lead < 0:
            g = -g
        return TernaryForm({m: Fraction(v, g) for m, v in nums.items()}, self._degree)

    def equal_up_to_scalar(self, other):
        if not self or not other:
            return not self and not other
        return self.normalized() == other.normalized()

    # -- printing ------------------------------------------------------------
    def __str__(self):
        return format_form(self)

    def __repr__(self):
        return f"TernaryForm({str(self)!r}, degree={self._degree})"


def _power_tables(coords, degree):
    tables = []
    for c in coords:
        row = [_ONE]
        for _ in range(degree):
            row.append(row[-1] * c)
        tables.append(row)
    return tables


def _format_monomial(mono, names):
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_form(form, names=VARS, root="e"):
    """Text such as ``49*x^3*y - 49*x*y^3``; parsed back by :func:`parse_form`."""
    items = form.items() if isinstance(form, TernaryForm) else form.items()
    if not items:
        return "0"
    out = []
    for mono, c in items:
        mstr = _format_monomial(mono, names)
        cstr = format_scalar(c, root)
        negative = False
        if c.is_rational():
            negative = c.to_fraction() < 0
            cstr = str(abs(c.to_fraction()))
        elif " " in cstr:
            cstr = f"({cstr})"
        if mstr:
            body = mstr if cstr == "1" else f"{cstr}*{mstr}"
        else:
            body = cstr
        out.append(("-" if negative else "+", body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


X = TernaryForm({(1, 0, 0): 1}, 1)
Y = TernaryForm({(0, 1, 0): 1}, 1)
Z = TernaryForm({(0, 0, 1): 1}, 1)


def parse_form(text, order=1, extra=None):
    """Parse a ternary form written in x, y, z with ``e`` = zeta_order.

    ``extra`` binds further single-letter names (e.g. the general point
    a, b, c of a stored fixture) to scalars.
    """
    names = {"x": X, "y": Y, "z": Z, "e": root_of_unity(order)}
    if extra:
        names.update(extra)
    value = evaluate_expression(text, names)
    if isinstance(value, TernaryForm):
        return value
    return TernaryForm.constant(value)


def divides(a, b):
    """True iff the form a divides the form b exactly."""
    if not a:
        raise ValueError("divisibility by the zero form")
    return b.is_divisible_by(a)


# -- binary forms ------------------------------------------------------------
class BinaryForm:
    """A homogeneous polynomial in the line parameters (lam, mu)."""

    __slots__ = ("_terms", "_degree")

    def __init__(self, terms=None, degree=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = _scalar(c)
                if c:
                    clean[tuple(mono)] = c
        degs = {sum(m) for m in clean}
        if len(degs) > 1:
            raise ValueError("non-homogeneous binary form")
        if degs:
            d = degs.pop()
            if degree is not None and degree != d:
                raise ValueError(f"declared degree {degree} but terms have degree {d}")
            degree = d
        self._terms = clean
        self._degree = 0 if degree is None else degree

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c}, 0)

    @classmethod
    def zero(cls, degree=0):
        return cls({}, degree)

    @classmethod
    def from_coeffs(cls, coeffs):
        """coeffs[i] multiplies lam^(d-i) mu^i, d = len(coeffs) - 1."""
        d = len(coeffs) - 1
        return cls({(d - i, i): c for i, c in enumerate(coeffs)}, d)

    @property
    def degree(self):
        return self._degree

    @property
    def terms(self):
        return dict(self._terms)

    def coeffs(self):
        """Dense coefficient list in the :meth:`from_coeffs` convention."""
        d = self._degree
        return [self._terms.get((d - i, i), _ZERO) for i in range(d + 1)]

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: -kv[0][0])

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def _combine(self, other, sign):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self._terms and other._terms and self._degree != other._degree:
            raise ValueError("adding binary forms of different degrees")
        degree = self._degree if self._terms or not other._terms else other._degree
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, _ZERO) + c * sign
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return BinaryForm(out, degree)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return BinaryForm({m: -c for m, c in self._terms.items()}, self._degree)

    def scale(self, c):
        c = _scalar(c)
        return BinaryForm({m: v * c for m, v in self._terms.items()}, self._degree)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloScalar)):
            return self.scale(other)
        if not isinstance(other, BinaryForm):
            return NotImplemented
        out = {}
        for (a, b), u in self._terms.items():
            for (c, d), v in other._terms.items():
                m = (a + c, b + d)
                w = out.get(m)
                out[m] = u * v if w is None else w + u * v
        return BinaryForm(out, self._degree + other._degree)

    __rmul__ = __mul__

    def __pow__(self, e):
        result = BinaryForm.constant(1)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def evaluate(self, lam, mu):
        lam, mu = _scalar(lam), _scalar(mu)
        acc = _ZERO
        for (i, j), c in self._terms.items():
            acc = acc + c * lam**i * mu**j
        return acc

    __call__ = evaluate

    def compose(self, lam_form, mu_form):
        """Substitute linear ternary forms for (lam, mu); returns a TernaryForm."""
        pl = [TernaryForm.constant(1)]
        pm = [TernaryForm.constant(1)]
        for _ in range(self._degree):
            pl.append(pl[-1] * lam_form)
            pm.append(pm[-1] * mu_form)
        out = TernaryForm.zero(self._degree)
        for (i, j), c in self._terms.items():
            out = out + (pl[i] * pm[j]).scale(c)
        return out

    def normalized(self):
        if not self._terms:
            return self
        lead = self.items()[0][1]
        return self.scale(lead.inverse())

    def equal_up_to_scalar(self, other):
        if not self or not other:
            return not self and not other
        return self.normalized() == other.normalized()

    def mu_valuation(self):
        """Exponent of the largest power of mu dividing the form."""
        return min(j for (_, j) in self._terms)

    def divmod(self, other):
        """Exact-or-not division of homogeneous binary forms (mu-adic order)."""
        q, r = _udivmod(_dehom(self), _dehom(other))
        qd = max(self._degree - other._degree, 0)
        return _hom(q, qd), _hom(r, self._degree)

    def divides(self, other):
        """True iff self divides other."""
        if not self:
            raise ValueError("divisibility by the zero form")
        if not other:
            return True
        if self._degree > other._degree or self.mu_valuation() > other.mu_valuation():
            return False
        a = _strip_mu(self)
        b = _strip_mu(other)
        return not any(_udivmod(b, a)[1])

    def exact_div(self, other):
        if not other.divides(self):
            raise ValueError("binary form division is not exact")
        va, vb = self.mu_valuation(), other.mu_valuation()
        q, _ = _udivmod(_strip_mu(self), _strip_mu(other))
        qd = self._degree - other._degree
        out = {}
        for i, c in enumerate(q):
            if c:
                out[(i, qd - i)] = c
        return BinaryForm(out, qd)

    def __str__(self):
        return format_form(self, names=("lam", "mu"))

    def __repr__(self):
        return f"BinaryForm({str(self)!r}, degree={self._degree})"


def _dehom(bf):
    # polynomial in t = lam/mu, lowest degree first: coefficient of lam^i
    out = [_ZERO] * (bf.degree + 1)
    for (i, _), c in bf._terms.items():
        out[i] = c
    return _trim(out)


def _strip_mu(bf):
    return _dehom(bf)


def _hom(poly, degree):
    return BinaryForm({(i, degree - i): c for i, c in enumerate(poly) if c}, degree)


def _trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def _udivmod(num, den):
    num = _trim(num)
    den = _trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if len(num) < len(den):
        return [], num
    inv = den[-1].inverse()
    num = list(num)
    q = [_ZERO] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c:
            c = c * inv
            q[i] = c
            for j, d in enumerate(den):
                num[i + j] = num[i + j] - c * d
    return _trim(q), _trim(num[: len(den) - 1])


def _ugcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _udivmod(a, b)[1]
    if not a:
        return a
    inv = a[-1].inverse()
    return [c * inv for c in a]


def binary_gcd(a, b):
    """Monic gcd of two binary forms (Euclid on t = lam/mu plus the mu content)."""
    if not a or not b:
        raise ValueError("gcd with the zero binary form")
    v = min(a.mu_valuation(), b.mu_valuation())
    g = _ugcd(_dehom(a), _dehom(b))
    deg = len(g) - 1 + v
    return BinaryForm({(i, deg - i): c for i, c in enumerate(g) if c}, deg)


# -- projective points -------------------------------------------------------
class ProjPoint:
    """A point of the projective plane, scaled so its first nonzero coordinate is 1."""

    __slots__ = ("coords",)

    def __init__(self, a, b=None, c=None):
        coords = tuple(a) if b is None else (a, b, c)
        if len(coords) != 3:
            raise ValueError("a projective point has three coordinates")
        coords = tuple(_scalar(v) for v in coords)
        for v in coords:
            if v:
                inv = v.inverse()
                break
        else:
            raise ValueError("(0, 0, 0) is not a projective point")
        self.coords = tuple(v * inv for v in coords)

    @classmethod
    def coerce(cls, p):
        return p if isinstance(p, ProjPoint) else cls(p)

    @classmethod
    def parse(cls, text, order=1):
        parts = [s for s in text.replace(";", ",").split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected three comma-separated coordinates, got {text!r}")
        return cls([as_scalar(p.strip(), order) for p in parts])

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return 3

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            try:
                other = ProjPoint(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def dot(self, other):
        return sum((a * b for a, b in zip(self.coords, other)), _ZERO)

    def linear_form(self):
        """The dual linear form a*x + b*y + c*z."""
        return TernaryForm.linear(*self.coords)

    def is_rational(self):
        return all(c.is_rational() for c in self.coords)

    def __str__(self):
        return "(" + ", ".join(format_scalar(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"ProjPoint{str(self)}"


def cross(u, v):
    u, v = tuple(u), tuple(v)
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def veronese(point, k):
    """Coefficients of (a x + b y + c z)^k in the :func:`monomials` order."""
    a, b, c = tuple(point)
    return [multinomial(m) * a ** m[0] * b ** m[1] * c ** m[2] for m in monomials(k)]


def binomial(n, k):
    return comb(n, k) if 0 <= k <= n else 0


# -- small multivariate polynomials (biforms for the duality check) ----------
class Polynomial:
    """Sparse polynomial in a fixed number of variables (at most six)."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars, terms=None):
        if not 1 <= nvars <= 6:
            raise ValueError("Polynomial supports 1 to 6 variables")
        self.nvars = nvars
        clean = {}
        for mono, c in (terms or {}).items():
            c = _scalar(c)
            if c:
                if len(mono) != nvars:
                    raise ValueError("exponent length does not match the variable count")
                clean[tuple(mono)] = c
        self._terms = clean

    @classmethod
    def variable(cls, nvars, i):
        return cls(nvars, {tuple(1 if t == i else 0 for t in range(nvars)): 1})

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def from_form(cls, form, offset=0, nvars=6):
        """Embed a ternary form in variables offset..offset+2."""
        out = {}
        for m, c in form.terms.items():
            key = [0] * nvars
            key[offset:offset + 3] = m
            out[tuple(key)] = c
        return cls(nvars, out)

    @property
    def terms(self):
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, _ZERO) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.nvars, out)

    def __neg__(self):
        return Polynomial(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = _scalar(c)
        return Polynomial(self.nvars, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        out = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = tuple(a + b for a, b in zip(ma, mb))
                v = out.get(m)
                out[m] = ca * cb if v is None else v + ca * cb
        return Polynomial(self.nvars, out)

    def __pow__(self, e):
        out = Polynomial.constant(self.nvars, 1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def diff(self, var, times=1):
        out = dict(self._terms)
        for _ in range(times):
            nxt = {}
            for m, c in out.items():
                if m[var]:
                    mm = list(m)
                    mm[var] -= 1
                    nxt[tuple(mm)] = c * m[var]
            out = nxt
        return Polynomial(self.nvars, out)

    def rename(self, perm):
        """Send variable i to variable perm[i]."""
        out = {}
        for m, c in self._terms.items():
            key = [0] * self.nvars
            for i, e in enumerate(m):
                key[perm[i]] += e
            out[tuple(key)] = out.get(tuple(key), _ZERO) + c
        return Polynomial(self.nvars, out)

    def substitute(self, mapping):
        """Replace variable i by mapping[i] (a Polynomial) for the listed i."""
        out = Polynomial(self.nvars)
        for m, c in self._terms.items():
            term = Polynomial.constant(self.nvars, c)
            key = list(m)
            for i, e in enumerate(m):
                if i in mapping and e:
                    term = term * mapping[i] ** e
                    key[i] = 0
            term = term * Polynomial(self.nvars, {tuple(key): 1})
            out = out + term
        return out

    def normalized(self):
        if not self._terms:
            return self
        lead = self._terms[max(self._terms)]
        return self.scale(lead.inverse())
