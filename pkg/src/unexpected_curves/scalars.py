"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element of Q(zeta_n) is stored as an integer coefficient vector over the
power basis 1, zeta, ..., zeta^(phi(n)-1) together with one positive common
denominator.  Products are reduced modulo the n-th cyclotomic polynomial, so
the representation of every value is unique for a given order.  Values of
different orders are combined by embedding both into Q(zeta_lcm).
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
import ast
import re

__all__ = [
    "CycloScalar",
    "root_of_unity",
    "cyclotomic_polynomial",
    "euler_phi",
    "parse_scalar",
    "as_scalar",
    "ZERO",
    "ONE",
]


def euler_phi(n):
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num, den):
    # integer polynomials as coefficient lists, lowest degree first; den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + len(den) - 1]
        out[i] = q
        if q:
            for j, c in enumerate(den):
                num[i + j] -= q * c
    assert not any(num), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of Phi_n (lowest degree first), as a tuple of ints."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class _Order:
    """Precomputed reduction data for one cyclotomic order."""

    def __init__(self, n):
        self.n = n
        self.phi = phi = euler_phi(n)
        cyc = cyclotomic_polynomial(n)
        # powers[e] = zeta^e written in the power basis, e = 0 .. max(n, 2 phi)
        top = max(n, 2 * phi)
        powers = []
        vec = [1] + [0] * (phi - 1)
        for _ in range(top + 1):
            powers.append(tuple(vec))
            carry = vec[-1]
            vec = [0] + vec[:-1]
            if carry:
                for i in range(phi):
                    vec[i] -= carry * cyc[i]
        self.powers = powers
        self.units = [j for j in range(1, n + 1) if gcd(j, n) == 1]
        # normalized trace Tr(zeta^i) / phi(n), invariant under field extension
        self.traces = tuple(_ramanujan_term(n, i) for i in range(phi))


def _mobius(m):
    result, p = 1, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def _ramanujan_term(n, e):
    # (1/phi(n)) * Tr(zeta_n^e), i.e. mu(n/g) / phi(n/g) with g = gcd(e, n)
    g = gcd(e, n)
    m = n // g
    return Fraction(_mobius(m), euler_phi(m))


@lru_cache(maxsize=None)
def _order(n):
    return _Order(n)


@lru_cache(maxsize=None)
def _embedding(n, big):
    """Images of zeta_n^i (i < phi(n)) inside Q(zeta_big)."""
    step = big // n
    data = _order(big)
    return tuple(data.powers[(i * step) % big] for i in range(_order(n).phi))


def _normalize(num, den):
    g = den
    for c in num:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if not any(num):
        return tuple(0 for _ in num), 1
    if den < 0:
        g = -g
    if g != 1:
        num = tuple(c // g for c in num)
        den //= g
    return tuple(num), den


class CycloScalar:
    """An exact element of the cyclotomic field Q(zeta_n).

    Instances are immutable.  ``CycloScalar(3)`` and ``CycloScalar(Fraction(1, 2))``
    build rationals (order 1); use :func:`root_of_unity` for zeta_n.
    """

    __slots__ = ("_n", "_num", "_den")

    def __init__(self, value=0, order=1):
        if isinstance(value, CycloScalar):
            other = value._embed(lcm(value._n, order))
            self._n, self._num, self._den = other._n, other._num, other._den
            return
        value = Fraction(value)
        phi = _order(order).phi
        self._n = order
        self._num = (value.numerator,) + (0,) * (phi - 1)
        self._den = value.denominator

    @classmethod
    def _raw(cls, n, num, den):
        obj = object.__new__(cls)
        obj._n = n
        obj._num, obj._den = _normalize(num, den)
        return obj

    @classmethod
    def from_coeffs(cls, coeffs, order):
        """Build sum(coeffs[i] * zeta^i); coeffs may be longer than phi(order)."""
        data = _order(order)
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = lcm(den, c.denominator)
        acc = [0] * data.phi
        for i, c in enumerate(fr):
            if not c:
                continue
            ci = c.numerator * (den // c.denominator)
            vec = data.powers[i % order] if order > 1 else (1,)
            for j, v in enumerate(vec):
                if v:
                    acc[j] += ci * v
        return cls._raw(order, tuple(acc), den)

    # -- basic accessors -------------------------------------------------
    @property
    def order(self):
        return self._n

    @property
    def coeffs(self):
        """Rational coordinates in the power basis of Q(zeta_order)."""
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_zero(self):
        return not any(self._num)

    def __bool__(self):
        return any(self._num)

    def is_rational(self):
        return not any(self._num[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    # -- embeddings ------------------------------------------------------
    def _embed(self, big):
        if big == self._n:
            return self
        images = _embedding(self._n, big)
        acc = [0] * _order(big).phi
        for c, img in zip(self._num, images):
            if c:
                for j, v in enumerate(img):
                    if v:
                        acc[j] += c * v
        return CycloScalar._raw(big, tuple(acc), self._den)

    def embed(self, order):
        """Return the same value viewed inside Q(zeta_order)."""
        if order % self._n:
            raise ValueError(f"Q(zeta_{self._n}) does not embed in Q(zeta_{order})")
        return self._embed(order)

    @staticmethod
    def _coerce(other):
        if isinstance(other, CycloScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return CycloScalar(other)
        return NotImplemented

    def _align(self, other):
        if self._n == other._n:
            return self, other
        n = lcm(self._n, other._n)
        return self._embed(n), other._embed(n)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            if not other:
                return self
            num = list(self._num)
            num[0] += other * self._den
            return CycloScalar._raw(self._n, tuple(num), self._den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._align(other)
        if a._den == b._den:
            num = tuple(x + y for x, y in zip(a._num, b._num))
            return CycloScalar._raw(a._n, num, a._den)
        num = tuple(x * b._den + y * a._den for x, y in zip(a._num, b._num))
        return CycloScalar._raw(a._n, num, a._den * b._den)

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(CycloScalar)
        obj._n, obj._num, obj._den = self._n, tuple(-c for c in self._num), self._den
        return obj

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloScalar._raw(self._n, tuple(c * other for c in self._num), self._den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._align(other)
        n = a._n
        if n <= 2:
            return CycloScalar._raw(n, (a._num[0] * b._num[0],), a._den * b._den)
        data = _order(n)
        phi = data.phi
        if b.is_rational():
            s = b._num[0]
            return CycloScalar._raw(n, tuple(c * s for c in a._num), a._den * b._den)
        if a.is_rational():
            s = a._num[0]
            return CycloScalar._raw(n, tuple(c * s for c in b._num), a._den * b._den)
        prod = [0] * (2 * phi - 1)
        for i, x in enumerate(a._num):
            if x:
                for j, y in enumerate(b._num):
                    if y:
                        prod[i + j] += x * y
        acc = prod[:phi]
        powers = data.powers
        for e in range(phi, 2 * phi - 1):
            c = prod[e]
            if c:
                for j, v in enumerate(powers[e]):
                    if v:
                        acc[j] += c * v
        return CycloScalar._raw(n, tuple(acc), a._den * b._den)

    __rmul__ = __mul__

    def galois(self, j):
        """Apply the automorphism zeta -> zeta^j (gcd(j, n) = 1)."""
        n = self._n
        if gcd(j, n) != 1:
            raise ValueError(f"{j} is not a unit modulo {n}")
        if n <= 2:
            return self
        data = _order(n)
        acc = [0] * data.phi
        for i, c in enumerate(self._num):
            if c:
                for t, v in enumerate(data.powers[(i * j) % n]):
                    if v:
                        acc[t] += c * v
        return CycloScalar._raw(n, tuple(acc), self._den)

    def norm(self):
        """Field norm down to Q, as a Fraction."""
        result = CycloScalar(1)
        for j in _order(self._n).units:
            result = result * self.galois(j)
        return result.to_fraction()

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycloScalar._raw(self._n, (self._den,) + (0,) * (len(self._num) - 1), self._num[0])
        co = CycloScalar(1, self._n)
        for j in _order(self._n).units:
            if j != 1:
                co = co * self.galois(j)
        nrm = (self * co).to_fraction()
        return co * (1 / nrm)

    inv = inverse

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            other = Fraction(other)
            return CycloScalar._raw(
                self._n,
                tuple(c * other.denominator for c in self._num),
                self._den * other.numerator,
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloScalar(1, self._n)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- comparisons -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        if not isinstance(other, CycloScalar):
            return NotImplemented
        a, b = self._align(other)
        return a._num == b._num and a._den == b._den

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self._num[0], self._den))
        # normalized trace is independent of the ambient cyclotomic field
        data = _order(self._n)
        tr = sum((c * t for c, t in zip(self._num, data.traces)), Fraction(0))
        return hash(("cyclo", tr / self._den))

    def sort_key(self):
        """A deterministic (not field-compatible) total order, for printing."""
        return (self._n, self.coeffs)

    def __repr__(self):
        return f"CycloScalar({str(self)!r}, order={self._n})"

    def __str__(self):
        return format_scalar(self)


def format_scalar(s, root="e"):
    """Text form, e.g. ``1 + e``, ``-3/2*e^2``; inverse of :func:`parse_scalar`."""
    parts = []
    for i, c in enumerate(s.coeffs):
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = root if i == 1 else f"{root}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def root_of_unity(n):
    """The primitive n-th root of unity zeta_n = exp(2 pi i / n)."""
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        return CycloScalar(1)
    if n == 2:
        return CycloScalar(-1, 2)
    return CycloScalar.from_coeffs([0, 1], n)


def as_scalar(value, order=1):
    if isinstance(value, CycloScalar):
        return value
    if isinstance(value, str):
        return parse_scalar(value, order)
    return CycloScalar(value, order)


ZERO = CycloScalar(0)
ONE = CycloScalar(1)


# -- text parsing --------------------------------------------------------
_IMPLICIT = re.compile(r"(?<=[0-9A-Za-z)])\s*(?=[A-Za-z(])")


def evaluate_expression(text, names):
    """Evaluate a polynomial expression over the objects bound in ``names``.

    Accepts integers, ``+ - * / ^``, parentheses and single-letter names;
    juxtaposition means multiplication (``5b^4c`` is ``5*b^4*c``).
    """
    src = text.strip().replace("^", "**")
    src = _IMPLICIT.sub("*", src)
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse expression {text!r}") from exc

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name):
            if node.id not in names:
                raise ValueError(f"unknown symbol {node.id!r} in {text!r}")
            return names[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = ev(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp):
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                if isinstance(left, int) and isinstance(right, int):
                    return Fraction(left, right)
                return left / right
            if isinstance(node.op, ast.Pow):
                if not isinstance(right, int) or right < 0:
                    raise ValueError(f"exponent must be a nonnegative integer in {text!r}")
                return left**right
        raise ValueError(f"unsupported syntax in {text!r}")

    return ev(tree)


def parse_scalar(text, order=1):
    """Parse ``"3"``, ``"-3/2*e"``, ``"1+e^2"``; ``e`` is zeta_order."""
    if isinstance(text, (int, Fraction)):
        return CycloScalar(text, order)
    value = evaluate_expression(str(text), {"e": root_of_unity(order)})
    return as_scalar(value, order) if not isinstance(value, CycloScalar) else value
