"""Point configurations with their dual line arrangements and generic lines."""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
import json
import random

from .forms import ProjPoint, TernaryForm, cross
from .scalars import CycloScalar, as_scalar, root_of_unity

__all__ = [
    "PointConfig",
    "Arrangement",
    "GenericLine",
    "GenericityError",
    "build_arrangement",
    "b3",
    "fermat_dual",
    "make_generic_line",
    "load_points",
    "random_config",
]


class GenericityError(RuntimeError):
    """Random sampling could not produce (or certify) a generic object."""


@dataclass(frozen=True)
class PointConfig:
    """A finite set Z of distinct points in the dual plane."""

    order: int
    points: tuple
    name: str = "custom"

    def __post_init__(self):
        pts = tuple(ProjPoint.coerce(p) for p in self.points)
        if len(set(pts)) != len(pts):
            raise ValueError("configuration contains a repeated point")
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def to_json(self):
        return {
            "order": self.order,
            "points": [[str(c) for c in p] for p in self.points],
        }


def load_points(source, name=None):
    """Read a configuration from a JSON dict or a path to a JSON file.

    Schema: ``{"order": n, "points": [["1", "e", "e^2"], ...]}``.
    """
    if not isinstance(source, dict):
        with open(source) as fh:
            source = json.load(fh)
    order = int(source.get("order", 1))
    pts = [ProjPoint([as_scalar(str(c), order) for c in p]) for p in source["points"]]
    return PointConfig(order, tuple(pts), name or source.get("name", "custom"))


def b3():
    """The nine points dual to the lines of the B3 arrangement."""
    pts = [
        (1, 0, 0), (0, 1, 0), (0, 0, 1),
        (1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1), (0, 1, 1), (0, 1, -1),
    ]
    return PointConfig(1, tuple(ProjPoint(p) for p in pts), "B3")


def fermat_dual(n):
    """The n^2 + 3 points dual to the factors of x y z prod (x + e^i y + e^j z)."""
    if n < 3:
        raise ValueError("fermat_dual needs n >= 3")
    e = root_of_unity(n)
    one, zero = CycloScalar(1, n), CycloScalar(0, n)
    pts = [ProjPoint(one, zero, zero), ProjPoint(zero, one, zero), ProjPoint(zero, zero, one)]
    for i in range(n):
        for j in range(n):
            pts.append(ProjPoint(one, e**i, e**j))
    return PointConfig(n, tuple(pts), f"DF{n}")


@dataclass
class Arrangement:
    """The line arrangement dual to Z with its defining polynomial and Jacobian."""

    config: PointConfig
    linear_forms: tuple
    f: TernaryForm
    jacobian: tuple
    _intersections: list = field(default=None, repr=False)

    @property
    def size(self):
        return len(self.config)

    @property
    def points(self):
        return self.config.points

    def intersection_points(self):
        """Pairwise intersections of the arrangement lines (with repetition removed)."""
        if self._intersections is None:
            seen = set()
            for p, q in combinations(self.config.points, 2):
                seen.add(ProjPoint(cross(p, q)))
            self._intersections = sorted(seen, key=str)
        return self._intersections

    def euler_identity_holds(self):
        x, y, z = (TernaryForm({m: 1}, 1) for m in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        fx, fy, fz = self.jacobian
        return x * fx + y * fy + z * fz == self.f.scale(self.f.degree)


def build_arrangement(Z):
    """The product f of the dual linear forms, with its gradient."""
    if len(set(Z.points)) != len(Z.points):
        raise ValueError("duplicate point in configuration")
    forms = tuple(p.linear_form() for p in Z.points)
    f = TernaryForm.constant(1)
    for l in forms:
        f = f * l
    arr = Arrangement(Z, forms, f, f.gradient())
    if f.degree != len(Z) or not arr.euler_identity_holds():
        raise AssertionError("arrangement invariants violated")
    return arr


@dataclass(frozen=True)
class GenericLine:
    """A line alpha*a + beta*b + gamma*c = 0 with a fixed parametrization.

    ``span`` = (p0, p1) spans the line and ``lambda_mu`` are linear forms with
    (alpha, beta, gamma) x (x, y, z) = lambda(x,y,z) * p0 + mu(x,y,z) * p1.
    """

    dual_point: ProjPoint
    span: tuple
    lambda_mu: tuple

    @classmethod
    def from_dual_point(cls, point):
        P = ProjPoint.coerce(point)
        al, be, ga = P.coords
        if not ga:
            raise ValueError("the parametrization needs gamma != 0")
        # P x e1 and P x e2 span the line whenever gamma != 0
        p0 = (al * 0, ga, -be)
        p1 = (-ga, al * 0, al)
        lam = TernaryForm.linear(1, 0, -al / ga)
        mu = TernaryForm.linear(0, 1, -be / ga)
        return cls(P, (p0, p1), (lam, mu))

    @property
    def form(self):
        return self.dual_point.linear_form()

    def point_at(self, lam, mu):
        lam, mu = as_scalar(lam), as_scalar(mu)
        p0, p1 = self.span
        return tuple(lam * a + mu * b for a, b in zip(p0, p1))

    def parameter_of(self, Q):
        """(lam, mu) with Q proportional to lam*p0 + mu*p1; Q must lie on the line."""
        Q = tuple(Q)
        if self.dual_point.dot(Q):
            raise ValueError("point is not on the line")
        ga = self.dual_point[2]
        return (Q[1] / ga, -Q[0] / ga)

    def check(self, samples=3):
        """Verify the defining identities of the parametrization exactly."""
        P = self.dual_point
        p0, p1 = self.span
        if P.dot(p0) or P.dot(p1) or not any(cross(p0, p1)):
            return False
        lam, mu = self.lambda_mu
        if lam.evaluate(P) or mu.evaluate(P):
            return False
        rng = random.Random(12345)
        for _ in range(samples):
            X = tuple(CycloScalar(rng.randint(-9, 9)) for _ in range(3))
            lhs = cross(P, X)
            lv, mv = lam.evaluate(X), mu.evaluate(X)
            rhs = tuple(lv * a + mv * b for a, b in zip(p0, p1))
            if lhs != rhs:
                return False
        return True

    def __str__(self):
        return "L: " + str(self.form)


def is_generic_line(arrangement, point):
    """Filter used when sampling: nonzero coordinates and no arrangement vertex on the line."""
    P = ProjPoint.coerce(point)
    if any(not c for c in P.coords):
        return False
    return all(P.dot(v) for v in arrangement.intersection_points())


def _random_rational(rng, bound):
    num = rng.randint(-bound, bound)
    den = rng.randint(1, bound)
    return Fraction(num, den)


def make_generic_line(arrangement, seed=0, bound=20, max_tries=1000):
    """Draw a reproducible generic line for the arrangement."""
    if bound < 2:
        raise ValueError("bound must be at least 2")
    rng = random.Random(seed)
    for _ in range(max_tries):
        P = tuple(_random_rational(rng, bound) for _ in range(3))
        if not all(P):
            continue
        if is_generic_line(arrangement, P):
            return GenericLine.from_dual_point(P)
    raise GenericityError(f"no generic line found after {max_tries} draws")


def random_point(rng, bound=20):
    """A random rational point with nonzero coordinates."""
    while True:
        P = tuple(_random_rational(rng, bound) for _ in range(3))
        if all(P):
            return ProjPoint(P)


def random_config(seed, size, bound=6):
    """``size`` distinct random integer points, reproducible from ``seed``."""
    rng = random.Random(f"config-{seed}")
    pts = []
    while len(pts) < size:
        p = tuple(rng.randint(-bound, bound) for _ in range(3))
        if not any(p):
            continue
        q = ProjPoint(p)
        if q not in pts:
            pts.append(q)
    return PointConfig(1, tuple(pts), f"random{seed}-{size}")
