"""Dimensions of plane curves through Z with a fat point at a generic P.

Two encodings of the condition "multiplicity >= j at P" are provided:

``stacked``
    one row per partial derivative of order < j evaluated at P, stacked under
    the evaluation rows of Z.
``chart``
    a rational change of coordinates moves P to (0, 0, 1); there the condition
    just deletes the monomials x^a y^b z^c with a + b < j, leaving a small
    |Z| x (C(t+2,2) - C(j+1,2)) evaluation matrix.

Both are exact; ``chart`` is the default because its matrices are far smaller.
"""

from dataclasses import dataclass, field
from math import comb
import random

from .arrangements import GenericityError, random_point
from .forms import ProjPoint, monomials
from .linalg import rank
from .scalars import CycloScalar

__all__ = [
    "DimTable",
    "evaluation_matrix",
    "ideal_dimension",
    "imposes_independent",
    "fatpoint_dimension",
    "dim_table",
    "generic_points",
]

_ZERO = CycloScalar(0)


def _falling(n, r):
    out = 1
    for t in range(r):
        out *= n - t
    return out


def _powers(point, top):
    return [[c**e for e in range(top + 1)] for c in point]


def evaluation_matrix(points, monos):
    rows = []
    top = max((max(m) for m in monos), default=0)
    for p in points:
        pw = _powers(tuple(p), top)
        rows.append([pw[0][a] * pw[1][b] * pw[2][c] for a, b, c in monos])
    return rows


def ideal_dimension(Z, t):
    """dim [I_Z]_t."""
    if t < 0:
        return 0
    monos = monomials(t)
    return len(monos) - rank(evaluation_matrix(Z.points, monos))


def imposes_independent(Z, t):
    """True iff the points of Z impose |Z| independent conditions on forms of degree t."""
    return rank(evaluation_matrix(Z.points, monomials(t))) == len(Z.points)


def _derivative_rows(P, j, monos):
    top = max((max(m) for m in monos), default=0)
    pw = _powers(tuple(P), top)
    rows = []
    for s in range(j):
        for alpha in monomials(s):
            row = []
            for m in monos:
                if m[0] >= alpha[0] and m[1] >= alpha[1] and m[2] >= alpha[2]:
                    fac = _falling(m[0], alpha[0]) * _falling(m[1], alpha[1]) * _falling(m[2], alpha[2])
                    row.append(
                        pw[0][m[0] - alpha[0]] * pw[1][m[1] - alpha[1]] * pw[2][m[2] - alpha[2]] * fac
                    )
                else:
                    row.append(_ZERO)
            rows.append(row)
    return rows


def chart_matrix(P):
    """Rows of an invertible matrix A with A*P proportional to (0, 0, 1)."""
    P = tuple(P)
    c = next(i for i in (2, 1, 0) if P[i])
    i0, i1 = (i for i in range(3) if i != c)
    rows = [[_ZERO] * 3 for _ in range(3)]
    rows[0][i0], rows[0][c] = P[c], -P[i0]
    rows[1][i1], rows[1][c] = P[c], -P[i1]
    rows[2][c] = CycloScalar(1)
    return rows


def _apply(A, p):
    p = tuple(p)
    return tuple(sum((A[i][v] * p[v] for v in range(3)), _ZERO) for i in range(3))


def fatpoint_dimension(Z, P, j, t, method="chart"):
    """dim [I_{Z + jP}]_t, computed exactly at the given point P."""
    if j < 0 or t < 0:
        raise ValueError("j and t must be nonnegative")
    if j > t:
        return 0
    if method == "stacked":
        monos = monomials(t)
        rows = evaluation_matrix(Z.points, monos) + _derivative_rows(P, j, monos)
        return len(monos) - rank(rows)
    if method != "chart":
        raise ValueError(f"unknown method {method!r}")
    A = chart_matrix(P)
    moved = [_apply(A, z) for z in Z.points]
    monos = [m for m in monomials(t) if m[0] + m[1] >= j]
    if not moved:
        return len(monos)
    return len(monos) - rank(evaluation_matrix(moved, monos))


def generic_points(seed, count, bound=50):
    rng = random.Random(f"fatpoint-{seed}")
    return [random_point(rng, bound) for _ in range(count)]


@dataclass
class DimTable:
    """D(j) = dim [I_{Z + jP}]_{j+k} for j = 0, 1, ..., certified at several points."""

    k: int
    entries: dict = field(default_factory=dict)
    samples: int = 2
    points: list = field(default_factory=list)

    def __getitem__(self, j):
        return self.entries[j]

    def values(self):
        return [self.entries[j] for j in sorted(self.entries)]

    def differences(self):
        vals = self.values()
        return [b - a for a, b in zip([0] + vals[:-1], vals)]

    def is_convex(self):
        vals = self.values()
        diffs = self.differences()
        nondecreasing = all(a <= b for a, b in zip(vals, vals[1:]))
        return nondecreasing and all(a <= b for a, b in zip(diffs, diffs[1:]))

    def to_json(self):
        return {"k": self.k, "samples": self.samples, "D": {str(j): v for j, v in sorted(self.entries.items())}}


def certified_value(values, j):
    """The generic value among sample dimensions (dimensions only jump up on special loci)."""
    low = min(values)
    if values.count(low) >= 2 or len(set(values)) == 1:
        return low
    raise GenericityError(f"generic samples disagree at j={j}: {values}")


def dim_table(Z, k, seed=0, samples=2, stop=None, j_max=None, method="chart"):
    """Tabulate D(j) until ``stop(table)`` is true or j exceeds ``j_max``.

    Every entry is computed at ``samples`` independent random points and kept
    only when they agree; on disagreement two more points are drawn and the
    minimum is accepted if at least two samples attain it.
    """
    if samples < 2:
        raise ValueError("need at least two samples to certify genericity")
    if j_max is None:
        j_max = len(Z) + k
    pts = generic_points(seed, samples)
    table = DimTable(k, {}, samples, pts)
    extra = None
    for j in range(j_max + 1):
        vals = [fatpoint_dimension(Z, P, j, j + k, method) for P in pts]
        if len(set(vals)) > 1:
            if extra is None:
                extra = generic_points(f"{seed}-extra", 2)
            vals += [fatpoint_dimension(Z, P, j, j + k, method) for P in extra]
        table.entries[j] = certified_value(vals, j)
        if stop is not None and stop(table):
            break
    return table


def dimension_from_exponents(exponents, j):
    """The right-hand side sum of max(0, j - a_i + 1)."""
    return sum(max(0, j - a + 1) for a in exponents)


def expected_count(n_points, d, k):
    """Naive count C(d+k+2, 2) - |Z| - C(d+1, 2) (may be negative)."""
    return comb(d + k + 2, 2) - n_points - comb(d + 1, 2)
