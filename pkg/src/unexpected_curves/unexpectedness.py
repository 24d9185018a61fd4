"""Three routes to unexpectedness of type (d+k, d), and the splitting tables.

direct
    compare dim [I_{Z+dP}]_{d+k} at a generic P with
    max(0, dim [I_Z]_{d+k} - C(d+1, 2)).
simple
    (a_i + 1)(k + 1) <= sum_j a_j for the splitting exponent a_i = d.
epsilon
    0 < sum_{i > j} t_i (eps_i - eps_j - 1) for d = a + eps_j.

The two splitting criteria presuppose that Z imposes independent conditions
in degree d + k; where it does not, the tables mark the type with a star.
"""

from dataclasses import dataclass, field
from math import comb

from .fatpoints import (
    certified_value, fatpoint_dimension, generic_points, ideal_dimension, imposes_independent,
)
from .splitting import NonConvergenceError, epsilon_decomposition, splitting_type

__all__ = [
    "UnexpectednessVerdict",
    "TableRow",
    "expected_dimension",
    "is_unexpected_direct",
    "criterion_simple",
    "criterion_epsilon",
    "unexpected_types",
    "reconcile",
    "splitting_table",
    "in_range",
    "reconciliation_problems",
    "format_table",
]


@dataclass
class UnexpectednessVerdict:
    d: int
    k: int
    actual_dim: int
    expected_dim: int
    independent: bool
    verdict_direct: bool
    verdict_simple: bool = None
    verdict_epsilon: bool = None

    @property
    def starred(self):
        return self.verdict_direct and not self.independent

    @property
    def curve_type(self):
        return (self.d + self.k, self.d)

    def to_json(self):
        return {
            "type": list(self.curve_type),
            "actual_dim": self.actual_dim,
            "expected_dim": self.expected_dim,
            "independent": self.independent,
            "direct": self.verdict_direct,
            "simple": self.verdict_simple,
            "epsilon": self.verdict_epsilon,
            "starred": self.starred,
        }


def expected_dimension(Z, d, k):
    return max(0, ideal_dimension(Z, d + k) - comb(d + 1, 2))


def is_unexpected_direct(Z, d, k, seed=0, samples=2):
    pts = generic_points(f"direct-{seed}", samples)
    vals = [fatpoint_dimension(Z, P, d, d + k) for P in pts]
    if len(set(vals)) > 1:
        vals += [fatpoint_dimension(Z, P, d, d + k) for P in generic_points(f"direct-{seed}-extra", 2)]
    actual = certified_value(vals, d)
    expected = expected_dimension(Z, d, k)
    return UnexpectednessVerdict(d, k, actual, expected, imposes_independent(Z, d + k), actual > expected)


def criterion_simple(st, i):
    """(a_i + 1)(k + 1) <= sum a_j, with i counted from 1."""
    if not 1 <= i <= len(st.exponents):
        raise IndexError(f"exponent index {i} out of range 1..{len(st.exponents)}")
    return (st.exponents[i - 1] + 1) * (st.k + 1) <= sum(st.exponents)


def criterion_epsilon(st, j):
    """The gap inequality for the type (a + eps_j + k, a + eps_j); j = 0 is the base."""
    a, eps, ts = epsilon_decomposition(st)
    eps = (0,) + eps
    if not 0 <= j < len(eps):
        raise IndexError(f"gap index {j} out of range 0..{len(eps) - 1}")
    return 0 < sum(ts[i] * (eps[i] - eps[j] - 1) for i in range(j + 1, len(eps)))


def unexpected_types(Z, st, min_d=1):
    """[(d + k, d, starred)] predicted by the gap inequality, starred when Z is dependent."""
    a, eps, _ = epsilon_decomposition(st)
    out = []
    for j, e in enumerate((0,) + eps):
        d = a + e
        if d < min_d or not criterion_epsilon(st, j):
            continue
        out.append((d + st.k, d, not imposes_independent(Z, d + st.k)))
    return out


def reconcile(Z, st, seed=0, samples=2):
    """All three verdicts for every d = a + eps_j >= 1."""
    a, eps, _ = epsilon_decomposition(st)
    verdicts = []
    for j, e in enumerate((0,) + eps):
        d = a + e
        if d < 1:
            continue
        v = is_unexpected_direct(Z, d, st.k, seed, samples)
        v.verdict_epsilon = criterion_epsilon(st, j)
        idx = st.exponents.index(d) + 1
        v.verdict_simple = criterion_simple(st, idx)
        verdicts.append(v)
    return verdicts


def reconciliation_problems(verdicts):
    """Disagreements that the independence hypothesis does not excuse."""
    out = []
    for v in verdicts:
        if v.verdict_simple and not v.verdict_epsilon:
            out.append((v.curve_type, "simple criterion holds but gap criterion fails"))
        if v.independent and v.verdict_epsilon != v.verdict_direct:
            out.append((v.curve_type, f"gap criterion {v.verdict_epsilon} vs direct {v.verdict_direct}"))
    return out


def in_range(size_z, k):
    return comb(k + 1, 2) < size_z


@dataclass
class TableRow:
    k: int
    splitting: object = None
    types: list = field(default_factory=list)
    error: str = None

    @property
    def converged(self):
        return self.splitting is not None

    def to_json(self):
        if not self.converged:
            return {"k": self.k, "status": "non-convergent (outside validity range)", "detail": self.error}
        out = self.splitting.to_json()
        out["unexpected"] = [{"type": [D, d], "starred": s} for D, d, s in self.types]
        return out


def splitting_table(Z, seed=0, samples=2, ks=None):
    """Rows for every k with C(k+1, 2) < |Z|, plus the first out-of-range ones.

    Out-of-range rows are those with C(k, 2) <= |Z| <= C(k+1, 2); they are
    expected to fail to converge and are reported with the error message.
    """
    n = len(Z)
    if ks is None:
        ks = [k for k in range(1, n + 2) if comb(k, 2) <= n]
    rows = []
    for k in ks:
        try:
            st = splitting_type(Z, k, seed=seed, samples=samples)
        except NonConvergenceError as exc:
            rows.append(TableRow(k, error=str(exc)))
            continue
        rows.append(TableRow(k, st, unexpected_types(Z, st)))
    return rows


def format_table(rows):
    """Aligned text: k | exponents | eps | t | unexpected types."""
    width = max((len(epsilon_decomposition(r.splitting)[1]) for r in rows if r.converged), default=0)
    lines = [f"{'k':>2} | {'a_1..a_k+1':<20} | {'eps':<10} | {'t':<12} | (d+k,d)"]
    for r in rows:
        if not r.converged:
            lines.append(f"{r.k:>2} | non-convergent (outside validity range)")
            continue
        a, eps, ts = epsilon_decomposition(r.splitting)
        eps = list(eps) + [0] * (width - len(eps))
        ts = list(ts) + [0] * (width + 1 - len(ts))
        types = ", ".join(f"({D},{d})" + ("*" if s else "") for D, d, s in r.types) or "---"
        lines.append(
            f"{r.k:>2} | {str(r.splitting):<20} | {','.join(map(str, eps)) or '-':<10} | "
            f"{','.join(map(str, ts)):<12} | {types}"
        )
    return "\n".join(lines)
