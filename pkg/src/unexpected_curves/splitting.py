"""Splitting types read off the fat-point dimension table.

With D(j) = dim [I_{Z+jP}]_{j+k}, the first difference D(j) - D(j-1) counts the
exponents a_i <= j.  Walking j upward until that count reaches k + 1 recovers
the whole multiset.
"""

from dataclasses import dataclass
from math import comb

from .fatpoints import dim_table, dimension_from_exponents

__all__ = [
    "SplittingType",
    "NonConvergenceError",
    "splitting_type",
    "splitting_from_table",
    "epsilon_decomposition",
    "chern_sum_check",
]


class NonConvergenceError(ArithmeticError):
    """The dimension table did not settle into slope k + 1 where it should."""


@dataclass(frozen=True)
class SplittingType:
    k: int
    exponents: tuple
    consistent: bool = True

    def __post_init__(self):
        exps = tuple(sorted(int(a) for a in self.exponents))
        if len(exps) != self.k + 1:
            raise ValueError(f"need {self.k + 1} exponents, got {len(exps)}")
        if exps and exps[0] < 0:
            raise ValueError("exponents must be nonnegative")
        object.__setattr__(self, "exponents", exps)

    @property
    def base(self):
        return self.exponents[0]

    @property
    def gaps(self):
        return epsilon_decomposition(self)[1]

    @property
    def mults(self):
        return epsilon_decomposition(self)[2]

    def dimension(self, j):
        return dimension_from_exponents(self.exponents, j)

    def __str__(self):
        return ",".join(map(str, self.exponents))

    def to_json(self):
        a, eps, ts = epsilon_decomposition(self)
        return {
            "k": self.k,
            "exponents": list(self.exponents),
            "base": a,
            "epsilon": list(eps),
            "t": list(ts),
            "consistent": self.consistent,
        }


def epsilon_decomposition(st):
    """(a, (eps_1..eps_s), (t_0..t_s)) with a + eps_i repeated t_i times, eps_0 = 0 implicit."""
    exps = st.exponents if isinstance(st, SplittingType) else tuple(sorted(st))
    a = exps[0]
    distinct = sorted(set(exps))
    eps = tuple(v - a for v in distinct[1:])
    ts = tuple(exps.count(v) for v in distinct)
    return a, eps, ts


def chern_sum_check(st, size_z):
    return sum(st.exponents) == size_z - comb(st.k + 1, 2)


def splitting_from_table(table, size_z, k):
    """Invert the dimension formula on a (possibly partial) table."""
    vals = table.values() if hasattr(table, "values") else list(table)
    exps = []
    prev_delta, prev = 0, 0
    for j, v in enumerate(vals):
        delta = v - prev
        prev = v
        if delta < prev_delta:
            raise NonConvergenceError(f"first differences decrease at j={j}")
        if delta > k + 1:
            raise NonConvergenceError(
                f"slope {delta} exceeds k+1={k + 1} at j={j} (negative twists?)"
            )
        exps += [j] * (delta - prev_delta)
        prev_delta = delta
        if delta == k + 1:
            st = SplittingType(k, tuple(exps))
            consistent = chern_sum_check(st, size_z) and all(
                st.dimension(i) == w for i, w in enumerate(vals)
            )
            return SplittingType(k, st.exponents, consistent)
    raise NonConvergenceError(f"slope never reached k+1={k + 1} within j <= {len(vals) - 1}")


def splitting_type(Z, k, seed=0, samples=2, method="chart"):
    if k < 1:
        raise ValueError("k must be at least 1")

    def settled(tab):
        vals = tab.values()
        delta = vals[-1] - (vals[-2] if len(vals) > 1 else 0)
        return delta >= k + 1

    table = dim_table(Z, k, seed=seed, samples=samples, stop=settled, method=method)
    return splitting_from_table(table, len(Z), k)
