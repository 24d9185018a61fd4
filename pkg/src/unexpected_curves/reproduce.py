"""End-to-end acceptance checks over the reference computations.

Each check returns a :class:`Check` with a one-line verdict.  Checks are
grouped by acceptance criterion number and tagged so that a subset can be run
(``b3``, ``dfn``, ``dfn4``, ``fixtures``, ``properties``, ...).
"""

from dataclasses import dataclass
import random
import time

from .arrangements import (
    GenericLine, b3, build_arrangement, fermat_dual, is_generic_line, make_generic_line,
    random_config,
)
from .construction import (
    construct_curve, line_component_check, singular_combinations, verify_curve,
)
from .fatpoints import dim_table, generic_points
from .fixtures import b3_k1, b3_k2, curve_fixture, curve_text, fixture_index, instantiate_curve
from .forms import ProjPoint, monomials
from .splitting import NonConvergenceError, chern_sum_check, splitting_type
from .syzygies import (
    SyzygyVector, check_restricted, e_generators, in_span_modulo_euler, phi_e_identity,
    restrict_tuple, restricted_dimension_profile, restricted_syzygies, tuple_vector,
    verify_global_syzygy,
)
from .unexpectedness import (
    in_range, is_unexpected_direct, reconcile, reconciliation_problems, unexpected_types,
)

__all__ = ["Check", "Context", "run_checks", "CHECKS", "REFERENCE_SPLITTINGS", "REFERENCE_TYPES"]

REFERENCE_SPLITTINGS = {
    3: {1: (4, 7), 2: (3, 3, 3), 3: (1, 1, 2, 2), 4: (0, 0, 0, 1, 1)},
    4: {1: (9, 9), 2: (4, 5, 7), 3: (3, 3, 3, 4), 4: (1, 1, 2, 2, 3), 5: (0, 0, 0, 1, 1, 2)},
    5: {
        1: (13, 14), 2: (7, 9, 9), 3: (4, 5, 6, 7), 4: (3, 3, 3, 4, 5),
        5: (1, 1, 2, 2, 3, 4), 6: (0, 0, 0, 1, 1, 2, 3),
    },
}
OUT_OF_RANGE = {3: (5,), 4: (6,), 5: (7, 8)}

# (degree, multiplicity, starred) per row
REFERENCE_TYPES = {
    3: {1: [(5, 4, False)], 2: [], 3: [], 4: []},
    4: {1: [], 2: [(6, 4, False), (7, 5, False)], 3: [], 4: [], 5: []},
    5: {
        1: [], 2: [(9, 7, False)], 3: [(7, 4, True), (8, 5, False)], 4: [(7, 3, True)],
        5: [(6, 1, True), (7, 2, True)], 6: [],
    },
}

N_RANDOM = 20


@dataclass
class Check:
    criterion: int
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self):
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.criterion}.{self.name} ({self.seconds:.1f}s): {self.detail}"

    def to_json(self):
        return {
            "criterion": self.criterion,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
        }


class Context:
    """Caches the configurations and derived objects that checks share."""

    def __init__(self, seed=0, samples=2):
        self.seed = seed
        self.samples = samples
        self._configs = {}
        self._arr = {}
        self._lines = {}
        self._splittings = {}

    def config(self, name):
        if name not in self._configs:
            if name == "B3":
                cfg = b3()
            elif name.startswith("DF"):
                cfg = fermat_dual(int(name[2:]))
            elif name.startswith("R"):
                i = int(name[1:])
                cfg = random_config(1000 * self.seed + i, 6 + i % 5)
            else:
                raise KeyError(name)
            self._configs[name] = cfg
        return self._configs[name]

    def arrangement(self, name):
        if name not in self._arr:
            self._arr[name] = build_arrangement(self.config(name))
        return self._arr[name]

    def line(self, name):
        if name not in self._lines:
            self._lines[name] = make_generic_line(self.arrangement(name), seed=self.seed)
        return self._lines[name]

    def splitting(self, name, k):
        key = (name, k)
        if key not in self._splittings:
            try:
                self._splittings[key] = splitting_type(
                    self.config(name), k, seed=self.seed, samples=self.samples
                )
            except NonConvergenceError as exc:
                self._splittings[key] = exc
        val = self._splittings[key]
        if isinstance(val, Exception):
            raise val
        return val

    def property_configs(self):
        return ["B3", "DF3", "DF4", "DF5"] + [f"R{i}" for i in range(N_RANDOM)]


def _fmt(pairs):
    return "; ".join(pairs) if pairs else "none"


# -- criterion 1 and 2 -------------------------------------------------------
def _splitting_rows(n):
    def check(ctx):
        name = f"DF{n}"
        bad = []
        for k, ref in REFERENCE_SPLITTINGS[n].items():
            try:
                got = ctx.splitting(name, k).exponents
            except NonConvergenceError as exc:
                bad.append(f"k={k} did not converge ({exc})")
                continue
            if got != ref:
                bad.append(f"k={k} got {got} want {ref}")
        for k in OUT_OF_RANGE[n]:
            try:
                st = ctx.splitting(name, k)
                bad.append(f"k={k} converged to {st.exponents}, expected non-convergence")
            except NonConvergenceError:
                pass
        ks = list(REFERENCE_SPLITTINGS[n])
        ok_text = f"k={ks[0]}..{ks[-1]} exact, k={','.join(map(str, OUT_OF_RANGE[n]))} non-convergent"
        return not bad, ok_text if not bad else _fmt(bad)
    return check


def _chern(name, ks):
    def check(ctx):
        size = len(ctx.config(name))
        bad = []
        sums = []
        for k in ks:
            st = ctx.splitting(name, k)
            sums.append(f"k={k}:{sum(st.exponents)}")
            if not (chern_sum_check(st, size) and st.consistent):
                bad.append(f"k={k} sum {sum(st.exponents)} != {size} - {k * (k + 1) // 2}")
        return not bad, _fmt(bad) if bad else f"|Z|={size}, " + " ".join(sums)
    return check


# -- criterion 3 ---------------------------------------------------------------
def _proportional(u, v):
    pivot = next((i for i, a in enumerate(u) if a), None)
    if pivot is None or not v[pivot]:
        return not any(u) and not any(v)
    r = v[pivot] / u[pivot]
    return all(a * r == b for a, b in zip(u, v))


def check_b3_k1(ctx):
    A, L = ctx.arrangement("B3"), ctx.line("B3")
    syz, quartic_text = b3_k1()
    basis = restricted_syzygies(A, L, 1, 3)
    exact = restricted_syzygies(A, L, 1, 3, mode="exact")
    ref = SyzygyVector(1, 3, restrict_tuple(syz, L))
    glob_ok, cof = verify_global_syzygy(A, L, 1, syz)
    facts = {
        "quotient basis size 1": len(basis) == 1,
        "exact basis size 1": len(exact) == 1,
        "reference triple is an exact syzygy": glob_ok and not cof,
        "exact basis proportional to reference": bool(exact)
        and _proportional(tuple_vector(exact[0].restricted, 3), tuple_vector(ref.restricted, 3)),
        "reference congruent to basis mod Euler span": bool(basis) and in_span_modulo_euler(ref, basis, L),
    }
    if basis:
        rep = construct_curve(basis[0], L, A)
        al, be, ga = L.dual_point
        quartic = instantiate_curve(quartic_text, (al / ga, be / ga, 1))
        facts["quartic matches (chart gamma = 1)"] = rep.curve.equal_up_to_scalar(quartic)
        facts["triple point at P"] = rep.mult_at_P == 3
        facts["through all 9 points"] = rep.passes_through_Z
    bad = [k for k, v in facts.items() if not v]
    return not bad, ("all of: " + ", ".join(facts)) if not bad else "failed: " + ", ".join(bad)


# -- criterion 4 ---------------------------------------------------------------
def check_b3_k2(ctx):
    A = ctx.arrangement("B3")
    P, sigmas, ref_curve = b3_k2()
    L = GenericLine.from_dual_point(P)
    st = ctx.splitting("B3", 2)
    facts = {
        "splitting (2,2,2)": st.exponents == (2, 2, 2),
        "line passes the genericity filter": is_generic_line(A, P),
    }
    for i, sg in enumerate(sigmas, 1):
        facts[f"sigma{i} grlex order: f | sum"] = verify_global_syzygy(A, L, 2, sg, modulus="f")[0]
    # reversed slot order must be rejected, otherwise the check says nothing
    rev = list(reversed(sigmas[1]))
    facts["reversed sigma2 rejected"] = not verify_global_syzygy(A, L, 2, rev, modulus="f")[0]
    s2 = SyzygyVector(2, 2, restrict_tuple(sigmas[1], L))
    facts["sigma2 restricted relation"] = check_restricted(s2, A, L)
    rep = construct_curve(s2, L, A)
    facts["curve matches 49x^3y-49xy^3+..."] = rep.curve.equal_up_to_scalar(ref_curve)
    bad = [k for k, v in facts.items() if not v]
    return not bad, str(rep.curve) if not bad else "failed: " + ", ".join(bad)


# -- criterion 5 ---------------------------------------------------------------
def check_df4_75(ctx):
    Z, A, L = ctx.config("DF4"), ctx.arrangement("DF4"), ctx.line("DF4")
    v = is_unexpected_direct(Z, 5, 2, seed=ctx.seed, samples=ctx.samples)
    facts = {
        "expected 2": v.expected_dim == 2,
        "actual 3": v.actual_dim == 3,
        "unexpected": v.verdict_direct,
    }
    basis = restricted_syzygies(A, L, 2, 5)
    doubles = [ProjPoint(0, 1, 0), ProjPoint(0, 0, 1)]
    combos = singular_combinations(basis, L, doubles)
    facts["syzygy with the two double points exists"] = len(combos) >= 1
    if combos:
        rep = construct_curve(combos[0], L, A)
        mults = dict(rep.multiplicities_at_Z)
        others = [m for p, m in rep.multiplicities_at_Z if p not in doubles]
        facts["degree 7"] = rep.degree == 7
        facts["exactly double at (0,1,0), (0,0,1)"] = all(mults[p] == 2 for p in doubles)
        facts["other 17 points on the curve"] = len(others) == 17 and min(others) >= 1
        facts["multiplicity 5 at P"] = rep.mult_at_P == 5
        fixture = instantiate_curve(curve_text("C_4_7_5"), L.dual_point)
        facts["equals the C_4_7_5 fixture at P"] = rep.curve.equal_up_to_scalar(fixture)
    bad = [k for k, v in facts.items() if not v]
    detail = f"dim 3 > 2, basis {len(basis)}, profile {rep.multiplicity_profile()}" if not bad else ""
    return not bad, detail or "failed: " + ", ".join(bad)


# -- criterion 6 ---------------------------------------------------------------
def _fixture_check(name):
    def check(ctx):
        entry = curve_fixture(name)
        Z = fermat_dual(entry["n"])
        rng = random.Random(f"fixture-{name}-{ctx.seed}")
        P = generic_points(rng.randint(0, 10**9), 1)[0]
        C = instantiate_curve(curve_text(name), P)
        rep = verify_curve(C, Z, P, entry["d"])
        multi = sorted((str(p), m) for p, m in rep.multiplicities_at_Z if m > 1)
        facts = {
            f"degree {entry['degree']}": rep.degree == entry["degree"],
            f"multiplicity {entry['d']} at the general point": rep.mult_at_P == entry["d"],
            "passes through Z": rep.passes_through_Z,
        }
        if entry["double_points"] is not None:
            want = sorted(str(ProjPoint([int(c) for c in p])) for p in entry["double_points"])
            facts[f"singular exactly at {want or 'no point'} (double)"] = (
                [p for p, _ in multi] == want and all(m == 2 for _, m in multi)
            )
        else:
            facts[f"{entry['double_count']} double points"] = (
                len(multi) == entry["double_count"] and all(m == 2 for _, m in multi)
            )
        bad = [k for k, v in facts.items() if not v]
        found = f"points of multiplicity > 1: {multi or 'none'}"
        return not bad, found if not bad else "failed: " + ", ".join(bad) + "; " + found
    return check


# -- criterion 7 ---------------------------------------------------------------
def _types_check(n):
    def check(ctx):
        name = f"DF{n}"
        Z = ctx.config(name)
        bad = []
        for k, want in REFERENCE_TYPES[n].items():
            got = unexpected_types(Z, ctx.splitting(name, k))
            if sorted(got) != sorted(want):
                show = lambda ts: ",".join(f"({D},{d})" + ("*" if s else "") for D, d, s in ts) or "---"
                bad.append(f"k={k} got {show(got)} want {show(want)}")
        return not bad, "all rows match" if not bad else _fmt(bad)
    return check


# -- criterion 8 ---------------------------------------------------------------
def prop_euler(ctx):
    bad = [n for n in ctx.property_configs() if not ctx.arrangement(n).euler_identity_holds()]
    return not bad, f"{len(ctx.property_configs())} configurations" if not bad else _fmt(bad)


def _property_ks(ctx, name):
    size = len(ctx.config(name))
    return [k for k in (1, 2) if in_range(size, k)]


def prop_curves(ctx):
    bad = []
    count = 0
    for name in ctx.property_configs():
        A, L = ctx.arrangement(name), ctx.line(name)
        for k in _property_ks(ctx, name):
            st = ctx.splitting(name, k)
            d = st.exponents[0] if st.exponents[0] > 0 else 1
            for s in restricted_syzygies(A, L, k, d):
                rep = construct_curve(s, L, A)
                count += 1
                if rep.mult_at_P < rep.d or rep.degree > d + k:
                    bad.append(f"{name} k={k}: degree/multiplicity")
                if not rep.passes_through_Z:
                    bad.append(f"{name} k={k}: misses a point of Z")
                if not line_component_check(rep):
                    bad.append(f"{name} k={k}: line component does not divide")
                if any(A.f.evaluate(nd.point) for nd in rep.non_determined):
                    bad.append(f"{name} k={k}: non-determined point off the arrangement")
    return not bad, f"{count} curves certified" if not bad else _fmt(bad)


def prop_dimtable(ctx):
    bad = []
    for name in ctx.property_configs():
        Z = ctx.config(name)
        for k in _property_ks(ctx, name):
            st = ctx.splitting(name, k)
            top = st.exponents[-1] + 1
            t0 = dim_table(Z, k, seed=ctx.seed, samples=ctx.samples, j_max=top)
            t1 = dim_table(Z, k, seed=ctx.seed + 1, samples=ctx.samples, j_max=top)
            if t0.values() != t1.values():
                bad.append(f"{name} k={k}: resampling changed the table")
            if not t0.is_convex():
                bad.append(f"{name} k={k}: not convex")
            if t0.values() != [st.dimension(j) for j in range(top + 1)]:
                bad.append(f"{name} k={k}: round trip through the exponents fails")
    return not bad, "convex, stable under resampling, round trip exact" if not bad else _fmt(bad)


def prop_syzygy_dims(ctx):
    bad = []
    rows = 0
    for name in ctx.property_configs():
        Z, A, L = ctx.config(name), ctx.arrangement(name), ctx.line(name)
        ks = [k for k in range(1, len(Z)) if in_range(len(Z), k)]
        if name.startswith("R"):
            ks = ks[:2]
        for k in ks:
            st = ctx.splitting(name, k)
            top = len(Z) - 2
            got = restricted_dimension_profile(A, L, k, top)
            want = [st.dimension(d) for d in range(top + 1)]
            rows += 1
            if got != want:
                bad.append(f"{name} k={k}: {got} vs {want}")
    return not bad, f"{rows} (configuration, k) pairs, all d < |Z|-1" if not bad else _fmt(bad)


def prop_phi_e(ctx):
    bad = []
    total = 0
    for name in ctx.property_configs():
        A = ctx.arrangement(name)
        for k in (1, 2, 3):
            for gen in e_generators(k):
                total += 1
                if not phi_e_identity(A, gen):
                    bad.append(f"{name} k={k} {gen.index}")
    return not bad, f"{total} generator identities" if not bad else _fmt(bad)


def prop_reconcile(ctx):
    bad = []
    count = 0
    for name in ctx.property_configs():
        Z = ctx.config(name)
        ks = [k for k in range(1, len(Z)) if in_range(len(Z), k)]
        if name.startswith("R"):
            ks = ks[:2]
        for k in ks:
            verdicts = reconcile(Z, ctx.splitting(name, k), seed=ctx.seed, samples=ctx.samples)
            count += len(verdicts)
            bad += [f"{name} k={k} {t}: {why}" for t, why in reconciliation_problems(verdicts)]
    return not bad, f"{count} verdict triples agree" if not bad else _fmt(bad)


CHECKS = [
    (1, "splitting_DF3", ("dfn", "dfn3", "tables"), _splitting_rows(3)),
    (1, "splitting_DF4", ("dfn", "dfn4", "tables"), _splitting_rows(4)),
    (1, "splitting_DF5", ("dfn", "dfn5", "tables"), _splitting_rows(5)),
    (2, "chern_DF3", ("dfn", "dfn3", "tables"), _chern("DF3", REFERENCE_SPLITTINGS[3])),
    (2, "chern_DF4", ("dfn", "dfn4", "tables"), _chern("DF4", REFERENCE_SPLITTINGS[4])),
    (2, "chern_DF5", ("dfn", "dfn5", "tables"), _chern("DF5", REFERENCE_SPLITTINGS[5])),
    (2, "chern_B3", ("b3",), _chern("B3", (1, 2))),
    (3, "b3_k1_quartic", ("b3",), check_b3_k1),
    (4, "b3_k2_curve", ("b3",), check_b3_k2),
    (5, "df4_type_7_5", ("dfn", "dfn4"), check_df4_75),
    (6, "fixture_C_4_7_5", ("fixtures", "dfn", "dfn4"), _fixture_check("C_4_7_5")),
    (6, "fixture_C_4_7_5_prime", ("fixtures", "dfn", "dfn4"), _fixture_check("C_4_7_5_prime")),
    (6, "fixture_C_5_8_5", ("fixtures", "dfn", "dfn5"), _fixture_check("C_5_8_5")),
    (7, "types_DF3", ("dfn", "dfn3", "tables"), _types_check(3)),
    (7, "types_DF4", ("dfn", "dfn4", "tables"), _types_check(4)),
    (7, "types_DF5", ("dfn", "dfn5", "tables"), _types_check(5)),
    (8, "euler_identity", ("properties",), prop_euler),
    (8, "constructed_curves", ("properties",), prop_curves),
    (8, "dim_tables", ("properties",), prop_dimtable),
    (8, "syzygy_dimensions", ("properties",), prop_syzygy_dims),
    (8, "phi_e_identity", ("properties",), prop_phi_e),
    (8, "three_way_reconciliation", ("properties",), prop_reconcile),
]


def select(filter_text=None, criteria=None, names=None):
    out = []
    for crit, name, tags, fn in CHECKS:
        if criteria and crit not in criteria:
            continue
        if names is not None and name not in names:
            continue
        if filter_text and filter_text not in tags and filter_text not in name:
            continue
        out.append((crit, name, fn))
    return out


def run_checks(filter_text=None, criteria=None, ctx=None, echo=None, names=None):
    ctx = ctx or Context()
    results = []
    for crit, name, fn in select(filter_text, criteria, names):
        t0 = time.perf_counter()
        try:
            passed, detail = fn(ctx)
        except Exception as exc:  # a crash is a failed check, reported by name
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        chk = Check(crit, name, bool(passed), detail, time.perf_counter() - t0)
        results.append(chk)
        if echo:
            echo(chk.line())
    return results
