"""One line per acceptance check; arithmetic is exact, so every tolerance is zero.

Run with ``pytest tests/test_acceptance.py -v`` (lines are printed even under
output capture).  The two checks marked xfail reproduce the reference data
literally and fail for reasons recorded in the decision notes.
"""

from collections import defaultdict

import pytest

from unexpected_curves.reproduce import CHECKS, Context, run_checks

TOLERANCE = "exact equality (up to a common scalar for curves)"

KNOWN_FAILURES = {
    "fixture_C_4_7_5_prime": "the stored equation has no x^7, x^6*y, x^6*z terms, "
    "so it is singular at (1,0,0) although the profile says no double points",
    "types_DF4": "the gap inequality also flags (5,1)* at k=4 where the reference row is empty",
    "types_DF5": "the gap inequality also flags (7,1)* at k=6 where the reference row is empty",
}

_results = {}


@pytest.fixture(scope="module")
def ctx():
    return Context(seed=0, samples=2)


def _param(crit, name):
    marks = []
    if name in KNOWN_FAILURES:
        marks.append(pytest.mark.xfail(strict=True, reason=KNOWN_FAILURES[name]))
    return pytest.param(crit, name, marks=marks, id=f"criterion{crit}-{name}")


@pytest.mark.parametrize("crit,name", [_param(c, n) for c, n, _, _ in CHECKS])
def test_criterion(crit, name, ctx, capsys):
    (chk,) = run_checks(names={name}, criteria={crit}, ctx=ctx)
    _results[name] = chk
    with capsys.disabled():
        print(f"\n{chk.line()}  [tolerance: {TOLERANCE}]")
    assert chk.passed, chk.detail


def test_criterion_summary(capsys):
    by_crit = defaultdict(list)
    for chk in _results.values():
        by_crit[chk.criterion].append(chk)
    with capsys.disabled():
        print()
        for crit in sorted(by_crit):
            bad = [c.name for c in by_crit[crit] if not c.passed]
            mark = "FAIL" if bad else "PASS"
            print(f"criterion {crit}: {mark}" + (f" ({', '.join(bad)})" if bad else ""))
    failing = {c.name for c in _results.values() if not c.passed}
    assert failing <= set(KNOWN_FAILURES)
