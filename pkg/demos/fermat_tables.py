"""# Splitting tables for the dual Fermat configurations

For n = 3, 4, 5 the points dual to xyz * prod(x + e^i y + e^j z) live over
Q(e), e a primitive n-th root of unity.  Each row is read off the fat-point
dimension table; starred types are those where Z imposes dependent
conditions in degree d + k."""

import time

from unexpected_curves import fermat_dual
from unexpected_curves.unexpectedness import format_table, splitting_table

for n in (3, 4, 5):
    t0 = time.perf_counter()
    Z = fermat_dual(n)
    rows = splitting_table(Z)
    print(f"\nn = {n}, |Z| = {len(Z)}   ({time.perf_counter() - t0:.1f}s)")
    print(format_table(rows))
