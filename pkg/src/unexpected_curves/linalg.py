"""Exact rank and null space over cyclotomic fields.

Dense Gauss-Jordan elimination on lists of :class:`CycloScalar`.  The matrices
met in this package are at most a few hundred rows and columns, so no sparse or
modular tricks are used; every count is exact.
"""

from .scalars import CycloScalar, as_scalar

__all__ = ["ExactMatrix", "rank", "kernel_basis", "rref"]

_ZERO = CycloScalar(0)
_ONE = CycloScalar(1)


class ExactMatrix:
    """A dense matrix of cyclotomic scalars."""

    def __init__(self, rows, cols=None):
        self.rows = [[e if isinstance(e, CycloScalar) else as_scalar(e) for e in r] for r in rows]
        if cols is None:
            cols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != cols:
                raise ValueError("ragged matrix")
        self.ncols = cols

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def transpose(self):
        return ExactMatrix([list(col) for col in zip(*self.rows)] if self.rows else [], self.nrows)

    def __matmul__(self, vec):
        return [sum((a * b for a, b in zip(row, vec) if a and b), _ZERO) for row in self.rows]

    def rank(self):
        return rank(self)

    def kernel_basis(self):
        return kernel_basis(self)

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols})"


def _as_rows(M):
    if isinstance(M, ExactMatrix):
        return [list(r) for r in M.rows], M.ncols
    rows = [[e if isinstance(e, CycloScalar) else as_scalar(e) for e in r] for r in M]
    return rows, (len(rows[0]) if rows else 0)


def rref(M, reduce_above=True):
    """Row-reduce a copy of M.

    Returns ``(rows, pivots)`` where ``pivots`` lists pivot columns in order.
    With ``reduce_above=False`` only forward elimination is done (enough for rank).
    """
    rows, ncols = _as_rows(M)
    rows = [r for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= len(rows):
            break
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = prow[c].inverse()
        prow = [e * inv if e else e for e in prow]
        prow[c] = _ONE
        rows[r] = prow
        support = [j for j in range(c + 1, ncols) if prow[j]]
        targets = range(len(rows)) if reduce_above else range(r + 1, len(rows))
        for i in targets:
            if i == r:
                continue
            row = rows[i]
            fac = row[c]
            if not fac:
                continue
            row[c] = _ZERO
            for j in support:
                row[j] = row[j] - fac * prow[j]
        pivots.append(c)
        r += 1
    return rows[: len(pivots)], pivots


def rank(M):
    """Exact rank of M."""
    _, pivots = rref(M, reduce_above=False)
    return len(pivots)


def kernel_basis(M, ncols=None):
    """Basis of the right null space in reduced echelon form.

    Free columns are taken in increasing order; the basis vector attached to a
    free column has a 1 there and 0 in every other free column.
    """
    rows, cols = _as_rows(M)
    if ncols is not None:
        cols = ncols
    if not rows:
        return [[(_ONE if i == j else _ZERO) for i in range(cols)] for j in range(cols)]
    red, pivots = rref(ExactMatrix(rows, cols))
    pivset = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivset:
            continue
        vec = [_ZERO] * cols
        vec[free] = _ONE
        for row, pc in zip(red, pivots):
            if row[free]:
                vec[pc] = -row[free]
        basis.append(vec)
    return basis
