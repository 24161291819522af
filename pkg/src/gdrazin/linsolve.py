"""Exact Gaussian elimination over Gaussian rationals.

Row reduction, rank, inverse, and column/null space bases for the exact
backend.  Entries form a field, so ordinary elimination is free of rounding;
pivots are chosen as the first nonzero entry in each column.
"""

from __future__ import annotations

from .errors import SingularMatrixError
from .matrices import EXACT, Matrix, identity
from .scalars import GaussianRational

_ZERO = GaussianRational(0, 0)
_ONE = GaussianRational(1, 0)


def _require_exact(m: Matrix):
    if m.backend != EXACT:
        raise TypeError("exact elimination requires an exact-backend matrix")


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot column indices."""
    _require_exact(m)
    grid = m.to_rows()
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        ipiv = next((i for i in range(r, nrows) if grid[i][c]), None)
        if ipiv is None:
            continue
        grid[r], grid[ipiv] = grid[ipiv], grid[r]
        pv = grid[r][c]
        grid[r] = [e / pv for e in grid[r]]
        for i in range(nrows):
            if i != r and grid[i][c]:
                f = grid[i][c]
                grid[i] = [a - f * b for a, b in zip(grid[i], grid[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Matrix.from_rows(grid, EXACT), tuple(pivots)


def rank_exact(m: Matrix) -> int:
    return len(rref(m)[1])


def inverse_exact(m: Matrix) -> Matrix:
    if not m.is_square:
        raise SingularMatrixError("only square matrices have inverses")
    _require_exact(m)
    n = m.rows
    aug = [list(m.row(i)) + list(identity(n).row(i)) for i in range(n)]
    reduced, pivots = rref(Matrix.from_rows(aug, EXACT))
    if pivots[:n] != tuple(range(n)):
        raise SingularMatrixError("matrix is singular")
    rows = [[reduced[i, n + j] for j in range(n)] for i in range(n)]
    return Matrix.from_rows(rows, EXACT)


def column_space_basis(m: Matrix) -> list[tuple]:
    """Columns of ``m`` at the pivot positions (a basis of the column space)."""
    _, pivots = rref(m)
    return [tuple(m[i, c] for i in range(m.rows)) for c in pivots]


def null_space_basis(m: Matrix) -> list[tuple]:
    """Basis vectors of the right null space, one per free column."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec = [_ZERO] * m.cols
        vec[free] = _ONE
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced[r, free]
        basis.append(tuple(vec))
    return basis


def matrix_from_columns(columns: list[tuple], backend: str = EXACT) -> Matrix:
    if not columns:
        raise ValueError("need at least one column")
    n = len(columns[0])
    rows = [[col[i] for col in columns] for i in range(n)]
    return Matrix.from_rows(rows, backend)
