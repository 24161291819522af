"""Dense complex matrices over the exact and approximate scalar backends.

A :class:`Matrix` is an immutable row-major grid whose entries are either all
:class:`~gdrazin.scalars.GaussianRational` (backend ``"exact"``) or all
``complex`` (backend ``"approx"``).  Mixing backends in one operation raises
:class:`~gdrazin.errors.BackendMismatchError`; conversion is always explicit
via :func:`to_approx` / :func:`to_exact`.  NaN and infinity are rejected at
construction time.

All matrices here are tiny (the whole toolkit targets desk-scale input), so
the arithmetic is plain Python over the entry type.  numpy enters only in the
floating-point rank/inverse routines of :mod:`gdrazin.drazin`.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BackendMismatchError, ShapeError
from .scalars import GaussianRational

EXACT = "exact"
APPROX = "approx"


@dataclass(frozen=True, slots=True)
class Tolerance:
    """Thresholds for floating-point decisions.

    ``eps_rank`` is the relative singular-value cutoff for numerical rank;
    ``eps_eq`` bounds entrywise differences in approximate comparisons.  The
    exact backend ignores both (its comparisons are literal equality).
    """

    eps_rank: float = 1e-10
    eps_eq: float = 1e-9

    def __post_init__(self):
        if self.eps_rank < 0 or self.eps_eq < 0:
            raise ValueError("tolerances must be non-negative")


DEFAULT_TOL = Tolerance()


def _check_entry(value, backend):
    if backend == EXACT:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value, 0)
        raise BackendMismatchError(
            f"exact matrix entry must be GaussianRational/int/Fraction, got {type(value).__name__}"
        )
    if isinstance(value, (int, float, complex)) and not isinstance(value, bool):
        z = complex(value)
        if not (cmath.isfinite(z)):
            raise ValueError("approx matrix entries must be finite (no NaN/Inf)")
        return z
    raise BackendMismatchError(
        f"approx matrix entry must be int/float/complex, got {type(value).__name__}"
    )


@dataclass(frozen=True, slots=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple
    backend: str

    def __post_init__(self):
        if self.rows <= 0 or self.cols <= 0:
            raise ShapeError("matrix dimensions must be positive")
        if self.backend not in (EXACT, APPROX):
            raise ValueError(f"unknown backend {self.backend!r}")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError("entry count does not match rows*cols")
        object.__setattr__(
            self,
            "entries",
            tuple(_check_entry(e, self.backend) for e in self.entries),
        )

    # -- construction ---------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], backend: str = EXACT) -> "Matrix":
        nrows = len(rows)
        if nrows == 0:
            raise ShapeError("matrix needs at least one row")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        flat = tuple(e for r in rows for e in r)
        return cls(nrows, ncols, flat, backend)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key) -> object:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError("matrix index out of range")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    # -- operator sugar (delegates to the module-level ops) ----------------

    def __add__(self, other):
        return mat_add(self, other)

    def __sub__(self, other):
        return mat_add(self, mat_neg(other))

    def __neg__(self):
        return mat_neg(self)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __rmul__(self, scalar):
        return mat_scale(scalar, self)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {self.backend})"

    def __str__(self):
        body = "\n".join("  [" + ", ".join(str(e) for e in self.row(i)) + "]" for i in range(self.rows))
        return f"Matrix {self.rows}x{self.cols} ({self.backend}):\n{body}"


# -- constructors -----------------------------------------------------------


def _zero_entry(backend):
    return GaussianRational(0, 0) if backend == EXACT else 0j


def _one_entry(backend):
    return GaussianRational(1, 0) if backend == EXACT else 1 + 0j


def zeros(rows: int, cols: int | None = None, backend: str = EXACT) -> Matrix:
    cols = rows if cols is None else cols
    z = _zero_entry(backend)
    return Matrix(rows, cols, (z,) * (rows * cols), backend)


def identity(n: int, backend: str = EXACT) -> Matrix:
    z, o = _zero_entry(backend), _one_entry(backend)
    return Matrix(n, n, tuple(o if i == j else z for i in range(n) for j in range(n)), backend)


def unit(rows: int, cols: int, i: int, j: int, backend: str = EXACT) -> Matrix:
    """Matrix unit E_ij (single 1 at row i, column j; zero-based)."""
    z, o = _zero_entry(backend), _one_entry(backend)
    return Matrix(
        rows, cols, tuple(o if (r, c) == (i, j) else z for r in range(rows) for c in range(cols)), backend
    )


def diag(values: Sequence, backend: str = EXACT) -> Matrix:
    n = len(values)
    z = _zero_entry(backend)
    return Matrix(n, n, tuple(values[i] if i == j else z for i in range(n) for j in range(n)), backend)


def upper_shift(n: int, weights: Sequence | None = None, backend: str = EXACT) -> Matrix:
    """Weighted superdiagonal shift: entry (i, i+1) = weights[i], else 0."""
    if weights is None:
        weights = [1] * (n - 1)
    if len(weights) != n - 1:
        raise ShapeError("upper shift of size n takes n-1 weights")
    z = _zero_entry(backend)
    rows = [[z] * n for _ in range(n)]
    for i, w in enumerate(weights):
        rows[i][i + 1] = w
    return Matrix.from_rows(rows, backend)


def submatrix(m: Matrix, row_idx: Sequence[int], col_idx: Sequence[int]) -> Matrix:
    if not row_idx or not col_idx:
        raise ShapeError("submatrix needs at least one row and column")
    rows = [[m[i, j] for j in col_idx] for i in row_idx]
    return Matrix.from_rows(rows, m.backend)


def embed(sub: Matrix, n: int, row_idx: Sequence[int], col_idx: Sequence[int]) -> Matrix:
    """Place ``sub`` into an n x n zero matrix at the given index lists."""
    if len(row_idx) != sub.rows or len(col_idx) != sub.cols:
        raise ShapeError("index lists must match the submatrix shape")
    z = _zero_entry(sub.backend)
    grid = [[z] * n for _ in range(n)]
    for a, i in enumerate(row_idx):
        for b, j in enumerate(col_idx):
            grid[i][j] = sub[a, b]
    return Matrix.from_rows(grid, sub.backend)


def hstack(left: Matrix, right: Matrix) -> Matrix:
    _same_backend(left, right)
    if left.rows != right.rows:
        raise ShapeError("hstack needs equal row counts")
    rows = [list(left.row(i)) + list(right.row(i)) for i in range(left.rows)]
    return Matrix.from_rows(rows, left.backend)


def block2x2(tl: Matrix, tr: Matrix, bl: Matrix, br: Matrix) -> Matrix:
    """Assemble [[TL, TR], [BL, BR]]."""
    for m in (tr, bl, br):
        _same_backend(tl, m)
    if tl.rows != tr.rows or bl.rows != br.rows or tl.cols != bl.cols or tr.cols != br.cols:
        raise ShapeError("block shapes do not tile")
    rows = [list(tl.row(i)) + list(tr.row(i)) for i in range(tl.rows)]
    rows += [list(bl.row(i)) + list(br.row(i)) for i in range(bl.rows)]
    return Matrix.from_rows(rows, tl.backend)


def transpose(m: Matrix) -> Matrix:
    return Matrix.from_rows([[m[i, j] for i in range(m.rows)] for j in range(m.cols)], m.backend)


# -- arithmetic --------------------------------------------------------------


def _same_backend(x: Matrix, y: Matrix):
    if x.backend != y.backend:
        raise BackendMismatchError(f"cannot mix {x.backend} and {y.backend} matrices")


def mat_mul(x: Matrix, y: Matrix) -> Matrix:
    _same_backend(x, y)
    if x.cols != y.rows:
        raise ShapeError(f"cannot multiply {x.shape} by {y.shape}")
    z = _zero_entry(x.backend)
    out = []
    ycols = y.cols
    for i in range(x.rows):
        xrow = x.row(i)
        acc = [z] * ycols
        for k, xv in enumerate(xrow):
            if not xv:
                continue
            yrow = y.row(k)
            for j in range(ycols):
                yv = yrow[j]
                if yv:
                    acc[j] = acc[j] + xv * yv
        out.extend(acc)
    return Matrix(x.rows, ycols, tuple(out), x.backend)


def mat_add(x: Matrix, y: Matrix) -> Matrix:
    _same_backend(x, y)
    if x.shape != y.shape:
        raise ShapeError(f"cannot add {x.shape} and {y.shape}")
    return Matrix(x.rows, x.cols, tuple(a + b for a, b in zip(x.entries, y.entries)), x.backend)


def mat_neg(x: Matrix) -> Matrix:
    return Matrix(x.rows, x.cols, tuple(-a for a in x.entries), x.backend)


def mat_scale(scalar, x: Matrix) -> Matrix:
    if x.backend == EXACT:
        s = GaussianRational.of(scalar)  # floats rejected here
    else:
        if isinstance(scalar, GaussianRational) or isinstance(scalar, bool):
            raise BackendMismatchError("scale an approx matrix with a float/complex scalar")
        s = complex(scalar)
        if not cmath.isfinite(s):
            raise ValueError("scalar must be finite")
    return Matrix(x.rows, x.cols, tuple(s * a for a in x.entries), x.backend)


def mat_pow(x: Matrix, n: int) -> Matrix:
    if not x.is_square:
        raise ShapeError("powers need a square matrix")
    if n < 0:
        raise ValueError("exponent must be non-negative")
    acc = identity(x.rows, x.backend)
    base = x
    while n:
        if n & 1:
            acc = mat_mul(acc, base)
        n >>= 1
        if n:
            base = mat_mul(base, base)
    return acc


def mat_eq(x: Matrix, y: Matrix, tol: Tolerance = DEFAULT_TOL) -> bool:
    _same_backend(x, y)
    if x.shape != y.shape:
        raise ShapeError(f"cannot compare {x.shape} and {y.shape}")
    if x.backend == EXACT:
        return x.entries == y.entries
    return max_abs(x - y) <= tol.eps_eq


# -- queries ------------------------------------------------------------------


def is_zero(m: Matrix, tol: Tolerance | None = None) -> bool:
    """Exact zero test; on the approx backend, max modulus <= eps_eq."""
    if m.backend == EXACT:
        return all(not e for e in m.entries)
    eps = (tol or DEFAULT_TOL).eps_eq
    return all(abs(e) <= eps for e in m.entries)


def max_abs(m: Matrix) -> float:
    """Largest entry modulus as a float (diagnostic use)."""
    if m.backend == EXACT:
        return max((abs(e) for e in m.entries), default=0.0)
    return max((abs(e) for e in m.entries), default=0.0)


def frobenius(m: Matrix) -> float:
    if m.backend == EXACT:
        total = sum((e.abs2() for e in m.entries), Fraction(0))
        return float(total) ** 0.5
    return sum(abs(e) ** 2 for e in m.entries) ** 0.5


# -- backend conversion -------------------------------------------------------


def to_approx(m: Matrix) -> Matrix:
    if m.backend == APPROX:
        return m
    return Matrix(m.rows, m.cols, tuple(e.to_complex() for e in m.entries), APPROX)


def to_exact(m: Matrix) -> Matrix:
    """Exact image of an approx matrix (binary floats are exactly rational)."""
    if m.backend == EXACT:
        return m
    return Matrix(
        m.rows,
        m.cols,
        tuple(GaussianRational(Fraction(e.real), Fraction(e.imag)) for e in m.entries),
        EXACT,
    )


def to_numpy(m: Matrix):
    import numpy as np

    data = [
        [complex(m[i, j]) if m.backend == APPROX else m[i, j].to_complex() for j in range(m.cols)]
        for i in range(m.rows)
    ]
    return np.array(data, dtype=complex)


def from_numpy(arr, backend: str = APPROX) -> Matrix:
    rows = [[complex(v) for v in row] for row in arr.tolist()] if arr.ndim == 2 else None
    if rows is None:
        raise ShapeError("expected a 2-D array")
    m = Matrix.from_rows(rows, APPROX)
    return m if backend == APPROX else to_exact(m)


def as_backend_scalar(value, backend: str):
    """Normalise a scalar for a backend.

    Exact matrices take ints/Fractions/GaussianRationals unchanged; an exact
    scalar aimed at an approx matrix converts through ``to_complex`` (this is
    the one sanctioned crossing point, used when exact command-line scalars
    meet floating data).
    """
    if backend == EXACT:
        return GaussianRational.of(value)
    if isinstance(value, GaussianRational):
        return value.to_complex()
    return complex(value)


def scalar_is_zero(value) -> bool:
    if isinstance(value, GaussianRational):
        return not value
    return value == 0
