"""Pierce decomposition about an idempotent, and corner-subalgebra Drazin data.

An idempotent p splits any x into the four corner blocks
a = pxp, b = px(1-p), c = (1-p)xp, d = (1-p)x(1-p).  Blocks stay stored at
ambient size (embedded in their corner) because every representation rule
mixes them with ambient products.  "Drazin inverse of a corner block" always
means the inverse taken inside the corner subalgebra pAp: computed on the
compressed submatrix when p is a coordinate (diagonal 0/1) idempotent, and by
transport to a coordinate idempotent otherwise.  The corner spectral
idempotent is p - a*a^d, i.e. relative to the corner identity p, not to I.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .drazin import DrazinData, drazin
from .errors import MalformedCornerError, NonIdempotentError, ShapeError
from .linsolve import column_space_basis, inverse_exact, matrix_from_columns
from .matrices import (
    DEFAULT_TOL,
    EXACT,
    Matrix,
    Tolerance,
    embed,
    identity,
    is_zero,
    mat_eq,
    mat_mul,
    submatrix,
    zeros,
)
from .scalars import GaussianRational


@dataclass(frozen=True, slots=True)
class Idempotent:
    matrix: Matrix

    @property
    def size(self) -> int:
        return self.matrix.rows

    @property
    def backend(self) -> str:
        return self.matrix.backend


def idempotent(p: Matrix, tol: Tolerance = DEFAULT_TOL) -> Idempotent:
    """Validate p*p == p and wrap."""
    if not p.is_square:
        raise NonIdempotentError("idempotents are square")
    if not mat_eq(mat_mul(p, p), p, tol):
        raise NonIdempotentError("p*p differs from p beyond tolerance")
    return Idempotent(p)


def coordinate_idempotent(size: int, ones: Iterable[int], backend: str = EXACT) -> Idempotent:
    """Diagonal 0/1 idempotent with 1 at the given indices."""
    ones = sorted(set(ones))
    if ones and (ones[0] < 0 or ones[-1] >= size):
        raise IndexError("index out of range for coordinate idempotent")
    one = GaussianRational(1, 0) if backend == EXACT else 1 + 0j
    zero = GaussianRational(0, 0) if backend == EXACT else 0j
    vals = [one if i in set(ones) else zero for i in range(size)]
    from .matrices import diag

    return Idempotent(diag(vals, backend))


def complement(p: Idempotent) -> Idempotent:
    return Idempotent(identity(p.size, p.backend) - p.matrix)


def is_coordinate(p: Idempotent, tol: Tolerance = DEFAULT_TOL) -> bool:
    m = p.matrix
    eps = 0.0 if m.backend == EXACT else tol.eps_eq
    for i in range(m.rows):
        for j in range(m.cols):
            v = m[i, j]
            if i != j:
                if abs(v) > eps:
                    return False
            else:
                if not (abs(v) <= eps or abs(v - _one_like(m)) <= eps):
                    return False
    return True


def _one_like(m: Matrix):
    return GaussianRational(1, 0) if m.backend == EXACT else 1 + 0j


def coordinate_ones(p: Idempotent, tol: Tolerance = DEFAULT_TOL) -> tuple[int, ...]:
    m = p.matrix
    eps = 0.0 if m.backend == EXACT else tol.eps_eq
    return tuple(i for i in range(m.rows) if abs(m[i, i] - _one_like(m)) <= eps)


# -- splitting ----------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class PierceSplit:
    """The four corner blocks of x about p, all at ambient size."""

    p: Idempotent
    a: Matrix
    b: Matrix
    c: Matrix
    d: Matrix


def pierce_split(x: Matrix, p: Idempotent, tol: Tolerance = DEFAULT_TOL) -> PierceSplit:
    if x.shape != p.matrix.shape:
        raise ShapeError("x and p must have the same size")
    if x.backend != p.backend:
        from .errors import BackendMismatchError

        raise BackendMismatchError("x and p must share a backend")
    pm = p.matrix
    q = identity(x.rows, x.backend) - pm
    return PierceSplit(
        p=p,
        a=mat_mul(mat_mul(pm, x), pm),
        b=mat_mul(mat_mul(pm, x), q),
        c=mat_mul(mat_mul(q, x), pm),
        d=mat_mul(mat_mul(q, x), q),
    )


def pierce_join(split: PierceSplit, tol: Tolerance = DEFAULT_TOL) -> Matrix:
    """Reassemble a + b + c + d, after checking each block sits in its corner."""
    pm = split.p.matrix
    q = identity(pm.rows, pm.backend) - pm
    checks = (
        ("a", split.a, pm, pm),
        ("b", split.b, pm, q),
        ("c", split.c, q, pm),
        ("d", split.d, q, q),
    )
    for name, blk, left, right in checks:
        if not mat_eq(mat_mul(mat_mul(left, blk), right), blk, tol):
            raise MalformedCornerError(f"block {name!r} is not supported by its corner")
    return split.a + split.b + split.c + split.d


# -- corner Drazin data ---------------------------------------------------------


@dataclass(frozen=True, slots=True)
class CornerDrazin:
    """Drazin data of a corner block within its corner subalgebra.

    ``dinv`` is ambient (embedded back into the corner); ``pi`` is the corner
    spectral idempotent p - m*dinv, whose identity is p itself.
    """

    index: int
    dinv: Matrix
    pi: Matrix


def corner_drazin(m: Matrix, p: Idempotent, tol: Tolerance = DEFAULT_TOL) -> CornerDrazin:
    pm = p.matrix
    if m.shape != pm.shape:
        raise ShapeError("block and idempotent sizes differ")
    if not mat_eq(mat_mul(mat_mul(pm, m), pm), m, tol):
        raise MalformedCornerError("matrix does not lie in the p-corner")
    if is_zero(pm, tol):
        n = pm.rows
        return CornerDrazin(index=0, dinv=zeros(n, n, m.backend), pi=zeros(n, n, m.backend))
    if is_coordinate(p, tol):
        idx = list(coordinate_ones(p, tol))
        if len(idx) == pm.rows:
            data = drazin(m, tol)
            return CornerDrazin(index=data.index, dinv=data.dinv, pi=pm - mat_mul(m, data.dinv))
        sub = submatrix(m, idx, idx)
        data = drazin(sub, tol)
        dinv = embed(data.dinv, pm.rows, idx, idx)
        return CornerDrazin(index=data.index, dinv=dinv, pi=pm - mat_mul(m, dinv))
    # transport a general idempotent to coordinate form: columns of s span
    # R(p) then R(1-p), so s^-1 p s = diag(I_r, 0)
    s, s_inv, r = _coordinate_transport(p, tol)
    m_t = mat_mul(mat_mul(s_inv, m), s)
    q = coordinate_idempotent(pm.rows, range(r), m.backend)
    inner = corner_drazin(m_t, q, tol)
    dinv = mat_mul(mat_mul(s, inner.dinv), s_inv)
    return CornerDrazin(index=inner.index, dinv=dinv, pi=pm - mat_mul(m, dinv))


def _coordinate_transport(p: Idempotent, tol: Tolerance):
    pm = p.matrix
    q = identity(pm.rows, pm.backend) - pm
    if pm.backend == EXACT:
        range_cols = column_space_basis(pm)
        null_cols = column_space_basis(q)
        s = matrix_from_columns(range_cols + null_cols, EXACT)
        return s, inverse_exact(s), len(range_cols)
    import numpy as np

    from .drazin import _rank_decision
    from .matrices import from_numpy, to_numpy

    arr_p, arr_q = to_numpy(pm), to_numpy(q)
    up, sp, _ = np.linalg.svd(arr_p)
    uq, sq, _ = np.linalg.svd(arr_q)
    r, _ = _rank_decision(sp, tol.eps_rank)
    rq, _ = _rank_decision(sq, tol.eps_rank)
    s = np.hstack([up[:, :r], uq[:, :rq]])
    return from_numpy(s), from_numpy(np.linalg.inv(s)), r
