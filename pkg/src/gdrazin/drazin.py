"""Drazin inverse via core-nilpotent similarity.

For a square matrix A with Drazin index k, the space splits into the column
space and null space of A^k, both invariant under A.  In a basis adapted to
that splitting, A becomes blockdiag(C, N) with C invertible and N nilpotent,
and the Drazin inverse is blockdiag(C^-1, 0) carried back.  The construction
runs unchanged over the exact backend, which is what the verification suites
lean on; the floating path makes its rank decisions from singular values and
refuses to guess when a decision is too close to call.

The pseudoinverse route A^k (A^(2k+1))^+ A^k is kept as an independent
cross-check oracle for the floating backend only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AmbiguousRankError, SingularMatrixError
from .linsolve import column_space_basis, inverse_exact, matrix_from_columns, null_space_basis, rank_exact
from .matrices import (
    APPROX,
    DEFAULT_TOL,
    EXACT,
    Matrix,
    Tolerance,
    frobenius,
    from_numpy,
    identity,
    is_zero,
    mat_mul,
    mat_pow,
    max_abs,
    to_numpy,
    zeros,
)


@dataclass(frozen=True, slots=True)
class DrazinData:
    """Drazin inverse bundle: index, inverse, spectral idempotent, core and nilpotent parts."""

    index: int
    dinv: Matrix
    pi: Matrix
    core: Matrix
    nil: Matrix


def _require_square(m: Matrix):
    if not m.is_square:
        raise ValueError("operation requires a square matrix")


# -- rank ---------------------------------------------------------------------


def _singular_values(m: Matrix):
    import numpy as np

    return np.linalg.svd(to_numpy(m), compute_uv=False)


def _rank_decision(svals, eps_rank: float) -> tuple[int, bool]:
    """Count singular values above the relative cutoff; flag narrow gaps."""
    smax = float(svals[0]) if len(svals) else 0.0
    if smax == 0.0:
        return 0, False
    cut = eps_rank * smax
    r = sum(1 for s in svals if s > cut)
    ambiguous = False
    if 0 < r < len(svals):
        gap = float(svals[r - 1]) - float(svals[r])
        ambiguous = gap < 10.0 * eps_rank * smax
    return r, ambiguous


def rank(m: Matrix, tol: Tolerance = DEFAULT_TOL) -> int:
    """Rank; exact elimination or singular-value counting by backend."""
    if m.backend == EXACT:
        return rank_exact(m)
    r, _ = _rank_decision(_singular_values(m), tol.eps_rank)
    return r


def _rank_strict(m: Matrix, tol: Tolerance, what: str) -> int:
    """Rank for internal Drazin decisions; ambiguity is an error, not a guess."""
    if m.backend == EXACT:
        return rank_exact(m)
    r, ambiguous = _rank_decision(_singular_values(m), tol.eps_rank)
    if ambiguous:
        raise AmbiguousRankError(
            f"numerical rank of {what} is ambiguous: retained/discarded singular values "
            f"are separated by less than 10*eps_rank"
        )
    return r


# -- index and inverse ---------------------------------------------------------


def drazin_index(m: Matrix, tol: Tolerance = DEFAULT_TOL) -> int:
    """Smallest k >= 0 with rank(m^k) == rank(m^(k+1)); m^0 = I."""
    _require_square(m)
    n = m.rows
    prev = n  # rank of m^0
    power = m
    for k in range(n + 1):
        r = _rank_strict(power, tol, f"m^{k + 1}")
        if r == prev:
            return k
        prev = r
        power = mat_mul(power, m)
    return n


def drazin(m: Matrix, tol: Tolerance = DEFAULT_TOL) -> DrazinData:
    """Drazin inverse bundle of a square matrix."""
    _require_square(m)
    n = m.rows
    k = drazin_index(m, tol)
    if k == 0:
        dinv = _inverse(m)
    else:
        mk = mat_pow(m, k)
        dinv = _core_inverse(m, mk, tol)
    ident = identity(n, m.backend)
    pi = ident - mat_mul(m, dinv)
    core = mat_mul(mat_mul(m, m), dinv)
    nil = mat_mul(m, pi)
    return DrazinData(index=k, dinv=dinv, pi=pi, core=core, nil=nil)


def _inverse(m: Matrix) -> Matrix:
    if m.backend == EXACT:
        return inverse_exact(m)
    import numpy as np

    try:
        arr = np.linalg.inv(to_numpy(m))
    except np.linalg.LinAlgError as exc:
        raise SingularMatrixError(str(exc)) from exc
    return from_numpy(arr)


def _core_inverse(m: Matrix, mk: Matrix, tol: Tolerance) -> Matrix:
    """Similarity to blockdiag(C, N) via bases of R(m^k) and N(m^k)."""
    n = m.rows
    if m.backend == EXACT:
        col_basis = column_space_basis(mk)
        nul_basis = null_space_basis(mk)
        r = len(col_basis)
        if r == 0:
            return zeros(n, n, m.backend)
        s = matrix_from_columns(col_basis + nul_basis, EXACT)
        s_inv = inverse_exact(s)
        t = mat_mul(mat_mul(s_inv, m), s)
        c = submatrix_range(t, 0, r)
        c_inv = inverse_exact(c)
        mid = _embed_top_left(c_inv, n)
        return mat_mul(mat_mul(s, mid), s_inv)

    import numpy as np

    arr = to_numpy(mk)
    u, svals, vh = np.linalg.svd(arr)
    r, ambiguous = _rank_decision(svals, tol.eps_rank)
    if ambiguous:
        raise AmbiguousRankError("numerical rank of m^k is ambiguous in the core/nilpotent split")
    if r == 0:
        return zeros(n, n, m.backend)
    s = np.hstack([u[:, :r], vh[r:, :].conj().T])
    s_inv = np.linalg.inv(s)
    t = s_inv @ to_numpy(m) @ s
    c_inv = np.linalg.inv(t[:r, :r])
    mid = np.zeros((n, n), dtype=complex)
    mid[:r, :r] = c_inv
    return from_numpy(s @ mid @ s_inv)


def submatrix_range(m: Matrix, start: int, stop: int) -> Matrix:
    from .matrices import submatrix

    idx = list(range(start, stop))
    return submatrix(m, idx, idx)


def _embed_top_left(sub: Matrix, n: int) -> Matrix:
    from .matrices import embed

    idx = list(range(sub.rows))
    return embed(sub, n, idx, idx)


# -- derived operations ---------------------------------------------------------


def spectral_idempotent(m: Matrix, tol: Tolerance = DEFAULT_TOL) -> Matrix:
    """I - m * drazin(m).dinv."""
    return drazin(m, tol).pi


def is_quasinilpotent(m: Matrix, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Spectral radius zero; for an n x n matrix this means m^n == 0."""
    _require_square(m)
    n = m.rows
    power = mat_pow(m, n)
    if m.backend == EXACT:
        return is_zero(power)
    bound = max(1.0, frobenius(m) ** n)
    return frobenius(power) <= tol.eps_eq * bound


# -- verification and cross-check oracles ---------------------------------------


def drazin_residuals(m: Matrix, data: DrazinData, tol: Tolerance = DEFAULT_TOL) -> dict[str, float]:
    """Residuals of the defining identities; all zero on a valid bundle.

    Keys cover: dinv*m*dinv == dinv, commutation, nilpotency of the nilpotent
    part at the index, idempotency and commutation of pi, the core+nil
    splitting, and invertibility of m + pi (reported as 0.0/1.0).
    """
    n = m.rows
    ident = identity(n, m.backend)
    b = data.dinv
    res = {}
    res["dinv*m*dinv == dinv"] = max_abs(mat_mul(mat_mul(b, m), b) - b)
    res["m*dinv == dinv*m"] = max_abs(mat_mul(m, b) - mat_mul(b, m))
    nil_pow = mat_pow(data.nil, max(data.index, 1))
    res["nil^index == 0"] = max_abs(nil_pow)
    if data.index == 0:
        res["index 0 => nil == 0"] = max_abs(data.nil)
    res["pi*pi == pi"] = max_abs(mat_mul(data.pi, data.pi) - data.pi)
    res["pi*m == m*pi"] = max_abs(mat_mul(data.pi, m) - mat_mul(m, data.pi))
    res["core + nil == m"] = max_abs(data.core + data.nil - m)
    res["core*nil == 0"] = max_abs(mat_mul(data.core, data.nil))
    res["nil*core == 0"] = max_abs(mat_mul(data.nil, data.core))
    res["m + pi invertible"] = 0.0 if rank(m + data.pi, tol) == n else 1.0
    return res


def verify_drazin(m: Matrix, data: DrazinData, tol: Tolerance = DEFAULT_TOL) -> bool:
    eps = 0.0 if m.backend == EXACT else tol.eps_eq
    return all(v <= eps for v in drazin_residuals(m, data, tol).values())


def drazin_via_pinv(m: Matrix, tol: Tolerance = DEFAULT_TOL) -> Matrix:
    """Independent floating oracle: A^k pinv(A^(2k+1)) A^k."""
    if m.backend != APPROX:
        raise TypeError("the pseudoinverse oracle is a floating-backend cross-check")
    import numpy as np

    _require_square(m)
    k = drazin_index(m, tol)
    arr = to_numpy(m)
    ak = np.linalg.matrix_power(arr, k) if k > 0 else np.eye(m.rows, dtype=complex)
    mid = np.linalg.pinv(np.linalg.matrix_power(arr, 2 * k + 1))
    return from_numpy(ak @ mid @ ak)
