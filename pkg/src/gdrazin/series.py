"""Finite evaluation of the matrix series used by the representation rules.

Every series here carries a factor that is nilpotent on square-matrix input
(powers of a nilpotent part, or a power sandwiched with a spectral
idempotent), so summation stops at the first exactly-zero factor — never by
hitting the cap.  The cap (default 4 * ambient size) turns a would-be
infinite loop into a diagnosed error.  Zero detection monitors the monotone
factors of each term, not the whole term: a factor that becomes zero stays
zero under the step maps, while a whole term can vanish accidentally.

On the floating backend "zero" means max entry modulus below eps_eq.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import SeriesCapError
from .matrices import DEFAULT_TOL, Matrix, Tolerance, is_zero, mat_mul, zeros


@dataclass
class FormulaWork:
    """Evaluation record: cap, per-series lengths, intermediates, findings."""

    series_cap: int
    lengths: dict[str, int] = field(default_factory=dict)
    z: Matrix | None = None
    u: Matrix | None = None
    i_terms: list[Matrix] = field(default_factory=list)
    i: Matrix | None = None
    t: Matrix | None = None
    notes: list[str] = field(default_factory=list)

    def record(self, label: str, count: int):
        self.lengths[label] = count

    def max_length(self) -> int:
        return max(self.lengths.values(), default=0)


def make_work(size: int, series_cap: int | None = None) -> FormulaWork:
    return FormulaWork(series_cap=series_cap if series_cap is not None else 4 * size)


def _dead(m: Matrix, tol: Tolerance) -> bool:
    return is_zero(m, tol)


def sandwich_series(
    left0: Matrix,
    left_step: Matrix | None,
    mid: Matrix | None,
    right0: Matrix,
    right_step: Matrix | None,
    *,
    tol: Tolerance = DEFAULT_TOL,
    work: FormulaWork,
    label: str,
) -> Matrix:
    """Sum_n  left_n * mid * right_n  with left_(n+1) = step*left_n and
    right_(n+1) = right_n*step.

    Stops when either running factor dies; both factor sequences are monotone
    (zero stays zero), so nothing nonzero is ever dropped.
    """
    left, right = left0, right0
    shape_probe = mat_mul(left, right) if mid is None else mat_mul(mat_mul(left, mid), right)
    total = zeros(shape_probe.rows, shape_probe.cols, shape_probe.backend)
    count = 0
    while not (_dead(left, tol) or _dead(right, tol)):
        term = mat_mul(left, right) if mid is None else mat_mul(mat_mul(left, mid), right)
        total = total + term
        count += 1
        if count > work.series_cap:
            raise SeriesCapError(f"series {label!r} exceeded cap {work.series_cap}")
        if left_step is not None:
            left = mat_mul(left_step, left)
        if right_step is not None:
            right = mat_mul(right, right_step)
        if left_step is None and right_step is None:
            raise SeriesCapError(f"series {label!r} has no step and nonzero factors")
    work.record(label, count)
    return total


def term_series(first_index: int, term_fn, *, tol: Tolerance = DEFAULT_TOL, work: FormulaWork, label: str) -> Matrix:
    """Sum term_fn(n) for n >= first_index until a whole term is exactly zero.

    Only for series whose terms satisfy term_(n+1) = X * term_n * Y for fixed
    X, Y, which makes whole-term zero detection sound.
    """
    n = first_index
    total = None
    count = 0
    while True:
        term = term_fn(n)
        if total is None:
            total = zeros(term.rows, term.cols, term.backend)
        if _dead(term, tol):
            break
        total = total + term
        count += 1
        if count > work.series_cap:
            raise SeriesCapError(f"series {label!r} exceeded cap {work.series_cap}")
        n += 1
    work.record(label, count)
    return total


class PowerCache:
    """Lazy powers m^0, m^1, ... of a fixed square matrix."""

    def __init__(self, m: Matrix):
        from .matrices import identity

        self._m = m
        self._pow = [identity(m.rows, m.backend)]

    def __call__(self, n: int) -> Matrix:
        while len(self._pow) <= n:
            self._pow.append(mat_mul(self._pow[-1], self._m))
        return self._pow[n]


# -- the concrete series of the Pierce rules ---------------------------------
#
# Corner conventions: a_dinv/a_pi are the corner Drazin inverse and corner
# spectral idempotent of the block a inside pAp (a_pi = p - a*a_dinv), and
# likewise for d inside (1-p)A(1-p).  Every product below keeps each block in
# its corner, so the corner idempotents act exactly as the formulas demand.


def u_lower(a, c, d, a_dinv, a_pi, d_dinv, d_pi, *, tol, work, prefix="u"):
    """sum (d^d)^(n+2) c a^n a_pi  +  sum d_pi d^n c (a^d)^(n+2)  -  d^d c a^d."""
    s1 = sandwich_series(
        mat_mul(d_dinv, d_dinv), d_dinv, c, a_pi, a, tol=tol, work=work, label=f"{prefix}:dd^n+2.c.a^n.api"
    )
    s2 = sandwich_series(
        d_pi, d, c, mat_mul(a_dinv, a_dinv), a_dinv, tol=tol, work=work, label=f"{prefix}:dpi.d^n.c.ad^n+2"
    )
    return s1 + s2 - mat_mul(mat_mul(d_dinv, c), a_dinv)


def i_n_term(n, b, c, a, a_dinv, a_pi, d, d_dinv, d_pi, adp: PowerCache, ddp: PowerCache, *, tol, work):
    """The n-th off-diagonal correction coefficient of the lower Pierce rule."""
    s1 = sandwich_series(
        d_pi, d, c, adp(n + 3), a_dinv, tol=tol, work=work, label=f"i[{n}]:dpi.d^k.c.ad^n+k+3"
    )
    s2 = sandwich_series(
        ddp(n + 3), d_dinv, c, a_pi, a, tol=tol, work=work, label=f"i[{n}]:dd^n+k+3.c.a^k.api"
    )
    return (
        mat_mul(b, s1)
        - mat_mul(mat_mul(mat_mul(b, d_dinv), c), adp(n + 2))
        + mat_mul(b, s2)
        - mat_mul(mat_mul(mat_mul(b, ddp(n + 2)), c), a_dinv)
    )


def i_correction(b, c, a, a_dinv, a_pi, d, d_dinv, d_pi, adp: PowerCache, ddp: PowerCache, *, tol, work):
    """Closed-rule corner correction:

    sum d_pi d^n c (a^d)^(n+3) b - d^d c (a^d)^2 b
    + sum (d^d)^(n+3) c a^n a_pi b - (d^d)^2 c a^d b
    """
    s1 = sandwich_series(d_pi, d, c, adp(3), a_dinv, tol=tol, work=work, label="i:dpi.d^n.c.ad^n+3")
    s2 = sandwich_series(ddp(3), d_dinv, c, a_pi, a, tol=tol, work=work, label="i:dd^n+3.c.a^n.api")
    return (
        mat_mul(s1, b)
        - mat_mul(mat_mul(mat_mul(d_dinv, c), adp(2)), b)
        + mat_mul(s2, b)
        - mat_mul(mat_mul(mat_mul(ddp(2), c), a_dinv), b)
    )


