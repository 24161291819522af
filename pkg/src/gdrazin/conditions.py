"""Hypothesis checking for the representation rules, including lambda detection.

Each rule tag (L23, T24, T31, C32, T33, C34, T41, C42, T43, C44) names a set
of side conditions.  Conditions of the shape ``L == lam * R`` share a single
nonzero scalar lambda across the whole rule: it is detected from the first
condition whose right side is nonzero and then verified everywhere else.
When every lambda-bearing condition has both sides zero the constraint is
vacuous — any nonzero lambda works — and 1 is reported with the ``vacuous``
flag set.

Residuals are reported per condition: on the exact backend they are 0.0 or
1.0 (equality is decidable); on the floating backend they are max entry
moduli of the defect, compared against eps_eq.
"""

from __future__ import annotations

from dataclasses import dataclass

from .drazin import drazin, is_quasinilpotent
from .errors import ShapeError
from .matrices import (
    DEFAULT_TOL,
    EXACT,
    Matrix,
    Tolerance,
    as_backend_scalar,
    is_zero,
    mat_mul,
    mat_scale,
    max_abs,
    scalar_is_zero,
)
from .pierce import Idempotent, complement, corner_drazin, idempotent, pierce_split
from .scalars import GaussianRational, format_scalar
from .series import FormulaWork, PowerCache, make_work, sandwich_series, u_lower

THEOREMS = ("L23", "T24", "T31", "C32", "T33", "C34", "T41", "C42", "T43", "C44")


@dataclass(frozen=True, slots=True)
class LambdaMatch:
    """Outcome of solving L == lam * R for one nonzero scalar."""

    lam: object | None
    vacuous: bool
    ok: bool
    residual: float


def _first_nonzero_ratio(L: Matrix, R: Matrix, tol: Tolerance):
    eps = 0.0 if R.backend == EXACT else tol.eps_eq
    for i in range(R.rows):
        for j in range(R.cols):
            if abs(R[i, j]) > eps:
                return L[i, j] / R[i, j]
    return None


def _residual(defect: Matrix, tol: Tolerance) -> float:
    if defect.backend == EXACT:
        return 0.0 if is_zero(defect) else 1.0
    return max_abs(defect)


def _eps(backend: str, tol: Tolerance) -> float:
    return 0.0 if backend == EXACT else tol.eps_eq


def check_lambda_equation(L: Matrix, R: Matrix, tol: Tolerance = DEFAULT_TOL, lam=None) -> LambdaMatch:
    """Solve or verify ``L == lam * R`` with lam nonzero.

    Without ``lam``: both sides zero is vacuous (lam 1 reported); otherwise
    lam is the first-nonzero-entry ratio, accepted only if it is nonzero and
    reproduces L entrywise.  With ``lam``: verify at that value.
    """
    if L.shape != R.shape:
        raise ShapeError("lambda equation needs same-shape sides")
    if L.backend != R.backend:
        from .errors import BackendMismatchError

        raise BackendMismatchError("lambda equation needs one backend")
    vacuous = is_zero(R, tol) and is_zero(L, tol)
    if lam is not None:
        lam = as_backend_scalar(lam, L.backend)
        if scalar_is_zero(lam):
            raise ValueError("lambda must be nonzero")
        res = _residual(L - mat_scale(lam, R), tol)
        return LambdaMatch(lam=lam, vacuous=vacuous, ok=res <= _eps(L.backend, tol), residual=res)
    if vacuous:
        one = as_backend_scalar(1, L.backend)
        return LambdaMatch(lam=one, vacuous=True, ok=True, residual=0.0)
    if is_zero(R, tol):  # R = 0, L != 0: no scalar works
        return LambdaMatch(lam=None, vacuous=False, ok=False, residual=_residual(L, tol))
    cand = _first_nonzero_ratio(L, R, tol)
    if cand is None or scalar_is_zero(cand):
        return LambdaMatch(lam=None, vacuous=False, ok=False, residual=_residual(L, tol))
    res = _residual(L - mat_scale(cand, R), tol)
    if res > _eps(L.backend, tol):
        return LambdaMatch(lam=None, vacuous=False, ok=False, residual=res)
    return LambdaMatch(lam=cand, vacuous=False, ok=True, residual=res)


# -- report -------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class HypothesisReport:
    theorem: str
    holds: bool
    lam: object | None
    vacuous: bool
    residuals: dict
    failed: tuple[str, ...]
    backend: str

    def to_obj(self) -> dict:
        if self.lam is None:
            lam_obj = None
        elif isinstance(self.lam, GaussianRational):
            lam_obj = format_scalar(self.lam)
        else:
            lam_obj = [self.lam.real, self.lam.imag]
        return {
            "theorem": self.theorem,
            "holds": self.holds,
            "lambda": lam_obj,
            "vacuous": self.vacuous,
            "residuals": dict(self.residuals),
            "failed": list(self.failed),
            "backend": self.backend,
        }


@dataclass(frozen=True, slots=True)
class _Cond:
    name: str
    kind: str  # "zero" | "lambda" | "equal" | "qnil" | "zero_lam"
    left: object = None  # Matrix, bool (qnil), or callable lam -> Matrix (zero_lam)
    right: Matrix | None = None


def _resolve(theorem: str, conds: list[_Cond], backend: str, tol: Tolerance, lam) -> HypothesisReport:
    lambda_conds = [c for c in conds if c.kind == "lambda"]
    vacuous = all(is_zero(c.left, tol) and is_zero(c.right, tol) for c in lambda_conds)

    forced = lam is not None
    if forced:
        lam_used = as_backend_scalar(lam, backend)
        if scalar_is_zero(lam_used):
            raise ValueError("lambda must be nonzero")
    elif vacuous:
        lam_used = as_backend_scalar(1, backend)
    else:
        lam_used = None
        for c in lambda_conds:
            if not is_zero(c.right, tol):
                cand = _first_nonzero_ratio(c.left, c.right, tol)
                if cand is not None and not scalar_is_zero(cand):
                    lam_used = cand
                break

    residuals: dict[str, float] = {}
    failed: list[str] = []
    eps = _eps(backend, tol)
    lam_eval = lam_used if lam_used is not None else as_backend_scalar(1, backend)
    for c in conds:
        if c.kind == "zero":
            res = _residual(c.left, tol)
        elif c.kind == "zero_lam":
            res = _residual(c.left(lam_eval), tol)
        elif c.kind == "equal":
            res = _residual(c.left - c.right, tol)
        elif c.kind == "qnil":
            res = 0.0 if c.left else 1.0
        else:  # lambda
            if lam_used is None:
                res = _residual(c.left, tol) if is_zero(c.right, tol) else 1.0
            else:
                res = _residual(c.left - mat_scale(lam_used, c.right), tol)
        residuals[c.name] = res
        if res > eps:
            failed.append(c.name)

    holds = not failed and (lam_used is not None)
    lam_report = lam_used
    return HypothesisReport(
        theorem=theorem,
        holds=holds,
        lam=lam_report,
        vacuous=vacuous,
        residuals=residuals,
        failed=tuple(failed),
        backend=backend,
    )


# -- per-rule condition builders ------------------------------------------------


def _conds_l23(a: Matrix, b: Matrix, tol: Tolerance) -> list[_Cond]:
    bd = drazin(b, tol)
    return [
        _Cond("a quasinilpotent", "qnil", is_quasinilpotent(a, tol)),
        _Cond("a*b == lam*bpi*b*a*bpi", "lambda", mat_mul(a, b), _sandwich(bd.pi, b, a, bd.pi)),
    ]


def _conds_t24(a: Matrix, b: Matrix, tol: Tolerance) -> list[_Cond]:
    ad = drazin(a, tol)
    bd = drazin(b, tol)
    right = mat_mul(ad.pi, _sandwich(bd.pi, b, a, bd.pi))
    return [_Cond("a*b == lam*api*bpi*b*a*bpi", "lambda", mat_mul(a, b), right)]


def _sandwich(*ms: Matrix) -> Matrix:
    out = ms[0]
    for m in ms[1:]:
        out = mat_mul(out, m)
    return out


def _pierce_ctx(x: Matrix, p: Idempotent, tol: Tolerance):
    sp = pierce_split(x, p, tol)
    ad = corner_drazin(sp.a, p, tol)
    dd = corner_drazin(sp.d, complement(p), tol)
    return sp, ad, dd


def _conds_t31(x: Matrix, p: Idempotent, tol: Tolerance, work: FormulaWork) -> list[_Cond]:
    sp, ad, dd = _pierce_ctx(x, p, tol)
    a, b, c, d = sp.a, sp.b, sp.c, sp.d
    inner = sandwich_series(
        dd.dinv, dd.dinv, c, a, a, tol=tol, work=work, label="cond:dd^n.c.a^n(n>=1)"
    )
    series_b = mat_mul(inner, b)
    cb = mat_mul(c, b)

    def third(lam):
        return cb + mat_scale(lam * lam, series_b)

    return [
        _Cond("api*b*c == 0", "zero", _sandwich(ad.pi, b, c)),
        _Cond("api*b*d == lam*a*b", "lambda", _sandwich(ad.pi, b, d), mat_mul(a, b)),
        _Cond("c*b + lam^2*sum(dd^n.c.a^n.b) == 0", "zero_lam", third),
    ]


def _conds_c32(x: Matrix, p: Idempotent, tol: Tolerance, work: FormulaWork) -> list[_Cond]:
    sp, ad, dd = _pierce_ctx(x, p, tol)
    a, b, c, d = sp.a, sp.b, sp.c, sp.d
    inner = sandwich_series(
        ad.dinv, ad.dinv, b, d, d, tol=tol, work=work, label="cond:ad^n.b.d^n(n>=1)"
    )
    series_c = mat_mul(inner, c)
    bc = mat_mul(b, c)

    def third(lam):
        return bc + mat_scale(lam * lam, series_c)

    return [
        _Cond("dpi*c*b == 0", "zero", _sandwich(dd.pi, c, b)),
        _Cond("dpi*c*a == lam*d*c", "lambda", _sandwich(dd.pi, c, a), mat_mul(d, c)),
        _Cond("b*c + lam^2*sum(ad^n.b.d^n.c) == 0", "zero_lam", third),
    ]


def _conds_t33(x: Matrix, p: Idempotent, tol: Tolerance, work: FormulaWork) -> list[_Cond]:
    sp, ad, dd = _pierce_ctx(x, p, tol)
    a, b, c, d = sp.a, sp.b, sp.c, sp.d
    u = u_lower(a, c, d, ad.dinv, ad.pi, dd.dinv, dd.pi, tol=tol, work=work, prefix="cond:u")
    work.u = u
    # sum_{n>=0} b d^n c (a^d)^n; the n = 0 term collapses to b*c
    tail = sandwich_series(d, d, c, ad.dinv, ad.dinv, tol=tol, work=work, label="cond:d^n.c.ad^n(n>=1)")
    series = mat_mul(b, c + tail)
    t_left = _sandwich(dd.pi, c, b)
    t_right = _sandwich(mat_mul(c, ad.dinv) + mat_mul(d, u), a, b)
    work.t = t_left - t_right
    return [
        _Cond("api*a*b*dpi == lam*b*d", "lambda", _sandwich(ad.pi, a, b, dd.pi), mat_mul(b, d)),
        _Cond("dpi*c*b == (c*ad + d*u)*a*b", "equal", t_left, t_right),
        _Cond("sum(b.d^n.c.ad^n) == 0", "zero", series),
    ]


def _conds_c34(x: Matrix, p: Idempotent, tol: Tolerance, work: FormulaWork) -> list[_Cond]:
    sp, ad, dd = _pierce_ctx(x, p, tol)
    a, b, c, d = sp.a, sp.b, sp.c, sp.d
    u = _u_upper(a, b, d, ad, dd, tol, work, prefix="cond:u")
    work.u = u
    tail = sandwich_series(a, a, b, dd.dinv, dd.dinv, tol=tol, work=work, label="cond:a^n.b.dd^n(n>=1)")
    series = mat_mul(c, b + tail)
    t_left = _sandwich(ad.pi, b, c)
    t_right = _sandwich(mat_mul(b, dd.dinv) + mat_mul(a, u), d, c)
    work.t = t_left - t_right
    return [
        _Cond("dpi*d*c*api == lam*c*a", "lambda", _sandwich(dd.pi, d, c, ad.pi), mat_mul(c, a)),
        _Cond("api*b*c == (b*dd + a*u)*d*c", "equal", t_left, t_right),
        _Cond("sum(c.a^n.b.dd^n) == 0", "zero", series),
    ]


def _u_upper(a, b, d, ad, dd, tol, work, prefix="u"):
    """sum (a^d)^(n+2) b d^n d_pi + sum a_pi a^n b (d^d)^(n+2) - a^d b d^d."""
    s1 = sandwich_series(
        mat_mul(ad.dinv, ad.dinv), ad.dinv, b, dd.pi, d, tol=tol, work=work, label=f"{prefix}:ad^n+2.b.d^n.dpi"
    )
    s2 = sandwich_series(
        ad.pi, a, b, mat_mul(dd.dinv, dd.dinv), dd.dinv, tol=tol, work=work, label=f"{prefix}:api.a^n.b.dd^n+2"
    )
    return s1 + s2 - _sandwich(ad.dinv, b, dd.dinv)


def _block_ctx(A: Matrix, B: Matrix, C: Matrix, D: Matrix, tol: Tolerance):
    for name, m in (("A", A), ("D", D)):
        if not m.is_square:
            raise ShapeError(f"block {name} must be square")
    if B.rows != A.rows or B.cols != D.cols or C.rows != D.rows or C.cols != A.cols:
        raise ShapeError("blocks do not tile a square matrix")
    return drazin(A, tol), drazin(D, tol)


def _conds_t41(A, B, C, D, tol) -> list[_Cond]:
    ad, dd = _block_ctx(A, B, C, D, tol)
    return [
        _Cond("B*C == 0", "zero", mat_mul(B, C)),
        _Cond("A*B == lam*Api*B*D", "lambda", mat_mul(A, B), _sandwich(ad.pi, B, D)),
        _Cond("D*C == lam*Dpi*C*A", "lambda", mat_mul(D, C), _sandwich(dd.pi, C, A)),
    ]


def _conds_c42(A, B, C, D, tol) -> list[_Cond]:
    ad, dd = _block_ctx(A, B, C, D, tol)
    return [
        _Cond("C*B == 0", "zero", mat_mul(C, B)),
        _Cond("A*B == lam*Api*B*D", "lambda", mat_mul(A, B), _sandwich(ad.pi, B, D)),
        _Cond("D*C == lam*Dpi*C*A", "lambda", mat_mul(D, C), _sandwich(dd.pi, C, A)),
    ]


def _conds_t43(A, B, C, D, tol) -> list[_Cond]:
    ad, dd = _block_ctx(A, B, C, D, tol)
    return [
        _Cond("B*C == 0", "zero", mat_mul(B, C)),
        _Cond("B*D == lam*Api*A*B*Dpi", "lambda", mat_mul(B, D), _sandwich(ad.pi, A, B, dd.pi)),
        _Cond("C*A == lam*Dpi*D*C*Api", "lambda", mat_mul(C, A), _sandwich(dd.pi, D, C, ad.pi)),
    ]


def _conds_c44(A, B, C, D, tol) -> list[_Cond]:
    ad, dd = _block_ctx(A, B, C, D, tol)
    return [
        _Cond("C*B == 0", "zero", mat_mul(C, B)),
        _Cond("B*D == lam*Api*A*B*Dpi", "lambda", mat_mul(B, D), _sandwich(ad.pi, A, B, dd.pi)),
        _Cond("C*A == lam*Dpi*D*C*Api", "lambda", mat_mul(C, A), _sandwich(dd.pi, D, C, ad.pi)),
    ]


def check_hypotheses(
    theorem: str,
    *,
    tol: Tolerance = DEFAULT_TOL,
    lam=None,
    series_cap: int | None = None,
    a: Matrix | None = None,
    b: Matrix | None = None,
    x: Matrix | None = None,
    p=None,
    A: Matrix | None = None,
    B: Matrix | None = None,
    C: Matrix | None = None,
    D: Matrix | None = None,
    work: FormulaWork | None = None,
) -> HypothesisReport:
    """Evaluate every side condition of the rule on the given data."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown rule tag {theorem!r}")
    if theorem in ("L23", "T24"):
        if a is None or b is None:
            raise ValueError(f"{theorem} needs matrices a and b")
        if a.shape != b.shape or not a.is_square:
            raise ShapeError("a and b must be square and of equal size")
        backend = a.backend
        work = work or make_work(a.rows, series_cap)
        conds = _conds_l23(a, b, tol) if theorem == "L23" else _conds_t24(a, b, tol)
    elif theorem in ("T31", "C32", "T33", "C34"):
        if x is None or p is None:
            raise ValueError(f"{theorem} needs a matrix x and an idempotent p")
        pi = p if isinstance(p, Idempotent) else idempotent(p, tol)
        backend = x.backend
        work = work or make_work(x.rows, series_cap)
        builder = {"T31": _conds_t31, "C32": _conds_c32, "T33": _conds_t33, "C34": _conds_c34}[theorem]
        conds = builder(x, pi, tol, work)
    else:
        if A is None or B is None or C is None or D is None:
            raise ValueError(f"{theorem} needs blocks A, B, C, D")
        backend = A.backend
        work = work or make_work(A.rows + D.rows, series_cap)
        builder = {"T41": _conds_t41, "C42": _conds_c42, "T43": _conds_t43, "C44": _conds_c44}[theorem]
        conds = builder(A, B, C, D, tol)
    return _resolve(theorem, conds, backend, tol, lam)
