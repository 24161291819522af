"""Evaluators for the ten representation rules.

Each rule takes blocks satisfying its side conditions and produces the Drazin
inverse of an assembled target (a sum, a Pierce-split matrix, or a 2x2 block
matrix) by an explicit finite formula.  Side conditions are always checked
before evaluation; `unchecked=True` skips the check and exists purely for
benchmarking.

The four corollary rules are evaluated twice: once by delegating to their
parent rule on the flipped data (the provably equivalent route, whose result
is returned) and once by transcribing the corollary's own closed form.  The
two paths must agree; a mismatch is recorded as a note on the work record
rather than raised, so verification runs can surface it as a finding.

Rule tags: L21 (block triangular), L23 (quasinilpotent + invertible-part sum),
T24 (general additive), T31/C32/T33/C34 (Pierce splits), T41/C42/T43/C44
(2x2 block matrices).
"""

from __future__ import annotations

from dataclasses import dataclass

from .conditions import HypothesisReport, check_hypotheses
from .drazin import DrazinData, drazin, drazin_index
from .errors import HypothesisError, MalformedCornerError, ShapeError
from .matrices import (
    DEFAULT_TOL,
    Matrix,
    Tolerance,
    block2x2,
    identity,
    mat_eq,
    mat_mul,
    mat_pow,
    mat_scale,
    submatrix,
    zeros,
)
from .pierce import Idempotent, complement, corner_drazin, idempotent, pierce_split
from .series import FormulaWork, PowerCache, i_n_term, make_work, sandwich_series, term_series, u_lower


def _as_idem(p, tol: Tolerance) -> Idempotent:
    return p if isinstance(p, Idempotent) else idempotent(p, tol)


def _require(theorem: str, report: HypothesisReport):
    if not report.holds:
        raise HypothesisError(theorem, report.failed)


# -- L21: block triangular ------------------------------------------------------


def lemma21_triangular(
    a: Matrix,
    b: Matrix,
    c: Matrix,
    p,
    orientation: str = "lower",
    tol: Tolerance = DEFAULT_TOL,
    *,
    series_cap: int | None = None,
    work: FormulaWork | None = None,
) -> DrazinData:
    """Drazin data of a block-triangular matrix from its diagonal corners.

    ``lower`` treats x = a + c + b with a in the p-corner, b in the
    complementary corner and c in the (1-p)..p slot; ``upper`` mirrors this
    with b in the p-corner and c in the p..(1-p) slot.  The off-corner of the
    result is

        sum (b^d)^(i+2) c a^i a_pi  +  sum b_pi b^i c (a^d)^(i+2)  -  b^d c a^d.
    """
    if orientation not in ("lower", "upper"):
        raise ValueError("orientation must be 'lower' or 'upper'")
    p = _as_idem(p, tol)
    q = complement(p)
    corner_a, corner_b = (p, q) if orientation == "lower" else (q, p)
    _check_corner("a", a, corner_a, corner_a, tol)
    _check_corner("b", b, corner_b, corner_b, tol)
    _check_corner("c", c, corner_b, corner_a, tol)
    work = work if work is not None else make_work(a.rows, series_cap)

    ad = corner_drazin(a, corner_a, tol)
    bd = corner_drazin(b, corner_b, tol)
    z = _triangular_off_corner(a, b, c, ad, bd, tol, work)
    work.z = z
    x = a + b + c
    dinv = ad.dinv + z + bd.dinv
    ident = identity(x.rows, x.backend)
    pi = ident - mat_mul(x, dinv)
    return DrazinData(
        index=drazin_index(x, tol),
        dinv=dinv,
        pi=pi,
        core=mat_mul(mat_mul(x, x), dinv),
        nil=mat_mul(x, pi),
    )


def _check_corner(name: str, m: Matrix, left: Idempotent, right: Idempotent, tol: Tolerance):
    if not mat_eq(mat_mul(mat_mul(left.matrix, m), right.matrix), m, tol):
        raise MalformedCornerError(f"block {name!r} does not lie in its corner")


def _triangular_off_corner(a, b, c, ad, bd, tol, work) -> Matrix:
    s1 = sandwich_series(
        mat_mul(bd.dinv, bd.dinv), bd.dinv, c, ad.pi, a, tol=tol, work=work, label="z:bd^i+2.c.a^i.api"
    )
    s2 = sandwich_series(
        bd.pi, b, c, mat_mul(ad.dinv, ad.dinv), ad.dinv, tol=tol, work=work, label="z:bpi.b^i.c.ad^i+2"
    )
    return s1 + s2 - mat_mul(mat_mul(bd.dinv, c), ad.dinv)


# -- L23 and T24: additive rules --------------------------------------------------


def lemma23_qnil_plus_gd(
    a: Matrix,
    b: Matrix,
    lam=None,
    tol: Tolerance = DEFAULT_TOL,
    *,
    series_cap: int | None = None,
    unchecked: bool = False,
    work: FormulaWork | None = None,
) -> Matrix:
    """(a + b)^d = sum_n (b^d)^(n+1) a^n, for quasinilpotent a."""
    work = work if work is not None else make_work(a.rows, series_cap)
    if not unchecked:
        _require("L23", check_hypotheses("L23", a=a, b=b, lam=lam, tol=tol, series_cap=work.series_cap))
    bd = drazin(b, tol)
    return sandwich_series(
        bd.dinv, bd.dinv, None, identity(a.rows, a.backend), a, tol=tol, work=work, label="L23:bd^n+1.a^n"
    )


def thm24_additive(
    a: Matrix,
    b: Matrix,
    lam=None,
    tol: Tolerance = DEFAULT_TOL,
    *,
    series_cap: int | None = None,
    unchecked: bool = False,
    work: FormulaWork | None = None,
) -> Matrix:
    """(a + b)^d by the additive rule:

    b_pi a^d + b^d a_pi + sum_{n>=1} (b^d)^(n+1) a^n a_pi
                        + sum_{n>=0} b_pi (a+b)^n b (a^d)^(n+2).
    """
    work = work if work is not None else make_work(a.rows, series_cap)
    if not unchecked:
        _require("T24", check_hypotheses("T24", a=a, b=b, lam=lam, tol=tol, series_cap=work.series_cap))
    ad = drazin(a, tol)
    bd = drazin(b, tol)
    s1 = sandwich_series(
        mat_mul(bd.dinv, bd.dinv),
        bd.dinv,
        None,
        mat_mul(a, ad.pi),
        a,
        tol=tol,
        work=work,
        label="T24:bd^n+1.a^n.api(n>=1)",
    )
    x = a + b
    xp = PowerCache(x)
    adp = PowerCache(ad.dinv)

    def second(n: int) -> Matrix:
        return mat_mul(mat_mul(mat_mul(bd.pi, xp(n)), b), adp(n + 2))

    s2 = term_series(0, second, tol=tol, work=work, label="T24:bpi.x^n.b.ad^n+2")
    return mat_mul(bd.pi, ad.dinv) + mat_mul(bd.dinv, ad.pi) + s1 + s2


# -- T31 family: Pierce splits -----------------------------------------------------


@dataclass(frozen=True, slots=True)
class _PierceCtx:
    sp: object
    ad: object
    dd: object
    adp: PowerCache
    ddp: PowerCache


def _pierce_ctx(x: Matrix, p: Idempotent, tol: Tolerance) -> _PierceCtx:
    sp = pierce_split(x, p, tol)
    ad = corner_drazin(sp.a, p, tol)
    dd = corner_drazin(sp.d, complement(p), tol)
    return _PierceCtx(sp=sp, ad=ad, dd=dd, adp=PowerCache(ad.dinv), ddp=PowerCache(dd.dinv))


def _eval_t31(x: Matrix, p: Idempotent, tol: Tolerance, work: FormulaWork) -> Matrix:
    ctx = _pierce_ctx(x, p, tol)
    a, b, c, d = ctx.sp.a, ctx.sp.b, ctx.sp.c, ctx.sp.d
    ad, dd, adp, ddp = ctx.ad, ctx.dd, ctx.adp, ctx.ddp
    u = u_lower(a, c, d, ad.dinv, ad.pi, dd.dinv, dd.pi, tol=tol, work=work)
    work.u = u
    base = ad.dinv + u + dd.dinv
    xp = PowerCache(x)

    def outer(n: int) -> Matrix:
        i_n = i_n_term(n, b, c, a, ad.dinv, ad.pi, d, dd.dinv, dd.pi, adp, ddp, tol=tol, work=work)
        work.i_terms.append(i_n)
        ksum = zeros(x.rows, x.cols, x.backend)
        for k in range(1, n + 1):
            ksum = ksum + mat_mul(mat_mul(mat_mul(b, ddp(k + 1)), c), adp(n + 2 - k))
        block = (i_n - ksum) + mat_mul(b, ddp(n + 2))
        return mat_mul(xp(n), block)

    return base + term_series(0, outer, tol=tol, work=work, label="T31:outer")


def _eval_c32_direct(x: Matrix, p: Idempotent, tol: Tolerance, work: FormulaWork) -> Matrix:
    """The corollary's own closed form (mirror of the lower rule)."""
    ctx = _pierce_ctx(x, p, tol)
    a, b, c, d = ctx.sp.a, ctx.sp.b, ctx.sp.c, ctx.sp.d
    ad, dd, adp, ddp = ctx.ad, ctx.dd, ctx.adp, ctx.ddp
    s1 = sandwich_series(
        mat_mul(ad.dinv, ad.dinv), ad.dinv, b, dd.pi, d, tol=tol, work=work, label="C32:ad^n+2.b.d^n.dpi"
    )
    s2 = sandwich_series(
        ad.pi, a, b, mat_mul(dd.dinv, dd.dinv), dd.dinv, tol=tol, work=work, label="C32:api.a^n.b.dd^n+2"
    )
    u = s1 + s2 - mat_mul(mat_mul(ad.dinv, b), dd.dinv)
    base = ad.dinv + u + dd.dinv
    xp = PowerCache(x)

    def i_n(n: int) -> Matrix:
        t1 = sandwich_series(
            ad.pi, a, b, ddp(n + 3), dd.dinv, tol=tol, work=work, label=f"C32:i[{n}]:api.a^k.b.dd^n+k+3"
        )
        t2 = sandwich_series(
            adp(n + 3), ad.dinv, b, dd.pi, d, tol=tol, work=work, label=f"C32:i[{n}]:ad^n+k+3.b.d^k.dpi"
        )
        return (
            mat_mul(c, t1)
            - mat_mul(mat_mul(mat_mul(c, ad.dinv), b), ddp(n + 2))
            + mat_mul(c, t2)
            - mat_mul(mat_mul(mat_mul(c, adp(n + 2)), b), dd.dinv)
        )

    def outer(n: int) -> Matrix:
        ksum = zeros(x.rows, x.cols, x.backend)
        for k in range(1, n + 1):
            ksum = ksum + mat_mul(mat_mul(mat_mul(c, adp(k + 1)), b), ddp(n + 2 - k))
        block = mat_mul(c, adp(n + 2)) + (i_n(n) - ksum)
        return mat_mul(xp(n), block)

    return base + term_series(0, outer, tol=tol, work=work, label="C32:outer")


def _eval_t33(x: Matrix, p: Idempotent, tol: Tolerance, work: FormulaWork) -> Matrix:
    ctx = _pierce_ctx(x, p, tol)
    a, b, c, d = ctx.sp.a, ctx.sp.b, ctx.sp.c, ctx.sp.d
    ad, dd, adp, ddp = ctx.ad, ctx.dd, ctx.adp, ctx.ddp
    u = u_lower(a, c, d, ad.dinv, ad.pi, dd.dinv, dd.pi, tol=tol, work=work)
    work.u = u
    from .series import i_correction

    i = i_correction(b, c, a, ad.dinv, ad.pi, d, dd.dinv, dd.pi, adp, ddp, tol=tol, work=work)
    work.i = i
    return ad.dinv + mat_mul(adp(2), b) + u + dd.dinv + i


def _eval_c34_direct(x: Matrix, p: Idempotent, tol: Tolerance, work: FormulaWork) -> Matrix:
    ctx = _pierce_ctx(x, p, tol)
    a, b, c, d = ctx.sp.a, ctx.sp.b, ctx.sp.c, ctx.sp.d
    ad, dd, adp, ddp = ctx.ad, ctx.dd, ctx.adp, ctx.ddp
    s1 = sandwich_series(
        mat_mul(ad.dinv, ad.dinv), ad.dinv, b, dd.pi, d, tol=tol, work=work, label="C34:ad^n+2.b.d^n.dpi"
    )
    s2 = sandwich_series(
        ad.pi, a, b, mat_mul(dd.dinv, dd.dinv), dd.dinv, tol=tol, work=work, label="C34:api.a^n.b.dd^n+2"
    )
    u = s1 + s2 - mat_mul(mat_mul(ad.dinv, b), dd.dinv)
    t1 = sandwich_series(ad.pi, a, b, ddp(3), dd.dinv, tol=tol, work=work, label="C34:i:api.a^n.b.dd^n+3")
    t2 = sandwich_series(adp(3), ad.dinv, b, dd.pi, d, tol=tol, work=work, label="C34:i:ad^n+3.b.d^n.dpi")
    i = (
        mat_mul(t1, c)
        - mat_mul(mat_mul(mat_mul(ad.dinv, b), ddp(2)), c)
        + mat_mul(t2, c)
        - mat_mul(mat_mul(mat_mul(adp(2), b), dd.dinv), c)
    )
    return ad.dinv + i + u + mat_mul(ddp(2), c) + dd.dinv


def thm31_pierce(
    x: Matrix,
    p,
    lam=None,
    tol: Tolerance = DEFAULT_TOL,
    *,
    series_cap: int | None = None,
    unchecked: bool = False,
    work: FormulaWork | None = None,
) -> Matrix:
    """Drazin inverse of a Pierce-split matrix under the lower-rule conditions."""
    p = _as_idem(p, tol)
    work = work if work is not None else make_work(x.rows, series_cap)
    if not unchecked:
        _require("T31", check_hypotheses("T31", x=x, p=p, lam=lam, tol=tol, series_cap=work.series_cap))
    return _eval_t31(x, p, tol, work)


def cor32_pierce(
    x: Matrix,
    p,
    lam=None,
    tol: Tolerance = DEFAULT_TOL,
    *,
    series_cap: int | None = None,
    unchecked: bool = False,
    work: FormulaWork | None = None,
) -> Matrix:
    """Mirror of the lower rule; delegates to it about the complement of p."""
    p = _as_idem(p, tol)
    work = work if work is not None else make_work(x.rows, series_cap)
    if not unchecked:
        _require("C32", check_hypotheses("C32", x=x, p=p, lam=lam, tol=tol, series_cap=work.series_cap))
    delegated = _eval_t31(x, complement(p), tol, work)
    direct = _eval_c32_direct(x, p, tol, work)
    _cross_check("C32", delegated, direct, tol, work)
    return delegated


def thm33_pierce(
    x: Matrix,
    p,
    lam=None,
    tol: Tolerance = DEFAULT_TOL,
    *,
    series_cap: int | None = None,
    unchecked: bool = False,
    work: FormulaWork | None = None,
) -> Matrix:
    """Closed-form Pierce rule (no outer series)."""
    p = _as_idem(p, tol)
    work = work if work is not None else make_work(x.rows, series_cap)
    if not unchecked:
        _require("T33", check_hypotheses("T33", x=x, p=p, lam=lam, tol=tol, series_cap=work.series_cap))
    return _eval_t33(x, p, tol, work)


def cor34_pierce(
    x: Matrix,
    p,
    lam=None,
    tol: Tolerance = DEFAULT_TOL,
    *,
    series_cap: int | None = None,
    unchecked: bool = False,
    work: FormulaWork | None = None,
) -> Matrix:
    p = _as_idem(p, tol)
    work = work if work is not None else make_work(x.rows, series_cap)
    if not unchecked:
        _require("C34", check_hypotheses("C34", x=x, p=p, lam=lam, tol=tol, series_cap=work.series_cap))
    delegated = _eval_t33(x, complement(p), tol, work)
    direct = _eval_c34_direct(x, p, tol, work)
    _cross_check("C34", delegated, direct, tol, work)
    return delegated


def _cross_check(tag: str, delegated: Matrix, direct: Matrix, tol: Tolerance, work: FormulaWork):
    if not mat_eq(delegated, direct, tol):
        work.notes.append(f"{tag}: delegated and direct closed forms disagree")


# -- T41 family: 2x2 block matrices -------------------------------------------------


def _block_shapes(A, B, C, D):
    if not A.is_square or not D.is_square:
        raise ShapeError("diagonal blocks must be square")
    if B.rows != A.rows or B.cols != D.cols or C.rows != D.rows or C.cols != A.cols:
        raise ShapeError("blocks do not tile a square matrix")


def _eval_t41(A, B, C, D, tol: Tolerance, work: FormulaWork) -> Matrix:
    ad = drazin(A, tol)
    dd = drazin(D, tol)
    adp, ddp = PowerCache(ad.dinv), PowerCache(dd.dinv)
    m = block2x2(A, B, C, D)
    r = A.rows
    base = block2x2(ad.dinv, mat_mul(B, ddp(2)), mat_mul(C, adp(2)), dd.dinv)
    mp = PowerCache(m)
    zb = zeros(A.rows, A.rows, A.backend)
    zd = zeros(D.rows, D.rows, D.backend)

    def outer(n: int) -> Matrix:
        corr = block2x2(zb, mat_mul(B, ddp(n + 2)), mat_mul(C, adp(n + 2)), zd)
        return mat_mul(mp(n), corr)

    return base + term_series(1, outer, tol=tol, work=work, label="T41:outer")


def _eval_t43(A, B, C, D, tol: Tolerance, work: FormulaWork) -> Matrix:
    ad = drazin(A, tol)
    dd = drazin(D, tol)
    adp, ddp = PowerCache(ad.dinv), PowerCache(dd.dinv)
    two = 2
    return block2x2(
        mat_scale(two, ad.dinv),
        mat_mul(adp(2), B),
        mat_mul(ddp(2), C),
        mat_scale(two, dd.dinv) + mat_mul(mat_mul(ddp(3), C), B),
    )


def _eval_c44_direct(A, B, C, D, tol: Tolerance, work: FormulaWork) -> Matrix:
    ad = drazin(A, tol)
    dd = drazin(D, tol)
    adp, ddp = PowerCache(ad.dinv), PowerCache(dd.dinv)
    return block2x2(
        mat_scale(2, ad.dinv) + mat_mul(mat_mul(adp(3), B), C),
        mat_mul(adp(2), B),
        mat_mul(ddp(2), C),
        mat_scale(2, dd.dinv),
    )


def _swap_blocks(w: Matrix, top: int) -> Matrix:
    """Conjugate by the permutation exchanging the two index groups.

    ``w`` is the result computed for the flipped layout whose leading block
    has size ``top``; the returned matrix is in the original layout.
    """
    n = w.rows
    rest = list(range(top, n))
    lead = list(range(top))
    tl = submatrix(w, rest, rest)
    tr = submatrix(w, rest, lead)
    bl = submatrix(w, lead, rest)
    br = submatrix(w, lead, lead)
    return block2x2(tl, tr, bl, br)


def thm41_block(
    A: Matrix,
    B: Matrix,
    C: Matrix,
    D: Matrix,
    lam=None,
    tol: Tolerance = DEFAULT_TOL,
    *,
    series_cap: int | None = None,
    unchecked: bool = False,
    work: FormulaWork | None = None,
) -> Matrix:
    """Drazin inverse of [[A, B], [C, D]] under the B*C == 0 block rule."""
    _block_shapes(A, B, C, D)
    work = work if work is not None else make_work(A.rows + D.rows, series_cap)
    if not unchecked:
        _require(
            "T41", check_hypotheses("T41", A=A, B=B, C=C, D=D, lam=lam, tol=tol, series_cap=work.series_cap)
        )
    return _eval_t41(A, B, C, D, tol, work)


def cor42_block(
    A: Matrix,
    B: Matrix,
    C: Matrix,
    D: Matrix,
    lam=None,
    tol: Tolerance = DEFAULT_TOL,
    *,
    series_cap: int | None = None,
    unchecked: bool = False,
    work: FormulaWork | None = None,
) -> Matrix:
    """C*B == 0 variant; delegates to the parent rule on the flipped layout."""
    _block_shapes(A, B, C, D)
    work = work if work is not None else make_work(A.rows + D.rows, series_cap)
    if not unchecked:
        _require(
            "C42", check_hypotheses("C42", A=A, B=B, C=C, D=D, lam=lam, tol=tol, series_cap=work.series_cap)
        )
    delegated = _swap_blocks(_eval_t41(D, C, B, A, tol, work), D.rows)
    direct = _eval_t41(A, B, C, D, tol, work)  # the corollary prints the same form
    _cross_check("C42", delegated, direct, tol, work)
    return delegated


def thm43_block(
    A: Matrix,
    B: Matrix,
    C: Matrix,
    D: Matrix,
    lam=None,
    tol: Tolerance = DEFAULT_TOL,
    *,
    series_cap: int | None = None,
    unchecked: bool = False,
    work: FormulaWork | None = None,
) -> Matrix:
    """Closed block rule with doubled diagonal terms, evaluated as printed.

    Note: on inputs whose diagonal blocks have nonzero Drazin inverse this
    closed form is known to disagree with the Drazin oracle (the doubled
    A^d/D^d terms fail the defining axioms); callers that compare against the
    oracle report the discrepancy as a finding.  See the verification report.
    """
    _block_shapes(A, B, C, D)
    work = work if work is not None else make_work(A.rows + D.rows, series_cap)
    if not unchecked:
        _require(
            "T43", check_hypotheses("T43", A=A, B=B, C=C, D=D, lam=lam, tol=tol, series_cap=work.series_cap)
        )
    return _eval_t43(A, B, C, D, tol, work)


def cor44_block(
    A: Matrix,
    B: Matrix,
    C: Matrix,
    D: Matrix,
    lam=None,
    tol: Tolerance = DEFAULT_TOL,
    *,
    series_cap: int | None = None,
    unchecked: bool = False,
    work: FormulaWork | None = None,
) -> Matrix:
    _block_shapes(A, B, C, D)
    work = work if work is not None else make_work(A.rows + D.rows, series_cap)
    if not unchecked:
        _require(
            "C44", check_hypotheses("C44", A=A, B=B, C=C, D=D, lam=lam, tol=tol, series_cap=work.series_cap)
        )
    delegated = _swap_blocks(_eval_t43(D, C, B, A, tol, work), D.rows)
    direct = _eval_c44_direct(A, B, C, D, tol, work)
    _cross_check("C44", delegated, direct, tol, work)
    return delegated


# -- uniform application ------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class FormulaApplication:
    theorem: str
    value: Matrix
    target: Matrix
    report: HypothesisReport
    work: FormulaWork


_PIERCE = {"T31": thm31_pierce, "C32": cor32_pierce, "T33": thm33_pierce, "C34": cor34_pierce}
_BLOCK = {"T41": thm41_block, "C42": cor42_block, "T43": thm43_block, "C44": cor44_block}
_SUM = {"L23": lemma23_qnil_plus_gd, "T24": thm24_additive}


def assemble_target(theorem: str, mats: dict, p=None) -> Matrix:
    """The matrix whose Drazin inverse the rule claims to produce."""
    if theorem in _SUM:
        return mats["a"] + mats["b"]
    if theorem in _PIERCE:
        return mats["x"]
    return block2x2(mats["A"], mats["B"], mats["C"], mats["D"])


def apply_rule(
    theorem: str,
    mats: dict,
    p=None,
    lam=None,
    tol: Tolerance = DEFAULT_TOL,
    *,
    series_cap: int | None = None,
    unchecked: bool = False,
) -> FormulaApplication:
    """Check the rule's conditions, evaluate its formula, and bundle the record."""
    target = assemble_target(theorem, mats, p)
    work = make_work(target.rows, series_cap)
    if theorem in _SUM:
        report = check_hypotheses(theorem, tol=tol, lam=lam, series_cap=work.series_cap, **mats)
        if not unchecked:
            _require(theorem, report)
        value = _SUM[theorem](mats["a"], mats["b"], lam, tol, unchecked=True, work=work)
    elif theorem in _PIERCE:
        pi = _as_idem(p, tol)
        report = check_hypotheses(theorem, x=mats["x"], p=pi, lam=lam, tol=tol, series_cap=work.series_cap)
        if not unchecked:
            _require(theorem, report)
        value = _PIERCE[theorem](mats["x"], pi, lam, tol, unchecked=True, work=work)
    elif theorem in _BLOCK:
        report = check_hypotheses(theorem, lam=lam, tol=tol, series_cap=work.series_cap, **mats)
        if not unchecked:
            _require(theorem, report)
        value = _BLOCK[theorem](mats["A"], mats["B"], mats["C"], mats["D"], lam, tol, unchecked=True, work=work)
    else:
        raise ValueError(f"unknown rule tag {theorem!r}")
    return FormulaApplication(theorem=theorem, value=value, target=target, report=report, work=work)
