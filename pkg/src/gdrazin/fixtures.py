"""Built-in worked examples used by the fixture suite and `reproduce`.

Two 6x6 fixtures over the exact backend:

* ``t31_fixture`` — a Pierce-split matrix whose four 3x3 corner blocks are
  nilpotent shifts; the lower Pierce rule applies with lambda 2 and the
  Drazin inverse is the zero matrix.  Forcing lambda 1 breaks the middle
  condition, which the checker must report.

* ``t43_fixture`` — a 2x2 block matrix with nilpotent B, C, D and a
  non-nilpotent A; the closed block rule applies with lambda 2i.  Its closed
  form doubles the diagonal Drazin terms, so the expected formula output
  differs from the true Drazin inverse (which the oracle computes); both
  expected values are embedded here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrices import EXACT, Matrix, zeros
from .pierce import Idempotent, coordinate_idempotent
from .scalars import GaussianRational, gr


def _m(rows) -> Matrix:
    return Matrix.from_rows(rows, EXACT)


_I = gr(0, 1)


@dataclass(frozen=True, slots=True)
class Fixture:
    name: str
    theorem: str
    mats: dict
    p: Idempotent | None
    lam: GaussianRational
    expected_formula: Matrix
    expected_oracle: Matrix
    negative_lambda: GaussianRational  # forcing this value must fail the check


def t31_fixture() -> Fixture:
    shift = _m([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    bb = _m([[0, 2, 0], [0, 0, 1], [0, 0, 0]])
    cc = _m([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    x = _block6(shift, bb, cc, shift)
    return Fixture(
        name="pierce-6x6",
        theorem="T31",
        mats={"x": x},
        p=coordinate_idempotent(6, range(3), EXACT),
        lam=gr(2),
        expected_formula=zeros(6, 6, EXACT),
        expected_oracle=zeros(6, 6, EXACT),
        negative_lambda=gr(1),
    )


def t43_fixture() -> Fixture:
    A = _m([[0, 1, 0], [0, 0, -1], [0, 0, 1]])
    B = _m([[0, 2, 0], [0, 0, 1], [0, 0, 0]])
    C = _m([[0, 1, 1], [0, 0, 0], [0, 0, 0]])
    D = _m([[0, _I, 0], [0, 0, _I], [0, 0, 0]])
    expected_formula = _m(
        [
            [0, 0, -2, 0, 0, 0],
            [0, 0, -2, 0, 0, 0],
            [0, 0, 2, 0, 0, 0],
            [0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0],
        ]
    )
    # the true Drazin inverse of the assembled matrix (single A^d, not doubled)
    expected_oracle = _m(
        [
            [0, 0, -1, 0, 0, 0],
            [0, 0, -1, 0, 0, 0],
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0],
        ]
    )
    return Fixture(
        name="block-6x6",
        theorem="T43",
        mats={"A": A, "B": B, "C": C, "D": D},
        p=None,
        lam=gr(0, 2),
        expected_formula=expected_formula,
        expected_oracle=expected_oracle,
        negative_lambda=gr(1),
    )


def t43_core_values() -> dict[str, Matrix]:
    """Hand-checked Drazin data of the non-nilpotent diagonal block."""
    return {
        "A_dinv": _m([[0, 0, -1], [0, 0, -1], [0, 0, 1]]),
        "A_pi": _m([[1, 0, 1], [0, 1, 1], [0, 0, 0]]),
    }


def all_fixtures() -> tuple[Fixture, Fixture]:
    return (t31_fixture(), t43_fixture())


def _block6(tl: Matrix, tr: Matrix, bl: Matrix, br: Matrix) -> Matrix:
    from .matrices import block2x2

    return block2x2(tl, tr, bl, br)
