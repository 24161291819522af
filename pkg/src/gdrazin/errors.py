"""Exception types shared across the toolkit."""


class ShapeError(ValueError):
    """Operands have incompatible dimensions."""


class BackendMismatchError(TypeError):
    """Exact and approximate values were mixed in one operation."""


class NonIdempotentError(ValueError):
    """A matrix claimed as an idempotent fails p*p == p."""


class MalformedCornerError(ValueError):
    """A block does not live in the corner required by the operation."""


class SingularMatrixError(ArithmeticError):
    """Inverse requested for a singular matrix."""


class AmbiguousRankError(ArithmeticError):
    """Floating-point rank decision too close to call.

    Raised instead of silently picking a side when the gap between the
    smallest retained and largest discarded singular value is below
    10 * eps_rank relative to the largest singular value.
    """


class HypothesisError(ValueError):
    """A rule was applied to data that fails its side conditions."""

    def __init__(self, theorem: str, failed: tuple[str, ...]):
        self.theorem = theorem
        self.failed = failed
        names = "; ".join(failed)
        super().__init__(f"{theorem}: hypothesis not satisfied: {names}")


class SeriesCapError(RuntimeError):
    """A series did not terminate within the hard cap.

    All series used here have a nilpotent factor on square-matrix input,
    so hitting the cap signals a bug or non-matrix-like data.
    """


class GeneratorBudgetError(RuntimeError):
    """Rejection sampling exhausted its attempt budget."""
