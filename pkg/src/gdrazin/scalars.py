"""Complex scalars for the two matrix backends.

The exact backend works with Gaussian rationals: complex numbers whose real
and imaginary parts are arbitrary-precision ``fractions.Fraction`` values.
Sums, differences, products and quotients of Gaussian rationals are again
Gaussian rationals, so every computation on this backend is free of rounding
and equality is decidable.  The approximate backend uses the built-in
``complex`` type.

Floats never coerce silently into the exact side: constructing or combining
a :class:`GaussianRational` with a float raises ``TypeError``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

ExactLike = Union["GaussianRational", int, Fraction]


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"exact scalar parts must be int/Fraction/str, not {type(value).__name__}")


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """A complex number with rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    @classmethod
    def of(cls, value) -> "GaussianRational":
        """Coerce an exact value (int, Fraction, GaussianRational)."""
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value, 0)
        raise TypeError(f"cannot treat {type(value).__name__} as an exact scalar")

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.abs2()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    # -- queries ------------------------------------------------------------

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, exact."""
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return float(self.abs2()) ** 0.5

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    __complex__ = to_complex

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)


def gr(re=0, im=0) -> GaussianRational:
    """Shorthand constructor."""
    return GaussianRational(re, im)


def format_scalar(z: GaussianRational) -> str:
    """Canonical text form ``p/q`` or ``p/q+r/si`` (sign folded, im 0 omitted)."""
    re_s = f"{z.re.numerator}/{z.re.denominator}"
    if z.im == 0:
        return re_s
    sign = "+" if z.im > 0 else "-"
    mag = abs(z.im)
    return f"{re_s}{sign}{mag.numerator}/{mag.denominator}i"


def parse_scalar(text: str) -> GaussianRational:
    """Parse an exact scalar.

    Accepts the canonical ``p/q+r/si`` form and the usual shorthands:
    ``"3"``, ``"-1/2"``, ``"2i"``, ``"-i"``, ``"1+i"``, ``"1/2-3/4i"``.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    if not s.endswith("i"):
        try:
            return GaussianRational(Fraction(s), 0)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad scalar {text!r}") from exc
    body = s[:-1]
    # split off a leading real part: the last '+'/'-' not at position 0
    split = -1
    for k in range(len(body) - 1, 0, -1):
        if body[k] in "+-" and body[k - 1] not in "+-/":
            split = k
            break
    if split > 0:
        re_part, im_part = body[:split], body[split:]
    else:
        re_part, im_part = "0", body
    if im_part in ("", "+"):
        im_frac = Fraction(1)
    elif im_part == "-":
        im_frac = Fraction(-1)
    else:
        try:
            im_frac = Fraction(im_part)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad scalar {text!r}") from exc
    try:
        re_frac = Fraction(re_part)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad scalar {text!r}") from exc
    return GaussianRational(re_frac, im_frac)
