"""Exact Gaussian-rational scalars: the field every other module computes over.

A scalar is ``re + im*i`` with both parts ``fractions.Fraction``.  Fraction
keeps numerator/denominator reduced with a positive denominator, so equal
values are structurally equal and hashing/equality need no extra
normalisation.  All operations are pure; scalars are immutable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, ParseError

_RATIONAL = r"[+-]?\d+(?:\s*/\s*\d+)?"
_FULL_RE = re.compile(
    rf"^\s*(?P<real>{_RATIONAL})\s*(?:(?P<sign>[+-])\s*(?P<imag>\d+(?:\s*/\s*\d+)?)\s*\*\s*i)?\s*$"
)
_PURE_IMAG_RE = re.compile(rf"^\s*(?P<imag>{_RATIONAL})\s*\*\s*i\s*$")


@dataclass(frozen=True)
class Scalar:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __add__(self, other: "Scalar | int | Fraction") -> "Scalar":
        other = scalar(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: "Scalar | int | Fraction") -> "Scalar":
        other = scalar(other)
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: "Scalar | int | Fraction") -> "Scalar":
        return scalar(other) - self

    def __mul__(self, other: "Scalar | int | Fraction") -> "Scalar":
        other = scalar(other)
        if not self.im and not other.im:
            return Scalar(self.re * other.re)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: "Scalar | int | Fraction") -> "Scalar":
        return self * scalar(other).inverse()

    def __rtruediv__(self, other: "Scalar | int | Fraction") -> "Scalar":
        return scalar(other) * self.inverse()

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im)

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("cannot invert zero")
        norm = self.re * self.re + self.im * self.im
        return Scalar(self.re / norm, -self.im / norm)

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if self.im > 0:
            return f"{self.re}+{self.im}*i"
        return f"{self.re}-{-self.im}*i"

    def __repr__(self) -> str:
        return f"Scalar({self})"

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse the textual grammar: "p", "p/q", "re+im*i", "re-im*i".

        A bare imaginary term like "2/3*i" is accepted for convenience but
        never produced by rendering.
        """
        m = _FULL_RE.match(text)
        if m:
            real = _parse_fraction(m.group("real"))
            if m.group("imag") is None:
                return cls(real)
            imag = _parse_fraction(m.group("imag"))
            if m.group("sign") == "-":
                imag = -imag
            return cls(real, imag)
        m = _PURE_IMAG_RE.match(text)
        if m:
            return cls(Fraction(0), _parse_fraction(m.group("imag")))
        raise ParseError(f"not a valid scalar: {text!r}")


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.replace(" ", ""))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a valid rational: {text!r}") from exc


def scalar(value: "Scalar | int | Fraction | str") -> Scalar:
    """Coerce an int, Fraction, or scalar string into a Scalar."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar(Fraction(value))
    if isinstance(value, str):
        return Scalar.parse(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to Scalar")


ZERO = Scalar()
ONE = Scalar(Fraction(1))
IMAG = Scalar(Fraction(0), Fraction(1))
