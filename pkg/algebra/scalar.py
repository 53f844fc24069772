"""
Exact Gaussian rationals a + bi with a, b in Q.

Canonical text form:
  3, -1/2            real values
  (2+1i), (0-1/3i)   everything else
"""

import re
from fractions import Fraction
from typing import Dict, Union

from algebra.errors import ParameterError

Number = Union[int, Fraction, "Scalar"]

_COMPLEX_RE = re.compile(r"^\(\s*(-?\d+(?:/\d+)?)\s*([+-])\s*(\d+(?:/\d+)?)\s*i\s*\)$")
_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")


class Scalar:
    """Immutable exact complex number with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re_part: Union[int, Fraction] = 0, im_part: Union[int, Fraction] = 0):
        object.__setattr__(self, "re", Fraction(re_part))
        object.__setattr__(self, "im", Fraction(im_part))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @staticmethod
    def coerce(value: Number) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar(value)
        raise TypeError(f"Cannot use {type(value).__name__} as a scalar")

    @staticmethod
    def _maybe(value):
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar(value)
        return None

    # ---------- Arithmetic ----------

    def __add__(self, other: Number) -> "Scalar":
        o = Scalar._maybe(other)
        if o is None:
            return NotImplemented
        return Scalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Number) -> "Scalar":
        o = Scalar._maybe(other)
        if o is None:
            return NotImplemented
        return Scalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Number) -> "Scalar":
        return Scalar.coerce(other) - self

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im)

    def __mul__(self, other: Number) -> "Scalar":
        o = Scalar._maybe(other)
        if o is None:
            return NotImplemented
        return Scalar(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "Scalar":
        o = Scalar._maybe(other)
        if o is None:
            return NotImplemented
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("division by zero scalar")
        num = self * o.conj()
        return Scalar(num.re / norm, num.im / norm)

    def __rtruediv__(self, other: Number) -> "Scalar":
        return Scalar.coerce(other) / self

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            return Scalar(1) / (self ** -exponent)
        result = Scalar(1)
        for _ in range(exponent):
            result = result * self
        return result

    def conj(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    # ---------- Predicates ----------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_one(self) -> bool:
        return self.re == 1 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    # ---------- Encoding ----------

    def to_text(self) -> str:
        if self.im == 0:
            return _fraction_text(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"({_fraction_text(self.re)}{sign}{_fraction_text(abs(self.im))}i)"

    @staticmethod
    def from_text(text: str) -> "Scalar":
        text = text.strip()
        m = _COMPLEX_RE.match(text)
        if m:
            im = _fraction(m.group(3))
            return Scalar(_fraction(m.group(1)), im if m.group(2) == "+" else -im)
        if _RATIONAL_RE.match(text):
            return Scalar(_fraction(text))
        raise ParameterError(f"Not a scalar literal: {text!r}")

    def to_json(self) -> Dict[str, str]:
        return {"re": _fraction_text(self.re), "im": _fraction_text(self.im)}

    @staticmethod
    def from_json(data: Dict[str, str]) -> "Scalar":
        return Scalar(_fraction(data.get("re", "0")), _fraction(data.get("im", "0")))

    def __repr__(self) -> str:
        return f"Scalar({self.to_text()})"

    __str__ = to_text


ZERO = Scalar(0)
ONE = Scalar(1)
I_UNIT = Scalar(0, 1)


def _fraction_text(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParameterError(f"Zero denominator in scalar {text!r}") from None
    except (TypeError, ValueError):
        raise ParameterError(f"Not a rational number: {text!r}") from None
