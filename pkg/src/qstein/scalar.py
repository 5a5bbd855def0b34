"""Exact arithmetic over the Gaussian rationals Q(i).

Every structure constant in the package lives here, so algebraic identities
can be compared with ``==`` rather than a tolerance.  Magnitudes that are
inherently irrational go through :meth:`GaussianRational.modulus`, which
returns a float unless the modulus happens to be rational.
"""

from __future__ import annotations

import enum
import math
import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "GaussianRational",
    "ModulusClass",
    "QParam",
    "ZeroParameter",
    "ONE",
    "ZERO",
    "I",
    "add",
    "mul",
    "classify_modulus",
    "as_scalar",
    "as_q",
    "format_scalar",
    "parse_scalar",
    "rational_sqrt",
]


class ZeroParameter(ValueError):
    """Raised when the deformation parameter is zero."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot make an exact rational from {x!r}")


class GaussianRational:
    """An element ``re + im*i`` of Q(i) held as two reduced fractions."""

    __slots__ = ("re", "im", "_hash")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)
        self._hash = None

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        obj._hash = None
        return obj

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational._make(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational._make(self.re + other, self.im)
        if isinstance(other, complex):
            return complex(self) + other
        if isinstance(other, float):
            return complex(self) + other
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational._make(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational._make(self.re - other, self.im)
        if isinstance(other, (complex, float)):
            return complex(self) - other
        return NotImplemented

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b and not d:
                return GaussianRational._make(a * c, b)
            return GaussianRational._make(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return GaussianRational._make(self.re * other, self.im * other)
        if isinstance(other, (complex, float)):
            return complex(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.abs_sq()
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational._make(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, GaussianRational):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            return GaussianRational._make(self.re / other, self.im / other)
        if isinstance(other, (complex, float)):
            return complex(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._make(self.re, -self.im)

    def abs_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def modulus(self):
        """``|x|`` as a Fraction when it is rational, otherwise as a float."""
        r = rational_sqrt(self.abs_sq())
        if r is not None:
            return r
        return math.sqrt(self.abs_sq())

    def rational_modulus(self) -> Fraction | None:
        return rational_sqrt(self.abs_sq())

    # comparison / hashing -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        if isinstance(other, complex):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.re, self.im)) if self.im else hash(self.re)
        return self._hash

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def is_real(self) -> bool:
        return not self.im

    # text -----------------------------------------------------------------

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"


ZERO = GaussianRational._make(Fraction(0), Fraction(0))
ONE = GaussianRational._make(Fraction(1), Fraction(0))
I = GaussianRational._make(Fraction(0), Fraction(1))


def as_scalar(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, complex):
        raise TypeError("complex floats have no exact Gaussian-rational value")
    return GaussianRational(x)


def add(a, b) -> GaussianRational:
    return as_scalar(a) + as_scalar(b)


def mul(a, b) -> GaussianRational:
    return as_scalar(a) * as_scalar(b)


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


# modulus classification ----------------------------------------------------


class ModulusClass(enum.Enum):
    LessThanOne = "<1"
    EqualOne = "=1"
    GreaterThanOne = ">1"


def classify_modulus(q) -> ModulusClass:
    q = as_scalar(q)
    if not q:
        raise ZeroParameter("q must be a nonzero scalar")
    s = q.abs_sq()
    if s < 1:
        return ModulusClass.LessThanOne
    if s > 1:
        return ModulusClass.GreaterThanOne
    return ModulusClass.EqualOne


class QParam:
    """The deformation parameter with cached integer powers."""

    __slots__ = ("value", "modulus_class", "_powers")

    def __init__(self, value):
        value = as_scalar(value)
        self.modulus_class = classify_modulus(value)
        self.value = value
        self._powers = {0: ONE, 1: value}

    def pow(self, n: int) -> GaussianRational:
        p = self._powers.get(n)
        if p is None:
            p = self.value ** n
            self._powers[n] = p
        return p

    def abs_sq(self) -> Fraction:
        return self.value.abs_sq()

    def modulus(self):
        return self.value.modulus()

    def __eq__(self, other):
        if isinstance(other, QParam):
            return self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"QParam({format_scalar(self.value)!r})"

    def __str__(self):
        return format_scalar(self.value)


def as_q(q) -> QParam:
    return q if isinstance(q, QParam) else QParam(q)


# text form -----------------------------------------------------------------


def _fmt_frac(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_scalar(x) -> str:
    """Canonical text: ``a/b``, ``c/d*i`` or ``a/b+c/d*i``."""
    x = as_scalar(x)
    if not x.im:
        return _fmt_frac(x.re)
    im = _fmt_frac(abs(x.im)) + "*i"
    if not x.re:
        return ("-" if x.im < 0 else "") + im
    return _fmt_frac(x.re) + ("-" if x.im < 0 else "+") + im


_RAT = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^\s*(?:(?P<re>{_RAT})(?P<im>[+-]\d+(?:/\d+)?\*i|[+-]i)?|(?P<imonly>{_RAT}\*i|[+-]?i))\s*$"
)


def _parse_im(text: str) -> Fraction:
    text = text.replace("*i", "")
    if text in ("i", "+i"):
        return Fraction(1)
    if text == "-i":
        return Fraction(-1)
    return Fraction(text)


def parse_scalar(text: str) -> GaussianRational:
    """Parse the canonical scalar text form; inverse of :func:`format_scalar`."""
    m = _SCALAR_RE.match(text)
    if not m:
        raise ValueError(f"not a scalar literal: {text!r}")
    if m.group("imonly"):
        return GaussianRational(0, _parse_im(m.group("imonly")))
    re_part = Fraction(m.group("re"))
    im_part = _parse_im(m.group("im")) if m.group("im") else Fraction(0)
    return GaussianRational(re_part, im_part)
