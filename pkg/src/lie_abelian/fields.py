"""Exact scalars over Q and Q(i).

A `Scalar` is an immutable number re + im*i with rational re, im held as
`fractions.Fraction` (always reduced, positive denominator).  The field
tag is ``"Q"`` for plain rationals and ``"QI"`` once an imaginary part is
admitted; mixed-tag arithmetic coerces to ``"QI"``.  Equality and hashing
compare values, so a Q-tagged 3/2 equals a QI-tagged 3/2 + 0i.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction

from .errors import InvalidScalar

Q = "Q"
QI = "QI"

_FIELDS = (Q, QI)


class Scalar:
    __slots__ = ("re", "im", "field")

    def __init__(self, re=0, im=0, field=None):
        re = Fraction(re)
        im = Fraction(im)
        if field is None:
            field = QI if im else Q
        if field not in _FIELDS:
            raise InvalidScalar(f"unknown field tag {field!r}")
        if field == Q and im:
            raise InvalidScalar("nonzero imaginary part in a Q-tagged scalar")
        self.re = re
        self.im = im
        self.field = field

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, field=Q):
        return cls(0, 0, field)

    @classmethod
    def one(cls, field=Q):
        return cls(1, 0, field)

    @classmethod
    def i(cls):
        return cls(0, 1, QI)

    @classmethod
    def coerce(cls, value, field=Q):
        """Wrap an int/Fraction/Scalar as a Scalar in the given field."""
        if isinstance(value, Scalar):
            if field == QI and value.field == Q:
                return cls(value.re, value.im, QI)
            return value
        return cls(Fraction(value), 0, field)

    # -- predicates ----------------------------------------------------

    def is_zero(self):
        return not self.re and not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    # -- arithmetic ----------------------------------------------------

    def _join(self, other):
        if not isinstance(other, Scalar):
            other = Scalar(Fraction(other))
        field = QI if (self.field == QI or other.field == QI) else Q
        return other, field

    def __add__(self, other):
        other, field = self._join(other)
        return Scalar(self.re + other.re, self.im + other.im, field)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.im, self.field)

    def __sub__(self, other):
        other, field = self._join(other)
        return Scalar(self.re - other.re, self.im - other.im, field)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other, field = self._join(other)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
            field,
        )

    __rmul__ = __mul__

    def inverse(self):
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise InvalidScalar("division by zero")
        return Scalar(self.re / norm, -self.im / norm, self.field)

    def __truediv__(self, other):
        other, _ = self._join(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def conjugate(self):
        return Scalar(self.re, -self.im, self.field)

    # -- comparison ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- formatting ----------------------------------------------------

    def token(self):
        """Canonical file token: ``p/q`` or ``p/q+r/si`` (reduced, q,s > 0)."""
        re_part = f"{self.re.numerator}/{self.re.denominator}"
        if not self.im:
            return re_part
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        return f"{re_part}{sign}{mag.numerator}/{mag.denominator}i"

    def __repr__(self):
        return f"Scalar({self.token()!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        return self.token()


_SPLIT_IM = _re.compile(r"^(.*?)([+-][^+-]*)i$")


def parse_scalar(token, field=None):
    """Parse a scalar token.

    Canonical tokens are ``p/q`` and ``p/q+r/si``, but integer
    numerators without denominators and bare imaginary forms such as
    ``i``, ``-i``, ``2i`` or ``1/2i`` are accepted as well.
    """
    text = token.strip().replace(" ", "")
    if not text:
        raise InvalidScalar("empty scalar token")
    try:
        if text.endswith("i"):
            m = _SPLIT_IM.match(text)
            if m and m.group(1):
                re_txt, im_txt = m.group(1), m.group(2)
            else:
                re_txt, im_txt = "0", text[:-1]
            if im_txt in ("", "+"):
                im_txt = "1"
            elif im_txt == "-":
                im_txt = "-1"
            value = Scalar(Fraction(re_txt), Fraction(im_txt), QI)
        else:
            value = Scalar(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidScalar(f"bad scalar token {token!r}") from exc
    if field is not None:
        if field == Q and value.im:
            raise InvalidScalar(f"imaginary token {token!r} in a Q-field context")
        return Scalar.coerce(value, field)
    return value


def field_ops(a, b=None, kind="add"):
    """Apply a named field operation: add, mul, inv or neg.

    ``inv`` and ``neg`` are unary; ``b`` is ignored for them.
    """
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "inv":
        return a.inverse()
    if kind == "neg":
        return -a
    raise InvalidScalar(f"unknown field operation {kind!r}")
