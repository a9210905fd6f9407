"""Exact scalars: rationals (``fractions.Fraction``) and elements of real
quadratic fields Q(sqrt d).

Rationals are plain :class:`~fractions.Fraction` values.  An element
``a + b*sqrt(d)`` is a :class:`QuadraticScalar`; it compares and hashes
equal to ``a`` when ``b == 0``, so both variants can be mixed freely as
long as every irrational value shares the same ``d``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Union

Scalar = Union[Fraction, "QuadraticScalar"]


@lru_cache(maxsize=None)
def is_squarefree(d: int) -> bool:
    if d < 2:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


@total_ordering
class QuadraticScalar:
    """``a + b*sqrt(d)`` with rational ``a, b`` and square-free ``d > 1``."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int) -> None:
        if not is_squarefree(d):
            raise ValueError(f"sqrt({d}): radicand must be square-free and > 1")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    def _coerce(self, other):
        if isinstance(other, QuadraticScalar):
            if other.d != self.d:
                raise ValueError(
                    f"cannot mix Q(sqrt {self.d}) and Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticScalar(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticScalar(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticScalar(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticScalar(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticScalar(self.a * o.a + self.d * self.b * o.b,
                               self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def conjugate(self) -> QuadraticScalar:
        return QuadraticScalar(self.a, -self.b, self.d)

    def inverse(self) -> QuadraticScalar:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        return QuadraticScalar(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with d*b^2
        diff = self.a * self.a - self.d * self.b * self.b
        return sa if diff > 0 else sb

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadraticScalar):
            if other.d != self.d:
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __repr__(self) -> str:
        return f"QuadraticScalar({self.a}, {self.b}, {self.d})"

    def __str__(self) -> str:
        return format_scalar(self)


def sign(x: Scalar) -> int:
    if isinstance(x, QuadraticScalar):
        return x.sign()
    return (x > 0) - (x < 0)


def conjugate(x: Scalar) -> Scalar:
    """Galois conjugate sqrt(d) -> -sqrt(d); identity on rationals."""
    if isinstance(x, QuadraticScalar):
        return x.conjugate()
    return x


def radicand(x: Scalar) -> int | None:
    """``d`` for irrational quadratic values, ``None`` for rationals."""
    if isinstance(x, QuadraticScalar) and x.b != 0:
        return x.d
    return None


def rational_parts(x: Scalar) -> tuple[Fraction, Fraction]:
    """Split ``a + b*sqrt(d)`` into ``(a, b)``."""
    if isinstance(x, QuadraticScalar):
        return x.a, x.b
    return Fraction(x), Fraction(0)


def normalize(x: Scalar) -> Scalar:
    """Collapse a quadratic value with zero irrational part to a Fraction."""
    if isinstance(x, QuadraticScalar) and x.b == 0:
        return x.a
    return Fraction(x) if isinstance(x, int) else x


def lift(x, d: int | None) -> Scalar:
    """Embed ``x`` in Q(sqrt d) (or Q when ``d`` is None)."""
    if d is None:
        if isinstance(x, QuadraticScalar):
            if x.b != 0:
                raise ValueError(f"{x} is not rational")
            return x.a
        return Fraction(x)
    if isinstance(x, QuadraticScalar):
        if x.d != d and x.b != 0:
            raise ValueError(f"cannot embed {x} in Q(sqrt {d})")
        return QuadraticScalar(x.a, x.b, d)
    return QuadraticScalar(x, 0, d)


_RAT = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^\s*(?:(?P<a>{_RAT})(?=\s*(?:[+-]|$)))?\s*"
    rf"(?:(?P<bsign>[+-])?\s*(?:(?P<b>\d+(?:/\d+)?)\s*\*\s*)?sqrt\(\s*(?P<d>\d+)\s*\))?\s*$"
)


def parse_scalar(text: str, d: int | None = None) -> Scalar:
    """Parse ``"p/q"`` or ``"p/q+r/s*sqrt(d)"`` (also ``"sqrt(2)"``, ``"1-sqrt(2)"``).

    If ``d`` is given the result lives in Q(sqrt d); a radicand in the text
    that disagrees with ``d`` is an error.
    """
    if isinstance(text, int) and not isinstance(text, bool):
        return lift(text, d)
    if not isinstance(text, str):
        raise ValueError(f"scalar must be a string or integer, got {text!r}")
    m = _SCALAR_RE.match(text)
    if m is None or (m.group("a") is None and m.group("d") is None):
        raise ValueError(f"malformed scalar {text!r}")
    try:
        a = Fraction(m.group("a")) if m.group("a") else Fraction(0)
        b = Fraction(m.group("b")) if m.group("b") else Fraction(1)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None
    if m.group("d") is None:
        return lift(a, d)
    rd = int(m.group("d"))
    if d is not None and rd != d:
        raise ValueError(f"scalar {text!r} uses sqrt({rd}) in a Q(sqrt {d}) file")
    if not is_squarefree(rd):
        raise ValueError(f"scalar {text!r}: radicand must be square-free and > 1")
    if m.group("bsign") == "-":
        b = -b
    return QuadraticScalar(a, b, rd)


def format_scalar(x: Scalar) -> str:
    a, b = rational_parts(x)
    if b == 0:
        return str(a)
    d = x.d
    bs = "" if abs(b) == 1 else f"{abs(b)}*"
    root = f"{bs}sqrt({d})"
    if a == 0:
        return root if b > 0 else f"-{root}"
    return f"{a}{'+' if b > 0 else '-'}{root}"
