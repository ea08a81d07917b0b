"""Scalar realizations the kernels are written against.

Kernels only use ``+``, ``-``, unary ``-``, ``*``, ``/`` and ``==`` on their
scalars, plus the two helpers :func:`square` and :func:`pow2_scale`.  Three
realizations satisfy that contract:

* ``float`` (IEEE-754 binary64);
* :class:`fractions.Fraction`, the exact oracle substrate (plain ``int``
  values are treated as exact rationals too);
* :class:`CountingScalar`, a binary64 wrapper that tallies every operation.
"""
from __future__ import annotations

import math
import numbers
import re
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Union

from .errors import ParseError, ZeroDenominator

__all__ = [
    "OpCounts",
    "Tally",
    "CountingScalar",
    "Scalar",
    "square",
    "pow2_scale",
    "is_finite",
    "rational_parse",
    "format_scalar",
]


@dataclass(frozen=True)
class OpCounts:
    """Operation tallies.  ``add`` pools additions and subtractions."""

    mul: int = 0
    add: int = 0
    square: int = 0
    div: int = 0
    shift: int = 0
    neg: int = 0

    def __add__(self, other: OpCounts) -> OpCounts:
        if not isinstance(other, OpCounts):
            return NotImplemented
        return OpCounts(**{f.name: getattr(self, f.name) + getattr(other, f.name)
                           for f in fields(self)})

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def __str__(self) -> str:
        return " ".join(f"{k}={v}" for k, v in self.as_dict().items())


_COUNTERS = tuple(f.name for f in fields(OpCounts))


class Tally:
    """Mutable accumulator of :class:`OpCounts`.

    Not synchronized: use one tally per thread and merge the snapshots.
    """

    def __init__(self, name: str = "") -> None:
        self.name = name
        self._counts = dict.fromkeys(_COUNTERS, 0)

    def bump(self, counter: str) -> None:
        self._counts[counter] += 1

    def read(self) -> OpCounts:
        return OpCounts(**self._counts)

    def reset(self) -> None:
        for key in self._counts:
            self._counts[key] = 0

    def merge(self, other: Union[Tally, OpCounts]) -> None:
        """Add another tally's (or a snapshot's) counts into this one."""
        counts = other.read() if isinstance(other, Tally) else other
        for key, value in counts.as_dict().items():
            self._counts[key] += value

    def __repr__(self) -> str:
        return f"Tally({self.name!r}, {self.read()})"


class CountingScalar:
    """A binary64 value whose arithmetic increments a shared :class:`Tally`.

    Each operation bumps exactly one counter and computes its value with the
    same float operation a bare ``float`` would use, so results are
    bit-identical to uncounted runs.  ``a * a`` counts as a multiplication;
    call :func:`square` to record a squaring.
    """

    __slots__ = ("value", "tally")

    def __init__(self, value: float, tally: Tally) -> None:
        self.value = float(value)
        self.tally = tally

    def _unwrap(self, other):
        if isinstance(other, CountingScalar):
            if other.tally is not self.tally:
                raise ValueError("operands are bound to different tallies")
            return other.value
        if isinstance(other, numbers.Real):
            return float(other)
        return NotImplemented

    def _binary(self, other, counter, op):
        v = self._unwrap(other)
        if v is NotImplemented:
            return NotImplemented
        self.tally.bump(counter)
        return CountingScalar(op(self.value, v), self.tally)

    def __add__(self, other):
        return self._binary(other, "add", lambda a, b: a + b)

    def __radd__(self, other):
        return self._binary(other, "add", lambda a, b: b + a)

    def __sub__(self, other):
        return self._binary(other, "add", lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binary(other, "add", lambda a, b: b - a)

    def __mul__(self, other):
        return self._binary(other, "mul", lambda a, b: a * b)

    def __rmul__(self, other):
        return self._binary(other, "mul", lambda a, b: b * a)

    def __truediv__(self, other):
        return self._binary(other, "div", lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binary(other, "div", lambda a, b: b / a)

    def __neg__(self):
        self.tally.bump("neg")
        return CountingScalar(-self.value, self.tally)

    def square(self) -> CountingScalar:
        self.tally.bump("square")
        return CountingScalar(self.value * self.value, self.tally)

    def pow2_scale(self, k: int) -> CountingScalar:
        self.tally.bump("shift")
        return CountingScalar(_ldexp(self.value, k), self.tally)

    # Comparisons and conversions are free.
    def __eq__(self, other):
        if isinstance(other, CountingScalar):
            return self.value == other.value
        if isinstance(other, numbers.Real):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __float__(self) -> float:
        return self.value

    def __repr__(self) -> str:
        return f"CountingScalar({self.value!r})"


Scalar = Union[float, int, Fraction, CountingScalar]


def _ldexp(x: float, k: int) -> float:
    try:
        return math.ldexp(x, k)
    except OverflowError:
        return math.copysign(math.inf, x)


def square(x):
    """Return ``x * x``, recorded as a squaring on counting scalars."""
    if x.__class__ is float:
        return x * x
    sq = getattr(x, "square", None)
    if sq is not None:
        return sq()
    return x * x


def pow2_scale(x, k: int):
    """Return ``x * 2**k``.

    Exact on ints and fractions (a negative ``k`` turns an int into a
    Fraction); on binary64 this is an exponent adjustment
    (``math.ldexp``), exact barring overflow or underflow.
    """
    if x.__class__ is float:
        return _ldexp(x, k)
    if x.__class__ is int:
        return x << k if k >= 0 else Fraction(x, 1 << -k)
    if isinstance(x, Fraction):
        if k >= 0:
            return Fraction(x.numerator << k, x.denominator)
        return Fraction(x.numerator, x.denominator << -k)
    scale = getattr(x, "pow2_scale", None)
    if scale is not None:
        return scale(k)
    return _ldexp(x, k)


def is_finite(x) -> bool:
    if x.__class__ is float:
        return math.isfinite(x)
    if isinstance(x, numbers.Rational):
        return True
    return math.isfinite(float(x))


_INT_RE = re.compile(r"[+-]?\d+")
_FRAC_RE = re.compile(r"([+-]?\d+)/([+-]?\d+)")
_DEC_RE = re.compile(r"[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?")


def rational_parse(text: str) -> Fraction:
    """Parse an integer, ``a/b`` fraction or finite decimal (``1.5e-3``) exactly.

    >>> rational_parse("-0.5")
    Fraction(-1, 2)
    """
    s = text.strip()
    m = _FRAC_RE.fullmatch(s)
    if m:
        num, den = int(m.group(1)), int(m.group(2))
        if den == 0:
            raise ZeroDenominator(f"zero denominator in {text!r}")
        return Fraction(num, den)
    if _INT_RE.fullmatch(s) or _DEC_RE.fullmatch(s):
        return Fraction(s)
    raise ParseError(f"not a rational literal: {text!r}")


def format_scalar(x) -> str:
    """Render a scalar compactly: ``2.5``, ``0``, ``-1/3``."""
    if isinstance(x, CountingScalar):
        x = x.value
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, int):
        return str(x)
    x = float(x)
    if x == 0.0:
        return "0"
    if x.is_integer() and abs(x) < 1e16:
        return str(int(x))
    return repr(x)
