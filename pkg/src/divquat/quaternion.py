"""Quaternion value type and schoolbook arithmetic."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator

from .errors import DivisorZero, NonFiniteInput
from .scalars import is_finite, square

__all__ = [
    "Quaternion",
    "multiply",
    "conjugate",
    "norm_sq",
    "inverse",
    "divide_schoolbook",
    "check_finite",
]


@dataclass(frozen=True, slots=True)
class Quaternion:
    """``w + x*i + y*j + z*k``.

    Components may be any scalar realization (float, Fraction or
    CountingScalar); mixing realizations within one value is not supported.
    """

    w: Any
    x: Any
    y: Any
    z: Any

    def __iter__(self) -> Iterator[Any]:
        yield self.w
        yield self.x
        yield self.y
        yield self.z

    def __mul__(self, other: Quaternion) -> Quaternion:
        if not isinstance(other, Quaternion):
            return NotImplemented
        return multiply(self, other)

    def map(self, fn) -> Quaternion:
        return Quaternion(fn(self.w), fn(self.x), fn(self.y), fn(self.z))

    @classmethod
    def of(cls, values, convert=None) -> Quaternion:
        """Build from a 4-sequence, optionally converting each component."""
        w, x, y, z = values
        if convert is not None:
            return cls(convert(w), convert(x), convert(y), convert(z))
        return cls(w, x, y, z)

    def to_fraction(self) -> Quaternion:
        return self.map(Fraction)


def check_finite(q: Quaternion) -> None:
    if not (is_finite(q.w) and is_finite(q.x) and is_finite(q.y) and is_finite(q.z)):
        raise NonFiniteInput(f"non-finite component in {q}")


def multiply(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product ``a * b`` (16 multiplications, 12 additions)."""
    a0, a1, a2, a3 = a.w, a.x, a.y, a.z
    b0, b1, b2, b3 = b.w, b.x, b.y, b.z
    return Quaternion(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def conjugate(q: Quaternion) -> Quaternion:
    return Quaternion(q.w, -q.x, -q.y, -q.z)


def norm_sq(r: Quaternion):
    """``r0² + r1² + r2² + r3²`` using four squarings and three additions."""
    return square(r.w) + square(r.x) + square(r.y) + square(r.z)


def _nonzero_norm(r: Quaternion):
    check_finite(r)
    R = norm_sq(r)
    if R == 0:
        raise DivisorZero(f"divisor {r} has zero norm")
    return R


def inverse(r: Quaternion) -> Quaternion:
    R = _nonzero_norm(r)
    c = conjugate(r)
    return Quaternion(c.w / R, c.x / R, c.y / R, c.z / R)


def divide_schoolbook(q: Quaternion, r: Quaternion) -> Quaternion:
    """Left quotient ``r⁻¹ q`` evaluated directly from the component formulas.

    Costs 16 multiplications, 15 additions, 4 squarings and 4 divisions.
    """
    check_finite(q)
    R = _nonzero_norm(r)
    q0, q1, q2, q3 = q.w, q.x, q.y, q.z
    r0, r1, r2, r3 = r.w, r.x, r.y, r.z
    return Quaternion(
        (r0 * q0 + r1 * q1 + r2 * q2 + r3 * q3) / R,
        (r0 * q1 - r1 * q0 - r2 * q3 + r3 * q2) / R,
        (r0 * q2 + r1 * q3 - r2 * q0 - r3 * q1) / R,
        (r0 * q3 - r1 * q2 + r2 * q1 - r3 * q0) / R,
    )
