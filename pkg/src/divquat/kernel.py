"""Rationalized quaternion division: 8 general multiplications per quotient.

The dividend is folded into eight diagonal weights once (``prepare_dividend``:
8 additions, 8 power-of-two shifts).  Each division then runs the divisor
through two butterfly stages, the eight weight multiplications, two more
butterfly stages and a top-minus-bottom fold (20 additions), and finishes
with four divisions by the divisor's squared norm (4 squarings, 3 additions).

Sign changes are folded into the choice of ``+``/``-`` so no negation is ever
executed.  Butterflies always evaluate ``lo + hi`` before ``lo - hi``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import DivisorZero
from .quaternion import Quaternion, check_finite, norm_sq
from .scalars import pow2_scale

__all__ = ["PreparedDividend", "prepare_dividend", "divide_prepared", "divide_fast"]


@dataclass(frozen=True, slots=True)
class PreparedDividend:
    """Diagonal weights s0..s7 derived from a dividend; reusable across divisors."""

    s: tuple[Any, ...]

    def __post_init__(self):
        if len(self.s) != 8:
            raise ValueError(f"expected 8 weights, got {len(self.s)}")


def prepare_dividend(q: Quaternion) -> PreparedDividend:
    check_finite(q)
    q0, q1, q2, q3 = q.w, q.x, q.y, q.z
    a0 = q0 + q2
    a2 = q0 - q2
    a1 = q1 + q3
    a3 = q1 - q3
    return PreparedDividend((
        pow2_scale(a0 + a1, -2),
        pow2_scale(a0 - a1, -2),
        pow2_scale(a2 + a3, -2),
        pow2_scale(a2 - a3, -2),
        pow2_scale(q0, 1),
        pow2_scale(q2, 1),
        pow2_scale(q3, 1),
        pow2_scale(q1, 1),
    ))


def divide_prepared(p: PreparedDividend, r: Quaternion) -> Quaternion:
    """Left quotient ``r⁻¹ q`` for the dividend ``q`` behind ``p``."""
    check_finite(r)
    R = norm_sq(r)
    if R == 0:
        raise DivisorZero(f"divisor {r} has zero norm")
    s0, s1, s2, s3, s4, s5, s6, s7 = p.s
    r0, r1, r2, r3 = r.w, r.x, r.y, r.z

    # Signed divisor (r0, -r1, -r2, -r3) through H2 ⊗ I2; t1 holds -(a1 + a3).
    t2 = r0 + r2
    t0 = r0 - r2
    t1 = r1 + r3
    t3 = r3 - r1
    # I2 ⊗ H2
    u0 = t0 - t1
    u1 = t0 + t1
    u2 = t2 + t3
    u3 = t2 - t3

    m0 = s0 * u0
    m1 = s1 * u1
    m2 = s2 * u2
    m3 = s3 * u3
    # Lower half carries (r0, -r3, -r1, -r2); signs are absorbed into the fold.
    m4 = s4 * r0
    m5 = s5 * r3
    m6 = s6 * r1
    m7 = s7 * r2

    # I2 ⊗ H2
    v0 = m0 + m1
    v1 = m0 - m1
    v2 = m2 + m3
    v3 = m2 - m3
    # H2 ⊗ I2
    w0 = v0 + v2
    w2 = v0 - v2
    w1 = v1 + v3
    w3 = v1 - v3

    # Top minus bottom, with component 0 negated.
    return Quaternion((m4 - w0) / R, (w1 + m5) / R, (w2 + m6) / R, (w3 + m7) / R)


def divide_fast(q: Quaternion, r: Quaternion) -> Quaternion:
    """Left quotient ``r⁻¹ q``: 8 multiplications, 31 additions, 4 squarings,
    4 divisions and 8 power-of-two shifts."""
    return divide_prepared(prepare_dividend(q), r)
