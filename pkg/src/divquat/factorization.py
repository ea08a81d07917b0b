"""Literal matrix constructions for the rationalized quotient and reference
pipelines that evaluate it by explicit matrix-vector products.

The naming follows the factor matrices: ``q4`` is the dividend matrix acting
on the divisor vector, ``q_check`` its sign-transformed form, ``q_tilde`` the
symmetric block-Toeplitz part and ``q_hat`` the sparse correction, ``w*``
Hadamard stages, ``p*`` replication/permutation matrices, ``sigma`` the final
top-minus-bottom fold and ``d8`` the diagonal of precomputed dividend sums.

Operation counts of this module are not contractual; the matrices exist to
check the algebra, not to be fast.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cache
from typing import NamedTuple, Sequence

from .densematrix import (
    DenseMatrix,
    diag,
    direct_sum,
    hadamard2,
    identity,
    kron,
    matvec,
)
from .errors import DivisorZero, UnknownMatrixName
from .quaternion import Quaternion, check_finite, norm_sq
from .scalars import pow2_scale

__all__ = [
    "build_q4",
    "SignSplit",
    "build_signed_and_split",
    "q_tilde_blocks",
    "w4_0",
    "w4_1",
    "d4_0",
    "d2_0",
    "d2_1",
    "d4_1",
    "p4_0",
    "p4_1",
    "w8_0",
    "w8_0_tilde",
    "w8_1",
    "w8_1_tilde",
    "sigma_4x8",
    "p8x4",
    "p8x4_tilde",
    "d8_tilde",
    "weights_via_matrices",
    "weights_unpermuted",
    "build_d8",
    "eta4",
    "apply_eta",
    "pipeline_eq1",
    "pipeline_combined",
    "MATRIX_NAMES",
    "NUMERIC_MATRIX_NAMES",
    "named_matrix",
]


_R1 = diag([1, -1, -1, -1])
_R2 = diag([-1, 1, 1, 1])


def build_q4(q: Quaternion) -> DenseMatrix:
    """Dividend matrix: ``Q4 @ [r0..r3]`` is ``R`` times the left quotient."""
    q0, q1, q2, q3 = q
    return DenseMatrix.from_rows([
        [q0, q1, q2, q3],
        [q1, -q0, -q3, q2],
        [q2, q3, -q0, -q1],
        [q3, -q2, q1, -q0],
    ])


class SignSplit(NamedTuple):
    q_check: DenseMatrix
    q_tilde: DenseMatrix
    q_hat: DenseMatrix
    r1: DenseMatrix
    r2: DenseMatrix


def build_signed_and_split(q: Quaternion) -> SignSplit:
    """Sign-transformed dividend matrix and its Toeplitz-plus-sparse split.

    ``r2 @ q_check @ r1 == build_q4(q)`` and
    ``q_check == q_tilde - 2 * q_hat``.
    """
    q0, q1, q2, q3 = q
    z = 0
    q_check = DenseMatrix.from_rows([
        [-q0, q1, q2, q3],
        [q1, q0, q3, -q2],
        [q2, -q3, q0, q1],
        [q3, q2, -q1, q0],
    ])
    q_tilde = DenseMatrix.from_rows([
        [q0, q1, q2, q3],
        [q1, q0, q3, q2],
        [q2, q3, q0, q1],
        [q3, q2, q1, q0],
    ])
    q_hat = DenseMatrix.from_rows([
        [q0, z, z, z],
        [z, z, z, q2],
        [z, q3, z, z],
        [z, z, q1, z],
    ])
    return SignSplit(q_check, q_tilde, q_hat, _R1, _R2)


def q_tilde_blocks(q: Quaternion) -> tuple[DenseMatrix, DenseMatrix]:
    """The two symmetric 2x2 blocks of ``q_tilde = [[A, B], [B, A]]``."""
    q0, q1, q2, q3 = q
    return (DenseMatrix.from_rows([[q0, q1], [q1, q0]]),
            DenseMatrix.from_rows([[q2, q3], [q3, q2]]))


@cache
def w4_0() -> DenseMatrix:
    return kron(hadamard2(), identity(2))


@cache
def w4_1() -> DenseMatrix:
    return kron(identity(2), hadamard2())


def d4_0(q: Quaternion) -> DenseMatrix:
    """Half of ``(A + B) ⊕ (A - B)`` for the blocks of ``q_tilde``."""
    a, b = q_tilde_blocks(q)
    return direct_sum(a + b, a - b).pow2_scale(-1)


def d2_0(q: Quaternion) -> DenseMatrix:
    q0, q1, q2, q3 = q
    u, v = q0 + q2, q1 + q3
    return diag([pow2_scale(u + v, -1), pow2_scale(u - v, -1)])


def d2_1(q: Quaternion) -> DenseMatrix:
    q0, q1, q2, q3 = q
    u, v = q0 - q2, q1 - q3
    return diag([pow2_scale(u + v, -1), pow2_scale(u - v, -1)])


def d4_1(q: Quaternion) -> DenseMatrix:
    """``diag(s0, s1, s2, s3)`` written out from the quarter-scaled sums."""
    q0, q1, q2, q3 = q
    return diag([
        pow2_scale((q0 + q2) + (q1 + q3), -2),
        pow2_scale((q0 + q2) - (q1 + q3), -2),
        pow2_scale((q0 - q2) + (q1 - q3), -2),
        pow2_scale((q0 - q2) - (q1 - q3), -2),
    ])


def _perm(targets: Sequence[int]) -> DenseMatrix:
    """Permutation matrix whose row ``i`` selects input ``targets[i]``."""
    n = len(targets)
    return DenseMatrix(n, n, [1 if j == targets[i] else 0
                              for i in range(n) for j in range(n)])


@cache
def p4_0() -> DenseMatrix:
    # (u0, u1, u2, u3) -> (u0, u3, u1, u2)
    return _perm([0, 3, 1, 2])


@cache
def p4_1() -> DenseMatrix:
    # (u0, u1, u2, u3) -> (u0, u2, u3, u1)
    return _perm([0, 2, 3, 1])


@cache
def w8_0() -> DenseMatrix:
    return direct_sum(w4_0(), identity(4))


@cache
def w8_0_tilde() -> DenseMatrix:
    return direct_sum(w4_0(), p4_0())


@cache
def w8_1() -> DenseMatrix:
    return direct_sum(w4_1(), identity(4))


@cache
def w8_1_tilde() -> DenseMatrix:
    return direct_sum(w4_0(), p4_1())


@cache
def sigma_4x8() -> DenseMatrix:
    return kron(DenseMatrix(1, 2, [1, -1]), identity(4))


@cache
def p8x4() -> DenseMatrix:
    return kron(DenseMatrix(2, 1, [1, 1]), identity(4))


@cache
def p8x4_tilde() -> DenseMatrix:
    return p8x4() @ diag([1, -1, -1, -1])


@cache
def d8_tilde() -> DenseMatrix:
    quarter = Fraction(1, 4)
    return diag([quarter] * 4 + [2] * 4)


def weights_via_matrices(q: Quaternion) -> tuple:
    """Diagonal entries s0..s7 via ``d8_tilde @ w8_1 @ w8_1_tilde @ p8x4 @ q``."""
    v = tuple(q)
    for m in (p8x4(), w8_1_tilde(), w8_1(), d8_tilde()):
        v = matvec(m, v)
    return v


def weights_unpermuted(q: Quaternion) -> tuple:
    """Weights with the lower half unpermuted: s4..s7 = 2*(q0, q1, q2, q3).

    Kept for regression tests only.  The lower half must follow the
    ``w8_1_tilde`` permutation (2*q0, 2*q2, 2*q3, 2*q1); this order yields a
    wrong quotient.
    """
    head = weights_via_matrices(q)[:4]
    return head + tuple(pow2_scale(c, 1) for c in q)


def build_d8(q: Quaternion, s: Sequence | None = None) -> DenseMatrix:
    return diag(weights_via_matrices(q) if s is None else s)


def _norm_checked(r: Quaternion):
    check_finite(r)
    R = norm_sq(r)
    if R == 0:
        raise DivisorZero(f"divisor {r} has zero norm")
    return R


def eta4(r: Quaternion) -> DenseMatrix:
    """``(1/R) * diag(-1, 1, 1, 1)`` as an explicit matrix."""
    R = _norm_checked(r)
    inv = 1 / R
    return diag([-inv, inv, inv, inv])


def apply_eta(v: Sequence, R) -> Quaternion:
    """Sign flip of component 0 followed by four divisions by ``R``."""
    w = matvec(_R2, v)
    return Quaternion(*(c / R for c in w))


def pipeline_eq1(q: Quaternion, r: Quaternion) -> Quaternion:
    """Left quotient as ``(1/R) * Q4 @ r`` by a literal matvec."""
    check_finite(q)
    R = _norm_checked(r)
    y = matvec(build_q4(q), tuple(r))
    return Quaternion(*(c / R for c in y))


def pipeline_combined(q: Quaternion, r: Quaternion, s: Sequence | None = None) -> Quaternion:
    """Left quotient through the full eight-wide factor chain.

    ``s`` overrides the diagonal entries (defaults to :func:`weights_via_matrices`).
    """
    check_finite(q)
    R = _norm_checked(r)
    chain = (p8x4_tilde(), w8_0_tilde(), w8_1(), build_d8(q, s), w8_1(),
             w8_0(), sigma_4x8())
    v = tuple(r)
    for m in chain:
        v = matvec(m, v)
    return apply_eta(v, R)


_CONSTANT = {
    "W8_0": w8_0,
    "W8_0t": w8_0_tilde,
    "W8_1": w8_1,
    "W8_1t": w8_1_tilde,
    "Sigma": sigma_4x8,
    "P8x4": p8x4,
    "P8x4t": p8x4_tilde,
    "R1": lambda: _R1,
    "R2": lambda: _R2,
}

_NUMERIC = {
    "Q4": build_q4,
    "Qcheck": lambda q: build_signed_and_split(q).q_check,
    "Qtilde": lambda q: build_signed_and_split(q).q_tilde,
    "Qhat": lambda q: build_signed_and_split(q).q_hat,
}

NUMERIC_MATRIX_NAMES = tuple(_NUMERIC)
MATRIX_NAMES = NUMERIC_MATRIX_NAMES + tuple(_CONSTANT)


def named_matrix(name: str, q: Quaternion | None = None) -> DenseMatrix:
    """Look up a dumpable matrix by name; the Q-family needs a dividend."""
    if name in _CONSTANT:
        return _CONSTANT[name]()
    if name in _NUMERIC:
        if q is None:
            raise ValueError(f"matrix {name} needs a dividend quaternion")
        return _NUMERIC[name](q)
    raise UnknownMatrixName(name)
