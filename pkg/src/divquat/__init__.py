"""Quaternion left division in 8 real multiplications, with exact oracles,
operation counting and the matrix factorization it is derived from."""

from .errors import (
    ContractViolation,
    DimensionMismatch,
    DivisorZero,
    DivquatError,
    NonFiniteInput,
    ParseError,
    UnknownMatrixName,
    ZeroDenominator,
)
from .kernel import PreparedDividend, divide_fast, divide_prepared, prepare_dividend
from .quaternion import (
    Quaternion,
    conjugate,
    divide_schoolbook,
    inverse,
    multiply,
    norm_sq,
)
from .scalars import (
    CountingScalar,
    OpCounts,
    Tally,
    format_scalar,
    pow2_scale,
    rational_parse,
    square,
)

__version__ = "0.1.0"
