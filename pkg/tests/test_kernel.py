import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from divquat import (
    CountingScalar,
    DivisorZero,
    NonFiniteInput,
    OpCounts,
    PreparedDividend,
    Quaternion,
    Tally,
    divide_fast,
    divide_prepared,
    divide_schoolbook,
    multiply,
    norm_sq,
    prepare_dividend,
)
from divquat.factorization import pipeline_combined, weights_via_matrices
from divquat.verify import exhaustive_pairs, verify_exact

from conftest import F, floats, nonzero_quaternions, quaternions


@pytest.mark.parametrize("q, s", [
    ((1, 2, 3, 4), (2.5, -0.5, -1, 0, 2, 6, 8, 4)),
    ((1, 0, 0, 0), (0.25, 0.25, 0.25, 0.25, 2, 0, 0, 0)),
    ((0, 0, 0, 0), (0,) * 8),
])
def test_prepare_dividend_examples(q, s):
    assert prepare_dividend(Quaternion(*map(float, q))).s == s
    assert prepare_dividend(Quaternion(*map(Fraction, q))).s == tuple(map(Fraction, s))


@given(quaternions())
def test_prepared_reconstruction_identities(q):
    s = prepare_dividend(q).s
    assert s[0] + s[1] + s[2] + s[3] == q.w
    assert s[0] + s[1] - s[2] - s[3] == q.y
    assert s[0] - s[1] + s[2] - s[3] == q.x
    assert s[4] == 2 * q.w
    assert s == weights_via_matrices(q)


def test_prepared_dividend_requires_eight_weights():
    with pytest.raises(ValueError):
        PreparedDividend((1, 2, 3))


def test_divide_prepared_examples():
    q = Quaternion(1.0, 2.0, 3.0, 4.0)
    p = prepare_dividend(q)
    assert divide_prepared(p, Quaternion(1.0, 1.0, 1.0, 1.0)) == Quaternion(2.5, 0, 1, 0.5)
    assert divide_prepared(p, Quaternion(1.0, 0.0, 0.0, 0.0)) == q
    p = prepare_dividend(Quaternion(0.0, 1.0, 0.0, 0.0))
    assert divide_prepared(p, Quaternion(0.0, 0.0, 1.0, 0.0)) == Quaternion(0, 0, 0, 1)


def test_divide_fast_examples():
    q = Quaternion(1.0, 2.0, 3.0, 4.0)
    assert divide_fast(q, Quaternion(1.0, 1.0, 1.0, 1.0)) == Quaternion(2.5, 0, 1, 0.5)
    assert divide_fast(q, q) == Quaternion(1, 0, 0, 0)
    assert divide_fast(F(1, 2, 3, 4), F(1, 1, 1, 1)) == F("5/2", 0, 1, "1/2")
    with pytest.raises(DivisorZero):
        divide_fast(q, Quaternion(0.0, 0.0, 0.0, 0.0))


@pytest.mark.parametrize("bad", [float("nan"), float("inf"), -float("inf")])
def test_non_finite_rejected(bad):
    good = Quaternion(1.0, 0.0, 0.0, 0.0)
    with pytest.raises(NonFiniteInput):
        divide_fast(Quaternion(bad, 0.0, 0.0, 0.0), good)
    with pytest.raises(NonFiniteInput):
        divide_fast(good, Quaternion(0.0, bad, 0.0, 0.0))
    with pytest.raises(NonFiniteInput):
        prepare_dividend(Quaternion(0.0, 0.0, 0.0, bad))


def _counted(fn, *quats):
    t = Tally()
    fn(*(q.map(lambda v: CountingScalar(v, t)) for q in quats))
    return t.read()


finite_quats = quaternions(floats)
nonzero_finite = finite_quats.filter(lambda r: norm_sq(r) != 0)


@given(finite_quats, nonzero_finite)
def test_counting_contracts_are_input_independent(q, r):
    assert _counted(divide_fast, q, r) == OpCounts(mul=8, add=31, square=4, div=4, shift=8)
    assert _counted(divide_schoolbook, q, r) == OpCounts(mul=16, add=15, square=4, div=4)
    assert _counted(prepare_dividend, q) == OpCounts(add=8, shift=8)
    t = Tally()
    p = PreparedDividend(tuple(CountingScalar(v, t) for v in prepare_dividend(q).s))
    divide_prepared(p, r.map(lambda v: CountingScalar(v, t)))
    assert t.read() == OpCounts(mul=8, add=23, square=4, div=4)


@given(finite_quats, nonzero_finite)
def test_counting_run_is_bit_identical(q, r):
    t = Tally()
    w = lambda v: CountingScalar(v, t)  # noqa: E731
    counted = divide_fast(q.map(w), r.map(w))
    plain = divide_fast(q, r)
    for a, b in zip(plain, counted):
        assert a == b.value and math.copysign(1, a) == math.copysign(1, b.value)


@given(quaternions(), nonzero_quaternions)
def test_exact_oracle_equivalence(q, r):
    g = divide_fast(q, r)
    assert g == divide_schoolbook(q, r)
    assert g == pipeline_combined(q, r)
    assert multiply(r, g) == q


@given(quaternions(), st.lists(nonzero_quaternions, min_size=1, max_size=5))
def test_prepared_dividend_reusable(q, divisors):
    p = prepare_dividend(q)
    for r in divisors:
        assert divide_prepared(p, r) == divide_schoolbook(q, r)


def test_butterfly_order_is_deterministic():
    q, r = Quaternion(0.1, -0.7, 0.3, 0.9), Quaternion(0.2, 0.4, -0.6, 0.8)
    first = divide_fast(q, r)
    assert all(divide_fast(q, r) == first for _ in range(5))


@pytest.mark.slow
def test_exhaustive_grid_minus2_to_2():
    report = verify_exact(exhaustive_pairs(range(-2, 3)), pipelines=False)
    assert report.pairs_tested == 625 * 624
    assert report.failures == 0
