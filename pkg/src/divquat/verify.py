"""Oracle-equivalence runs and operation-count contracts."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .factorization import pipeline_combined, pipeline_eq1
from .kernel import PreparedDividend, divide_fast, divide_prepared, prepare_dividend
from .quaternion import Quaternion, divide_schoolbook, norm_sq
from .scalars import CountingScalar, OpCounts, Tally

Pair = tuple[Quaternion, Quaternion]

FLOAT_TOLERANCE = 1e-12
MIN_DIVISOR_NORM_SQ = 0.01

EXPECTED_COUNTS = {
    "fast": OpCounts(mul=8, add=31, square=4, div=4, shift=8),
    "schoolbook": OpCounts(mul=16, add=15, square=4, div=4, shift=0),
    "prepare": OpCounts(mul=0, add=8, square=0, div=0, shift=8),
    "prepared-apply": OpCounts(mul=8, add=23, square=4, div=4, shift=0),
}
CONTRACT_FIELDS = ("mul", "add", "square", "div", "shift")

_COUNT_Q = Quaternion(1.0, 2.0, 3.0, 4.0)
_COUNT_R = Quaternion(0.5, -1.0, 2.0, 1.5)


def measure_counts(q: Quaternion = _COUNT_Q, r: Quaternion = _COUNT_R) -> dict[str, OpCounts]:
    """Run every path once on counting scalars, one fresh tally per path."""
    counts = {}
    for path, fn, args in (
        ("fast", divide_fast, (q, r)),
        ("schoolbook", divide_schoolbook, (q, r)),
        ("prepare", prepare_dividend, (q,)),
    ):
        tally = Tally(path)
        fn(*(a.map(lambda v: CountingScalar(v, tally)) for a in args))
        counts[path] = tally.read()

    # Weights are wrapped after preparation so only the apply stage is tallied.
    tally = Tally("prepared-apply")
    weights = prepare_dividend(q.map(float)).s
    prepared = PreparedDividend(tuple(CountingScalar(s, tally) for s in weights))
    divide_prepared(prepared, r.map(lambda v: CountingScalar(v, tally)))
    counts["prepared-apply"] = tally.read()
    return counts


def contract_violations(counts: dict[str, OpCounts]) -> list[str]:
    bad = []
    for path, expected in EXPECTED_COUNTS.items():
        got = counts[path]
        if any(getattr(got, f) != getattr(expected, f) for f in CONTRACT_FIELDS):
            bad.append(f"{path}: expected {expected}, got {got}")
    return bad


@dataclass
class VerificationReport:
    pairs_tested: int = 0
    exact_mode: bool = True
    failures: int = 0
    max_rel_error: Optional[float] = None
    worst_pair: Optional[Pair] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def merge(self, other: VerificationReport) -> VerificationReport:
        if other.exact_mode != self.exact_mode:
            raise ValueError("cannot merge exact and float reports")
        out = VerificationReport(self.pairs_tested + other.pairs_tested,
                                 self.exact_mode, self.failures + other.failures,
                                 self.max_rel_error, self.worst_pair)
        if self.exact_mode:
            if out.worst_pair is None:
                out.worst_pair = other.worst_pair
        elif other.max_rel_error is not None and (
                out.max_rel_error is None or other.max_rel_error > out.max_rel_error):
            out.max_rel_error = other.max_rel_error
            out.worst_pair = other.worst_pair
        return out

    def render(self) -> str:
        lines = [
            f"mode: {'exact' if self.exact_mode else 'float'}",
            f"pairs_tested: {self.pairs_tested}",
            f"failures: {self.failures}",
        ]
        if not self.exact_mode:
            lines.append(f"max_rel_error: {self.max_rel_error!r}")
        if self.worst_pair is not None:
            q, r = self.worst_pair
            lines.append(f"worst_pair: q={_fmt(q)} r={_fmt(r)}")
        lines.append(f"status: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _fmt(q: Quaternion) -> str:
    return "(" + ", ".join(str(c) for c in q) + ")"


def exhaustive_pairs(values: Iterable[int] = (-1, 0, 1)) -> Iterator[Pair]:
    """All ``(q, r)`` over the component grid with nonzero divisor, as fractions."""
    grid = [Quaternion.of(c, Fraction) for c in itertools.product(values, repeat=4)]
    for q in grid:
        for r in grid:
            if norm_sq(r) != 0:
                yield q, r


def random_rational_pairs(n: int, seed: int, bound: int = 100) -> Iterator[Pair]:
    """Components ``a/b`` with ``a`` in [-bound, bound] and nonzero ``b`` likewise."""
    rng = random.Random(seed)

    def scalar():
        den = 0
        while den == 0:
            den = rng.randint(-bound, bound)
        return Fraction(rng.randint(-bound, bound), den)

    made = 0
    while made < n:
        q = Quaternion(scalar(), scalar(), scalar(), scalar())
        r = Quaternion(scalar(), scalar(), scalar(), scalar())
        if norm_sq(r) == 0:
            continue
        made += 1
        yield q, r


def random_float_pairs(n: int, seed: int,
                       min_norm_sq: float = MIN_DIVISOR_NORM_SQ) -> Iterator[Pair]:
    """Components uniform in [-1, 1]; divisors with small norm are redrawn."""
    rng = random.Random(seed)
    u = rng.uniform
    made = 0
    while made < n:
        q = Quaternion(u(-1, 1), u(-1, 1), u(-1, 1), u(-1, 1))
        r = Quaternion(u(-1, 1), u(-1, 1), u(-1, 1), u(-1, 1))
        if norm_sq(r) < min_norm_sq:
            continue
        made += 1
        yield q, r


def component_scales(q: Quaternion, r: Quaternion) -> tuple[float, ...]:
    """Per-component magnitude ``sum_i |r_i * q_j| / R`` of the quotient's terms.

    Rounding error in a quotient component is proportional to this sum, not to
    the component itself, which can cancel to (near) zero.
    """
    q0, q1, q2, q3 = (abs(c) for c in q)
    r0, r1, r2, r3 = (abs(c) for c in r)
    R = norm_sq(r)
    return (
        (r0 * q0 + r1 * q1 + r2 * q2 + r3 * q3) / R,
        (r0 * q1 + r1 * q0 + r2 * q3 + r3 * q2) / R,
        (r0 * q2 + r1 * q3 + r2 * q0 + r3 * q1) / R,
        (r0 * q3 + r1 * q2 + r2 * q1 + r3 * q0) / R,
    )


def rel_error(got: Quaternion, ref: Quaternion, scales: Iterable[float]) -> float:
    """Largest componentwise ``|got - ref| / scale``; zero scale means exact zero."""
    worst = 0.0
    for a, b, s in zip(got, ref, scales):
        diff = abs(a - b)
        if s == 0:
            if diff != 0:
                return float("inf")
            continue
        worst = max(worst, diff / s)
    return worst


def verify_exact(pairs: Iterable[Pair], pipelines: bool = True) -> VerificationReport:
    """Fast vs schoolbook (and optionally both matrix pipelines), exact equality."""
    report = VerificationReport(exact_mode=True)
    for q, r in pairs:
        report.pairs_tested += 1
        ref = divide_schoolbook(q, r)
        ok = divide_fast(q, r) == ref
        if ok and pipelines:
            ok = pipeline_eq1(q, r) == ref and pipeline_combined(q, r) == ref
        if not ok:
            report.failures += 1
            if report.worst_pair is None:
                report.worst_pair = (q, r)
    return report


def verify_float(pairs: Iterable[Pair], tol: float = FLOAT_TOLERANCE) -> VerificationReport:
    report = VerificationReport(exact_mode=False, max_rel_error=0.0)
    for q, r in pairs:
        report.pairs_tested += 1
        err = rel_error(divide_fast(q, r), divide_schoolbook(q, r), component_scales(q, r))
        if err > report.max_rel_error or report.worst_pair is None:
            report.max_rel_error = max(err, report.max_rel_error)
            report.worst_pair = (q, r)
        if not err <= tol:
            report.failures += 1
    return report
