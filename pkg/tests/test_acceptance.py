"""Exit criteria.  Each test records one PASS/FAIL line shown in the
terminal summary; tolerances and time limits are fixed here."""
import csv
import io
import random
import time
from fractions import Fraction

from divquat import Quaternion, divide_fast, divide_schoolbook, multiply, norm_sq
from divquat import cli
from divquat.densematrix import matmul
from divquat.factorization import (
    build_q4,
    build_signed_and_split,
    d4_0,
    d4_1,
    pipeline_combined,
    weights_via_matrices,
    weights_unpermuted,
    w4_0,
    w4_1,
)
from divquat.verify import (
    exhaustive_pairs,
    random_float_pairs,
    random_rational_pairs,
    verify_exact,
    verify_float,
)

from conftest import F


def _count_table():
    out, err = io.StringIO(), io.StringIO()
    code = cli.cmd_count(out, err)
    rows = [line.split() for line in out.getvalue().splitlines()]
    header = rows[0][1:]
    table = {row[0]: dict(zip(header, map(int, row[1:]))) for row in rows[1:]}
    return code, table


def test_criterion_1_fast_counts(acceptance_record):
    t0 = time.perf_counter()
    code, table = _count_table()
    elapsed = time.perf_counter() - t0
    expected = {"mul": 8, "add": 31, "square": 4, "div": 4, "shift": 8}
    ok = code == 0 and table["fast"] == expected and elapsed < 1.0
    acceptance_record(1, "fast path op counts", ok, f"{table['fast']} in {elapsed:.3f}s")
    assert table["fast"] == expected
    assert code == 0
    assert elapsed < 1.0


def test_criterion_2_schoolbook_counts(acceptance_record):
    t0 = time.perf_counter()
    code, table = _count_table()
    elapsed = time.perf_counter() - t0
    expected = {"mul": 16, "add": 15, "square": 4, "div": 4, "shift": 0}
    ok = code == 0 and table["schoolbook"] == expected and elapsed < 1.0
    acceptance_record(2, "schoolbook op counts", ok, f"{table['schoolbook']} in {elapsed:.3f}s")
    assert table["schoolbook"] == expected
    assert elapsed < 1.0


def test_criterion_3_exact_oracle_equivalence(acceptance_record):
    t0 = time.perf_counter()
    grid = verify_exact(exhaustive_pairs((-1, 0, 1)), pipelines=True)
    t_grid = time.perf_counter() - t0
    rand = verify_exact(random_rational_pairs(10_000, seed=3, bound=100), pipelines=True)
    elapsed = time.perf_counter() - t0
    ok = (grid.pairs_tested == 6480 and grid.failures == 0
          and rand.pairs_tested == 10_000 and rand.failures == 0 and elapsed < 30.0)
    acceptance_record(3, "exact oracle equivalence", ok,
                      f"grid {grid.pairs_tested} pairs/{grid.failures} failures in {t_grid:.1f}s; "
                      f"random {rand.pairs_tested}/{rand.failures}; total {elapsed:.1f}s")
    assert grid.pairs_tested == 6480 and grid.failures == 0
    assert rand.pairs_tested == 10_000 and rand.failures == 0
    assert elapsed < 30.0


def _rand_fraction(rng):
    den = 0
    while den == 0:
        den = rng.randint(-100, 100)
    return Fraction(rng.randint(-100, 100), den)


def test_criterion_4_factorization_identities(acceptance_record):
    rng = random.Random(4)
    t0 = time.perf_counter()
    failures = 0
    w0, w1 = w4_0(), w4_1()
    for _ in range(1000):
        q = Quaternion(*(_rand_fraction(rng) for _ in range(4)))
        split = build_signed_and_split(q)
        two_level = w0
        for m in (w1, d4_1(q), w1, w0):
            two_level = matmul(two_level, m)
        ok = (split.q_check == split.q_tilde - split.q_hat.pow2_scale(1)
              and matmul(matmul(split.r2, split.q_check), split.r1) == build_q4(q)
              and matmul(matmul(w0, d4_0(q)), w0) == split.q_tilde
              and two_level == split.q_tilde)
        failures += not ok
    elapsed = time.perf_counter() - t0
    acceptance_record(4, "factorization identities", failures == 0 and elapsed < 10.0,
                      f"1000 q, {failures} failures in {elapsed:.1f}s")
    assert failures == 0
    assert elapsed < 10.0


def test_criterion_5_float_accuracy(acceptance_record):
    t0 = time.perf_counter()
    report = verify_float(random_float_pairs(100_000, seed=1), tol=1e-12)
    elapsed = time.perf_counter() - t0
    ok = report.pairs_tested == 100_000 and report.failures == 0 and elapsed < 10.0
    acceptance_record(5, "float accuracy", ok,
                      f"max rel error {report.max_rel_error:.3e} (bound 1e-12) "
                      f"over {report.pairs_tested} pairs in {elapsed:.1f}s")
    assert report.failures == 0
    assert report.max_rel_error <= 1e-12
    assert elapsed < 10.0


def test_criterion_6_algebraic_properties(acceptance_record):
    t0 = time.perf_counter()
    failures = 0
    for q, r in random_rational_pairs(1000, seed=6):
        g = divide_fast(q, r)
        failures += not (multiply(r, g) == q and norm_sq(g) * norm_sq(r) == norm_sq(q))
    elapsed = time.perf_counter() - t0
    acceptance_record(6, "algebraic properties", failures == 0 and elapsed < 5.0,
                      f"1000 pairs, {failures} failures in {elapsed:.2f}s")
    assert failures == 0
    assert elapsed < 5.0


def test_criterion_7_weight_order_regression(acceptance_record):
    q, r = F(1, 2, 3, 4), F(1, 1, 1, 1)
    wrong = pipeline_combined(q, r, weights_unpermuted(q))
    right = pipeline_combined(q, r, weights_via_matrices(q))
    expected_wrong = F("5/2", "-1/2", "1/2", "3/2")
    expected_right = F("5/2", 0, 1, "1/2")
    # The unpermuted order must also fail somewhere on the exhaustive grid.
    grid_failures = sum(
        pipeline_combined(a, b, weights_unpermuted(a)) != divide_schoolbook(a, b)
        for a, b in exhaustive_pairs((-1, 0, 1)))
    ok = (wrong == expected_wrong and right == expected_right
          and right == divide_schoolbook(q, r) and grid_failures > 0)
    acceptance_record(7, "weight-order regression", ok,
                      f"unpermuted order gives {tuple(map(str, wrong))}, "
                      f"fails {grid_failures}/6480 grid pairs; corrected order passes")
    assert wrong == expected_wrong
    assert wrong != divide_schoolbook(q, r)
    assert right == expected_right == divide_schoolbook(q, r)
    assert grid_failures > 0


def test_criterion_8_bench_csv(acceptance_record):
    out = io.StringIO()
    t0 = time.perf_counter()
    code = cli.cmd_bench(1_000_000, 1000, 0, out)
    elapsed = time.perf_counter() - t0
    text = out.getvalue()
    rows = list(csv.reader(io.StringIO(text)))
    well_formed = (
        code == 0
        and rows[0] == ["path", "batch_size", "total_ns", "per_div_ns"]
        and sorted(r[0] for r in rows[1:]) == ["fast", "schoolbook"]
        and all(r[1] == "1000000" and int(r[2]) > 0 for r in rows[1:])
        and all(abs(int(r[3]) * 1_000_000 - int(r[2])) <= 1_000_000 for r in rows[1:])
    )
    acceptance_record(8, "bench CSV", well_formed and elapsed < 60.0,
                      f"{len(rows) - 1} rows in {elapsed:.1f}s: " + "; ".join(
                          f"{r[0]} {r[3]} ns/div" for r in rows[1:]))
    assert well_formed
    assert elapsed < 60.0
