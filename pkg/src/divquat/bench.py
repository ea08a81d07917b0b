"""Wall-clock timing of the two division paths.

Nothing here asserts that one path is faster: in CPython both are dominated
by interpreter overhead, not by multiplier cost.
"""
from __future__ import annotations

import csv
import io
import itertools
import time
from dataclasses import dataclass

from .kernel import divide_fast
from .quaternion import divide_schoolbook
from .verify import random_float_pairs

PATHS = {"schoolbook": divide_schoolbook, "fast": divide_fast}
CSV_HEADER = ("path", "batch_size", "total_ns", "per_div_ns")
POOL_SIZE = 4096


@dataclass(frozen=True)
class BenchRecord:
    path: str
    batch_size: int
    total_ns: int
    per_div_ns: int


def run_bench(n: int, warmup: int = 0, seed: int = 0) -> list[BenchRecord]:
    """Time ``n`` divisions per path, cycling through a pre-generated pool."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if warmup < 0:
        raise ValueError("warmup must be non-negative")
    pool = list(random_float_pairs(min(n, POOL_SIZE), seed))
    records = []
    for path, fn in PATHS.items():
        for q, r in itertools.islice(itertools.cycle(pool), warmup):
            fn(q, r)
        batch = itertools.islice(itertools.cycle(pool), n)
        start = time.perf_counter_ns()
        for q, r in batch:
            fn(q, r)
        total = time.perf_counter_ns() - start
        records.append(BenchRecord(path, n, total, round(total / n)))
    return records


def to_csv(records: list[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow((rec.path, rec.batch_size, rec.total_ns, rec.per_div_ns))
    return buf.getvalue()
