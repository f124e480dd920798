"""Scaling benchmark for recognition + coloring."""

from __future__ import annotations

import gc
import math
import statistics
import time
from dataclasses import dataclass

import numpy as np

from .coloring import perfect_coloring
from .generators import generate, parse_spec
from .recognition import recognize

DEFAULT_TEMPLATE = "union:(bip:{n}x{n}:p=0.5)+(cmp:{n},{n},{n})"
DEFAULT_SIZES = (55, 100, 170, 300, 540)
CSV_HEADER = "n,m,recognize_ns,color_ns,trial"


@dataclass(frozen=True)
class BenchRow:
    n: int
    m: int
    recognize_ns: int
    color_ns: int
    trial: int

    def csv(self) -> str:
        return f"{self.n},{self.m},{self.recognize_ns},{self.color_ns},{self.trial}"


def run_benchmark(sizes, template: str = DEFAULT_TEMPLATE, trials: int = 3, seed: int = 0) -> list[BenchRow]:
    """Time recognize and perfect_coloring on ``template`` with ``{n}`` set to each size.

    Instances must be perfectly colorable. Parsing and generation are not
    timed.
    """
    rows = []
    for size in sizes:
        spec, spec_seed = parse_spec(template.format(n=size))
        g = generate(spec, seed if spec_seed is None else spec_seed)
        for trial in range(trials):
            gc.collect()
            gc.disable()
            try:
                t0 = time.perf_counter_ns()
                report = recognize(g)
                t1 = time.perf_counter_ns()
                if not report.perfectly_colorable:
                    raise ValueError(f"benchmark instance {template.format(n=size)!r} is not perfectly colorable")
                perfect_coloring(g, report)
                t2 = time.perf_counter_ns()
            finally:
                gc.enable()
            rows.append(BenchRow(g.n, g.m, t1 - t0, t2 - t1, trial))
    return rows


def fit_slope(rows: list[BenchRow]) -> float:
    """Least-squares slope of log(median total time) against log(n + m)."""
    by_size: dict[tuple[int, int], list[int]] = {}
    for r in rows:
        by_size.setdefault((r.n, r.m), []).append(r.recognize_ns + r.color_ns)
    if len(by_size) < 2:
        return math.nan
    xs = np.log([n + m for n, m in by_size])
    ys = np.log([statistics.median(v) for v in by_size.values()])
    return float(np.polyfit(xs, ys, 1)[0])
