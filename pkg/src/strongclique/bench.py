"""Wall-clock scaling of the linear edge-simplicial test."""

from __future__ import annotations

import gc
import math
import statistics
import time
from dataclasses import dataclass
from typing import Callable, Sequence

from .edge_simplicial import is_edge_simplicial_linear
from .errors import BadParams
from .generators import biclique, random_clique_simplicial, rook
from .graph import Graph

__all__ = ["BenchRow", "bench_graph", "family_graph", "run_bench", "DEFAULT_SIZES"]

DEFAULT_SIZES = (10_000, 20_000, 40_000, 80_000)
BICLIQUE_SMALL_SIDE = 3


def family_graph(family: str, size: int, seed: int = 0) -> Graph:
    """A member of ``family`` with n + m as close to ``size`` as the family allows."""
    if family == "cliquesim":
        return random_clique_simplicial(0, (2, 6), seed, target_size=size)
    if family == "biclique":
        a = BICLIQUE_SMALL_SIDE
        b = max(1, round((size - a) / (a + 1)))
        return biclique(a, b)
    if family == "rook":
        # n + m = k^3 for the k x k rook's graph
        return rook(max(1, round(size ** (1 / 3))))
    raise BadParams(f"unknown bench family {family!r}; use cliquesim, biclique or rook")


@dataclass(frozen=True)
class BenchRow:
    size: int
    n: int
    m: int
    median_s: float
    answer: bool
    per_doubling: float | None = None


def bench_graph(g: Graph, runs: int = 5, fn: Callable[[Graph], object] = is_edge_simplicial_linear) -> tuple[float, object]:
    """Median wall time of ``fn(g)`` over ``runs`` timed calls after one warm-up."""
    medians, results = _interleaved([g], runs, fn)
    return medians[0], results[0]


def _interleaved(graphs: Sequence[Graph], runs: int, fn: Callable[[Graph], object]) -> tuple[list[float], list[object]]:
    """Warm up on every graph, then time round-robin so slow phases of the host
    hit all sizes alike instead of inflating one size's median."""
    results = [fn(g) for g in graphs]
    times: list[list[float]] = [[] for _ in graphs]
    enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        for _ in range(runs):
            for i, g in enumerate(graphs):
                t0 = time.perf_counter()
                fn(g)
                times[i].append(time.perf_counter() - t0)
    finally:
        if enabled:
            gc.enable()
    return [statistics.median(t) for t in times], results


def run_bench(family: str, sizes: Sequence[int] = DEFAULT_SIZES, runs: int = 5, seed: int = 0) -> list[BenchRow]:
    graphs = [family_graph(family, size, seed) for size in sizes]
    medians, verdicts = _interleaved(graphs, runs, is_edge_simplicial_linear)
    rows: list[BenchRow] = []
    for size, g, median, verdict in zip(sizes, graphs, medians, verdicts):
        per = None
        if rows:
            prev = rows[-1]
            growth = (g.n + g.m) / (prev.n + prev.m)
            if growth > 1 and prev.median_s > 0:
                # time factor normalised to one doubling of n + m
                per = (median / prev.median_s) ** (1 / math.log2(growth))
        rows.append(BenchRow(size, g.n, g.m, median, verdict.answer, per))
    return rows
