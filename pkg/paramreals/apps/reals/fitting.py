"""
Constants for cost bounds, fitted on a prefix of a trace and meant to be
checked against the rest of it.
"""
import math
from typing import Dict, Iterable, Sequence, Tuple

import numpy as np

from paramreals.apps.core.costs import CostTrace
from paramreals.apps.core.sop import Sop, X, apply, constant


def work_by_argument(trace: CostTrace) -> Dict[int, int]:
    return {record.argument: record.work for record in trace.per_query_log}


def fit_product_constants(trace: CostTrace, l, upto: int) -> Tuple[int, int]:
    """
    A and B of A·X·l(X) + B: B is the work at 0, A the largest ratio seen
    up to `upto`, plus one
    """
    work = work_by_argument(trace)
    B = work.get(0, 0)
    ns = np.array([n for n in sorted(work) if 1 <= n <= upto])
    if ns.size == 0:
        return 0, B

    excess = np.array([work[n] for n in ns]) - B
    scale = np.maximum(ns * np.array([l(int(n)) for n in ns]), 1)
    return max(1, math.ceil(float(np.max(excess / scale))) + 1), B


def fit_product_bound(trace: CostTrace, l, upto: int) -> Sop:
    A, B = fit_product_constants(trace, l, upto)
    if A == 0:
        return constant(B)
    return A * X * apply(X) + B


def fit_linear_constant(traces: Iterable[CostTrace], upto: int) -> int:
    """Least C with work(n) <= C·n + C for every query up to `upto` in every trace"""
    ratios = [
        record.work / (record.argument + 1)
        for trace in traces
        for record in trace.per_query_log
        if record.argument <= upto
    ]
    return math.ceil(float(np.max(ratios))) if ratios else 0


def growth_ratio(counts: Sequence[int]) -> float:
    """Fitted factor by which counts grow per step, from a least-squares fit of their logarithms"""
    steps = np.arange(len(counts))
    slope, _ = np.polyfit(steps, np.log(np.maximum(np.array(counts, dtype=float), 1)), 1)
    return float(np.exp(slope))


__all__ = [
    "work_by_argument",
    "fit_product_constants",
    "fit_product_bound",
    "fit_linear_constant",
    "growth_ratio",
]
