"""
Benchmarks. Every case is a task owning its own trace; a benchmark runs
its cases as one group and fits constants over the rows they return.
"""
import logging
from datetime import datetime
from typing import Iterable, List, Sequence

import numpy as np
from celery import group

from paramreals.apps.core.choices import BENCHMARKS, STRATEGIES
from paramreals.apps.reals.corpus import corpus
from paramreals.apps.reals.fitting import growth_ratio

from .schemas import BenchReport
from .tasks import logistic_case, modulus_case, translation_case

logger = logging.getLogger(__name__)

BENCH_STRATEGIES = [STRATEGIES.dag, STRATEGIES.restart, STRATEGIES.tree]


def run_cases(signatures: Iterable) -> List[dict]:
    signatures = list(signatures)
    logger.info(f"Running {len(signatures)} benchmark cases")
    return group(signatures).apply_async().get()


def _rows_for(rows, strategy):
    return [row for row in rows if row["strategy"] == strategy]


def bench_logistic(iterations=20, precision=40, rate="7/2", seed="1/2") -> BenchReport:
    rows = run_cases(
        logistic_case.s(strategy, iterations, precision, rate=rate, seed=seed)
        for strategy in BENCH_STRATEGIES
    )
    dag = _rows_for(rows, STRATEGIES.dag)[0]
    restart = _rows_for(rows, STRATEGIES.restart)[0]
    fitted = {
        "dag_peak_per_iteration": dag["peak_live_nodes"] / max(1, iterations),
        "restart_peak_per_size": restart["peak_live_nodes"] / restart["size"],
    }
    return BenchReport(
        benchmark=BENCHMARKS.logistic,
        parameters={"iterations": iterations, "precision": precision, "rate": rate, "seed": seed},
        generated_at=datetime.now(),
        rows=rows,
        fitted=fitted,
    )


def bench_modulus(family: Sequence[int] = range(4, 13)) -> BenchReport:
    rows = run_cases(modulus_case.s(k) for k in family)
    probes = [row["probes"] for row in rows]
    return BenchReport(
        benchmark=BENCHMARKS.modulus,
        parameters={"k_from": min(family), "k_to": max(family)},
        generated_at=datetime.now(),
        rows=rows,
        fitted={"growth_ratio": growth_ratio(probes)} if len(probes) > 1 else {},
    )


def bench_strategies(iterations: Sequence[int] = range(1, 17), precision=16) -> BenchReport:
    rows = run_cases(
        logistic_case.s(strategy, count, precision)
        for strategy in BENCH_STRATEGIES
        for count in iterations
    )
    fitted = {}

    dag = _rows_for(rows, STRATEGIES.dag)
    if len(dag) > 1:
        counts = [row["iterations"] for row in dag]
        slope, _ = np.polyfit(counts, [row["peak_live_nodes"] for row in dag], 1)
        fitted["dag_nodes_per_iteration"] = float(slope)

    tree = [row for row in _rows_for(rows, STRATEGIES.tree) if not row["capped"]]
    if len(tree) > 1:
        fitted["tree_growth_ratio"] = growth_ratio([row["peak_live_nodes"] for row in tree])

    restart = _rows_for(rows, STRATEGIES.restart)
    if restart:
        fitted["restart_peak_per_size"] = max(
            row["peak_live_nodes"] / row["size"] for row in restart
        )

    return BenchReport(
        benchmark=BENCHMARKS.strategies,
        parameters={
            "iterations_from": min(iterations),
            "iterations_to": max(iterations),
            "precision": precision,
        },
        generated_at=datetime.now(),
        rows=rows,
        fitted=fitted,
    )


def bench_translations(upto=32) -> BenchReport:
    rows = run_cases(translation_case.s(entry.label, upto) for entry in corpus())
    return BenchReport(
        benchmark=BENCHMARKS.translations,
        parameters={"upto": upto},
        generated_at=datetime.now(),
        rows=rows,
        fitted={key: max(row[key] for row in rows) for key in ("A", "B", "C")},
    )


__all__ = [
    "run_cases",
    "bench_logistic",
    "bench_modulus",
    "bench_strategies",
    "bench_translations",
]
