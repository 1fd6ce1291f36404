import functools
import logging

from celery import shared_task

from paramreals.apps.core.exceptions import FuelExhausted, NodeCapExceeded
from paramreals.apps.core.meter import attach, check_bound
from paramreals.apps.core.sop import X
from paramreals.apps.functions.generators import psi_k
from paramreals.apps.functions.modulus import search_modulus
from paramreals.apps.reals.corpus import corpus_entry
from paramreals.apps.reals.fitting import (
    fit_linear_constant,
    fit_product_bound,
    fit_product_constants,
)
from paramreals.apps.reals.measurement import measure_parameter_table
from paramreals.apps.reals.translate import Normalize, delay_transform, interval_to_cauchy

from .corpus import logistic_bindings, logistic_program
from .nodes import expression_size
from .oracles import exact_value
from .parser import parse
from .strategies import eval_expr

logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=32)
def _exact_logistic(iterations, rate, seed):
    return exact_value(logistic_program(iterations, parse(seed)), logistic_bindings(parse(rate)))


@shared_task
def logistic_case(strategy, iterations, precision, rate="7/2", seed="1/2"):
    program = logistic_program(iterations, parse(seed))
    row = {
        "strategy": strategy,
        "iterations": iterations,
        "precision": precision,
        "size": expression_size(program),
        "capped": False,
        "contains_exact": None,
        "enclosure": None,
    }
    try:
        J, trace = eval_expr(program, precision, strategy, logistic_bindings(parse(rate)))
        row["enclosure"] = J.to_text()
        row["contains_exact"] = _exact_logistic(iterations, rate, seed).consistent_with(J)
    except NodeCapExceeded as exc:
        logger.info(f"{strategy} evaluation of {iterations} iterations stopped: {exc}")
        trace = exc.trace
        row["capped"] = True

    row.update(
        peak_live_nodes=trace.peak_live_nodes,
        work_units=trace.work_units,
        query_count=trace.query_count,
    )
    return row


@shared_task
def modulus_case(k, n=0, fuel=None):
    try:
        search = search_modulus(psi_k(k), n, fuel=fuel)
    except FuelExhausted as exc:
        logger.warning(f"Modulus search for psi_{k} gave up: {exc}")
        return {"k": k, "level": None, "probes": exc.fuel, "exhausted": True}
    return {"k": k, "level": search.level, "probes": search.probes, "exhausted": False}


@shared_task
def translation_case(label, upto):
    entry = corpus_entry(label)

    phi, trace = attach(interval_to_cauchy(entry.interval()))
    for n in range(upto + 1):
        phi(n)
    l = measure_parameter_table(entry.interval(), upto + 16)
    A, B = fit_product_constants(trace, l, upto // 2)
    verdict = check_bound(trace, fit_product_bound(trace, l, upto // 2), l, n=upto)

    delayed, delayed_trace = attach(delay_transform(Normalize(entry.interval(), X)))
    for n in range(upto + 1):
        delayed(n)

    return {
        "label": label,
        "A": A,
        "B": B,
        "dominated": verdict.dominated,
        "C": fit_linear_constant([delayed_trace], upto),
    }
