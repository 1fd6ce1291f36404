"""
Interval function names from evaluators.

An evaluator answers (oracle, i) with a dyadic within 2^(-i) of f(x),
where the oracle is a Cauchy name of x. To answer an interval query
[r ± ε] with ε <= 2^(-n), the evaluator is run against the rounding
oracle of r. A run that never asks the oracle for n or more bits is
consistent with every x in the query, and its answer d gives
[d ± 2^(-i)]. The largest such i is found by stepping from i = n, down
until a run succeeds or up until one fails.

That answer alone is not monotone in the query. A query K is answered
with the intersection of those answers over every cover member holding
K, on all levels down to one past the precision of K. A smaller query
sees every member a larger one sees, and more.
"""
import functools
import logging
from typing import Callable, Optional

from paramreals.apps.core.dyadic import HALF, Dyadic, precision_of, round_nearest
from paramreals.apps.core.exceptions import ParamRealsError
from paramreals.apps.core.intervals import (
    INFINITE,
    DyadicInterval,
    FiniteInterval,
    clamp,
    diam_at_most,
    intersect,
    midpoint,
)
from paramreals.apps.core.typing import Evaluator, PointOracle
from paramreals.apps.reals.names import CauchyName, Name
from paramreals.apps.reals.translate import interval_to_cauchy

from .app_settings import app_settings
from .modulus import covering, sanity_probe
from .names import IntervalFunctionName, IRRAMFunctionName, KCFunctionName
from .operations import evaluate

logger = logging.getLogger(__name__)


class _TooFine(ParamRealsError):
    pass


class RoundingOracle:
    """m -> r rounded to m bits, refusing precisions of n bits or more"""

    def __init__(self, r: Dyadic, n: int):
        self.r = r
        self.n = n

    def __call__(self, m: int) -> Dyadic:
        if m >= self.n:
            raise _TooFine(f"precision {m} is not resolved by a query of width 2^-{self.n}")
        return round_nearest(self.r, m)


def curry_from_evaluator(
    evaluator: Evaluator, cap: Optional[int] = None, note: str = ""
) -> IntervalFunctionName:
    cap = cap or app_settings.Currying.zero_radius_cap

    def attempt(D: FiniteInterval, n: int, i: int) -> Optional[Dyadic]:
        try:
            return evaluator(RoundingOracle(D.center, n), i)
        except _TooFine:
            return None

    @functools.lru_cache(maxsize=None)
    def resolve(D: FiniteInterval) -> DyadicInterval:
        D = clamp(D)
        n = cap if D.radius.is_zero() else min(precision_of(D.radius), cap)
        i, d = n, attempt(D, n, n)
        if d is not None:
            # evaluators that read little, like constants, go past n
            while i < cap:
                finer = attempt(D, n, i + 1)
                if finer is None:
                    break
                i, d = i + 1, finer
        else:
            while d is None and i > 0:
                i -= 1
                d = attempt(D, n, i)
            if d is None:
                return INFINITE
        return FiniteInterval(d, Dyadic.power_of_two(-i))

    def query(J: DyadicInterval) -> DyadicInterval:
        if not J.is_finite or J.radius > HALF:
            return INFINITE

        K = clamp(J)
        finest = cap if K.radius.is_zero() else min(precision_of(K.radius), cap)
        answer: DyadicInterval = INFINITE
        for level in range(finest + 2):
            for D in covering(K, level):
                answer = intersect(answer, resolve(D))

        if not answer.is_finite:
            logger.debug(f"{note}: no precision is resolved by {J!r}")
        return answer

    return IntervalFunctionName(query, note=note)


def kc_evaluator(kappa: KCFunctionName) -> Evaluator:
    def evaluator(oracle: PointOracle, i: int) -> Dyadic:
        return kappa((oracle(kappa.modulus(i + 1)), i + 1))

    return evaluator


def kc_to_interval_fun(kappa: KCFunctionName, cap: Optional[int] = None) -> IntervalFunctionName:
    return curry_from_evaluator(kc_evaluator(kappa), cap=cap, note=f"interval({kappa.note})")


def irram_evaluator(psi: IRRAMFunctionName) -> Evaluator:
    """
    Narrows the running intersection of the oracle's intervals until ψ
    answers with diameter at most 2^(-i), and takes the midpoint.
    """

    def evaluator(oracle: PointOracle, i: int) -> Dyadic:
        target = Dyadic.power_of_two(-i)
        J: DyadicInterval = INFINITE
        m = 0
        while True:
            J = intersect(J, FiniteInterval(oracle(m), Dyadic.power_of_two(-m)))
            answer = psi(J)
            if diam_at_most(answer, target):
                return midpoint(answer)
            m += 1

    return evaluator


def irram_fun_to_interval_fun(
    psi: IRRAMFunctionName, probe_fuel=None, cap: Optional[int] = None
) -> IntervalFunctionName:
    sanity_probe(psi, fuel=probe_fuel)
    return curry_from_evaluator(irram_evaluator(psi), cap=cap, note=f"interval({psi.note})")


def lift2(
    H: Callable[[Name, Name], Name],
    f: IntervalFunctionName,
    g: IntervalFunctionName,
    cap: Optional[int] = None,
) -> IntervalFunctionName:
    """x -> H(f(x), g(x)) for an operation H on real names"""

    def evaluator(oracle: PointOracle, i: int) -> Dyadic:
        x = CauchyName(oracle, note="x")
        return interval_to_cauchy(H(evaluate(f, x), evaluate(g, x)))(i)

    return curry_from_evaluator(evaluator, cap=cap, note=f"lift2({f.note}, {g.note})")


__all__ = [
    "RoundingOracle",
    "curry_from_evaluator",
    "kc_evaluator",
    "kc_to_interval_fun",
    "irram_evaluator",
    "irram_fun_to_interval_fun",
    "lift2",
]
