"""
Translations between the representations of real numbers.

Translations into the interval representation are written as resumable
stages: stage k is a generator yielding the declared cost of each step it
takes and returning the k-th enclosure. Run directly, the stages are
intersected into a nested name. Run under a fuel budget they give the
delay transform, whose per-query cost is linear in the query.
"""
import itertools
import logging
import threading
from typing import Dict, Generator, Optional

from paramreals.apps.core.bitcodec import MonotoneTable, dyadic_code_length, interval_code_length
from paramreals.apps.core.choices import REPRESENTATIONS
from paramreals.apps.core.costs import charge, suspended
from paramreals.apps.core.dyadic import Dyadic, round_nearest
from paramreals.apps.core.exceptions import BoundViolation, ParamRealsError
from paramreals.apps.core.fuel import Fuel
from paramreals.apps.core.intervals import (
    INFINITE,
    DyadicInterval,
    FiniteInterval,
    diam_at_most,
    intersect,
    midpoint,
    outward_round,
)
from paramreals.apps.core.sop import FirstOrder, polynomial

from .app_settings import app_settings
from .names import CauchyName, IntervalRealName, Name, RunningIntersection, StringName

logger = logging.getLogger(__name__)

Stage = Generator[int, None, DyadicInterval]


def drain(stage: Stage):
    """Runs a stage to completion, ignoring its declared costs"""
    try:
        while True:
            next(stage)
    except StopIteration as done:
        return done.value


class ResumableTranslation:
    label = "translation"

    def __init__(self, source: Name):
        self.source = source

    def stage(self, k: int) -> Stage:
        raise NotImplementedError

    def query(self, k: int) -> Stage:
        """Poses query k to the source and reads the answer"""
        yield 1 + k
        answer = self.source(k)
        if isinstance(answer, Dyadic):
            yield dyadic_code_length(answer)
        else:
            yield interval_code_length(answer)
        return answer

    def name(self) -> IntervalRealName:
        return IntervalRealName(
            RunningIntersection(lambda k: drain(self.stage(k))),
            note=f"{self.label}({self.source.note})",
        )


class CauchyToInterval(ResumableTranslation):
    label = "cauchy_to_interval"

    def stage(self, k):
        d = yield from self.query(k)
        return FiniteInterval(d, Dyadic.power_of_two(-k))


class Normalize(ResumableTranslation):
    label = "normalize"

    def __init__(self, source: Name, p: Optional[FirstOrder] = None):
        super().__init__(source)
        self.p = p or default_normalizer()
        if not isinstance(self.p, FirstOrder) or not any(self.p.coefficients[1:]):
            raise ValueError(f"The normalizer needs a nonconstant polynomial, got {self.p}")

    def stage(self, k):
        J = yield from self.query(k)
        precision = self.p.evaluate(None, k)
        yield precision + interval_code_length(J)
        return outward_round(J, precision)


class IRRAMToInterval(ResumableTranslation):
    label = "irram_to_interval"

    def stage(self, k):
        return (yield from self.query(k))


def default_normalizer() -> FirstOrder:
    degree = app_settings.Normalizer.degree
    return polynomial(*([0] * degree + [1]))


def cauchy_to_interval(phi: CauchyName) -> IntervalRealName:
    return CauchyToInterval(phi).name()


def normalize_interval(phi: Name, p: Optional[FirstOrder] = None) -> IntervalRealName:
    return Normalize(phi, p).name()


def irram_to_interval(phi: Name) -> IntervalRealName:
    return IRRAMToInterval(phi).name()


class _Converged:
    """Remembers where earlier searches stopped, so later ones resume from there"""

    def __init__(self):
        self.found: Dict[int, int] = {}
        self._lock = threading.Lock()

    def hint(self, n):
        with self._lock:
            return max((m for k, m in self.found.items() if k <= n), default=0)

    def record(self, n, m):
        with self._lock:
            self.found[n] = m


def interval_to_cauchy(phi: Name, fuel: Optional[int] = None) -> CauchyName:
    """
    Answers n with the midpoint of the first answer of diameter at most
    2^(-n-1), rounded to n + 2 bits, so answers stay short however long
    the source's answers are.
    """
    converged = _Converged()

    def approximate(n):
        budget = Fuel(fuel, purpose=f"translating {phi!r} to a Cauchy name at {n}")
        target = Dyadic.power_of_two(-n - 1)
        m = converged.hint(n)
        while True:
            budget.spend()
            J = phi(m)
            if diam_at_most(J, target):
                converged.record(n, m)
                return round_nearest(midpoint(J), n + 2)
            m += 1

    return CauchyName(approximate, note=f"interval_to_cauchy({phi.note})")


def irram_to_cauchy(phi: Name, fuel: Optional[int] = None) -> CauchyName:
    return interval_to_cauchy(irram_to_interval(phi), fuel=fuel)


class _OutOfFuel(ParamRealsError):
    pass


def delay_transform(
    translation: ResumableTranslation, budget_per_bit: Optional[int] = None
) -> IntervalRealName:
    """
    Query n gets budget_per_bit * n units of fuel to run the stages 0, 1,
    2, ... in order and answers the intersection of the stages that
    completed, or the infinite interval if none did.
    """
    if budget_per_bit is None:
        budget_per_bit = app_settings.Translation.delay_budget

    def respond(n):
        budget = budget_per_bit * n
        spent = 0
        result: DyadicInterval = INFINITE
        with suspended():
            for k in itertools.count():
                stage = translation.stage(k)
                try:
                    while True:
                        cost = next(stage)
                        if spent + cost > budget:
                            raise _OutOfFuel(f"stage {k} needs more than {budget - spent}")
                        spent += cost
                except StopIteration as done:
                    result = intersect(result, done.value)
                except _OutOfFuel:
                    logger.debug(f"Delayed {translation.label} stops at stage {k} for query {n}")
                    break
        charge(spent)
        return result

    note = f"delayed {translation.label}({translation.source.note})"
    # more fuel completes a longer prefix of the same stages, so answers nest
    return IntervalRealName(respond, note=note)


class PaddedName(StringName):
    """Answers padded to exactly B(|a|) + 1 symbols: body, a 0 marker, then 1s"""

    representation = None

    def __init__(self, inner: StringName, bound: MonotoneTable):
        self.inner = inner
        self.bound = bound
        super().__init__(self._pad, note=f"padded {inner.note}")

    def _pad(self, a):
        body = self.inner(a)
        length = self.bound(len(a))
        if len(body) > length:
            raise BoundViolation(
                f"{self.inner!r} answered {len(body)} symbols to {a!r}, over {length}"
            )
        return body + "0" + "1" * (length - len(body))

    def size_bound(self, n: int) -> int:
        return self.bound(n) + 1


def pad_length_monotone(phi: StringName, bound: MonotoneTable) -> PaddedName:
    return PaddedName(phi, bound)


def strip_answer(padded: str) -> str:
    return padded.rstrip("1")[:-1]


def strip_padding(psi: StringName) -> StringName:
    inner = getattr(psi, "inner", None)
    return StringName(lambda a: strip_answer(psi(a)), note=inner.note if inner else psi.note)


TRANSLATIONS = {
    (REPRESENTATIONS.cauchy, REPRESENTATIONS.interval): cauchy_to_interval,
    (REPRESENTATIONS.interval, REPRESENTATIONS.cauchy): interval_to_cauchy,
    (REPRESENTATIONS.irram, REPRESENTATIONS.interval): irram_to_interval,
    (REPRESENTATIONS.irram, REPRESENTATIONS.cauchy): irram_to_cauchy,
    (REPRESENTATIONS.interval, REPRESENTATIONS.interval): normalize_interval,
}


def translate(phi: Name, source: str, target: str) -> Name:
    try:
        translation = TRANSLATIONS[(source, target)]
    except KeyError:
        raise ValueError(f"No translation from {source} to {target}")
    return translation(phi)


__all__ = [
    "ResumableTranslation",
    "CauchyToInterval",
    "Normalize",
    "IRRAMToInterval",
    "default_normalizer",
    "drain",
    "cauchy_to_interval",
    "normalize_interval",
    "irram_to_interval",
    "interval_to_cauchy",
    "irram_to_cauchy",
    "delay_transform",
    "PaddedName",
    "pad_length_monotone",
    "strip_answer",
    "strip_padding",
    "TRANSLATIONS",
    "translate",
]
