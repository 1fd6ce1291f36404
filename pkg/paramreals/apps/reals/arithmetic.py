"""
Arithmetic on real numbers given by names.

Every operation works on interval names: it applies the interval operation
to the k-th answers of its arguments, rounds the result outward to k plus
a few guard bits and intersects with the previous answer.
"""
import logging
from typing import Callable

from paramreals.apps.core.choices import REPRESENTATIONS
from paramreals.apps.core.intervals import (
    DyadicInterval,
    iadd,
    imax,
    imul,
    ineg,
    isqrt,
    isub,
    outward_round,
)

from .app_settings import app_settings
from .names import IntervalRealName, Name, RunningIntersection

logger = logging.getLogger(__name__)


def as_interval_name(phi: Name) -> Name:
    from .translate import cauchy_to_interval, irram_to_interval

    if phi.representation == REPRESENTATIONS.cauchy:
        return cauchy_to_interval(phi)
    if phi.representation == REPRESENTATIONS.irram:
        return irram_to_interval(phi)
    if phi.representation == REPRESENTATIONS.interval:
        return phi
    raise ValueError(f"{phi!r} does not name a real number")


def _working_precision(k: int) -> int:
    return k + app_settings.Arithmetic.guard_bits


def pointwise(operation: Callable[..., DyadicInterval], *names: Name, note: str = "") -> Name:
    names = [as_interval_name(phi) for phi in names]

    def step(k):
        return outward_round(operation(*(phi(k) for phi in names)), _working_precision(k))

    return IntervalRealName(RunningIntersection(step), note=note)


def real_add(a: Name, b: Name) -> Name:
    return pointwise(iadd, a, b, note=f"({a.note} + {b.note})")


def real_sub(a: Name, b: Name) -> Name:
    return pointwise(isub, a, b, note=f"({a.note} - {b.note})")


def real_mul(a: Name, b: Name) -> Name:
    return pointwise(imul, a, b, note=f"({a.note} * {b.note})")


def real_neg(a: Name) -> Name:
    return pointwise(ineg, a, note=f"-{a.note}")


def real_max(a: Name, b: Name) -> Name:
    return pointwise(imax, a, b, note=f"max({a.note}, {b.note})")


def real_sqrt(a: Name) -> Name:
    """Square root of a non-negative real; raises DomainError once an answer is all negative"""
    phi = as_interval_name(a)

    def step(k):
        p = _working_precision(k)
        return outward_round(isqrt(phi(k), p), p)

    return IntervalRealName(RunningIntersection(step), note=f"sqrt({a.note})")


__all__ = [
    "as_interval_name",
    "pointwise",
    "real_add",
    "real_sub",
    "real_mul",
    "real_neg",
    "real_max",
    "real_sqrt",
]
