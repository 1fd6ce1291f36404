import logging
from typing import Callable, Optional

from paramreals.apps.core.intervals import DyadicInterval, iadd, imul, isub, outward_round
from paramreals.apps.core.sop import FirstOrder, polynomial
from paramreals.apps.reals.app_settings import app_settings as reals_settings
from paramreals.apps.reals.arithmetic import as_interval_name
from paramreals.apps.reals.names import IntervalRealName, Name, RunningIntersection

from .names import IntervalFunctionName, IRRAMFunctionName

logger = logging.getLogger(__name__)


def evaluate(
    psi: IRRAMFunctionName, phi: Name, p: Optional[FirstOrder] = None
) -> IntervalRealName:
    """
    The interval name k -> ψ(φ(0)) ∩ ... ∩ ψ(φ(k)), each term rounded
    outward to p(k) bits, by default k plus the guard bits. Answers nest
    even when ψ is not monotone.
    """
    phi = as_interval_name(phi)
    p = p or polynomial(reals_settings.Arithmetic.guard_bits, 1)

    def step(k):
        return outward_round(psi(phi(k)), p.evaluate(None, k))

    return IntervalRealName(RunningIntersection(step), note=f"{psi.note}({phi.note})")


def compose(outer: IntervalFunctionName, inner: IntervalFunctionName) -> IntervalFunctionName:
    return IntervalFunctionName(lambda J: outer(inner(J)), note=f"{outer.note} ∘ {inner.note}")


def apply_pointwise(
    operation: Callable[..., DyadicInterval], *functions: IntervalFunctionName, note: str = ""
) -> IntervalFunctionName:
    return IntervalFunctionName(lambda J: operation(*(psi(J) for psi in functions)), note=note)


def fadd(f: IntervalFunctionName, g: IntervalFunctionName) -> IntervalFunctionName:
    return apply_pointwise(iadd, f, g, note=f"({f.note} + {g.note})")


def fsub(f: IntervalFunctionName, g: IntervalFunctionName) -> IntervalFunctionName:
    return apply_pointwise(isub, f, g, note=f"({f.note} - {g.note})")


def fmul(f: IntervalFunctionName, g: IntervalFunctionName) -> IntervalFunctionName:
    return apply_pointwise(imul, f, g, note=f"({f.note} · {g.note})")


__all__ = ["evaluate", "compose", "apply_pointwise", "fadd", "fsub", "fmul"]
