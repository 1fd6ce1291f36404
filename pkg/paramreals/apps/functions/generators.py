"""
Function names built from formulas, all on the unit interval.

Interval generators clamp their query to [0, 1] before evaluating, so
any query is answered and inclusion is preserved.
"""
from typing import Callable, Dict

from paramreals.apps.core.bitcodec import MonotoneTable
from paramreals.apps.core.choices import EXTENSION_RULES
from paramreals.apps.core.dyadic import (
    HALF,
    ONE,
    ZERO,
    Dyadic,
    ceil_scaled,
    floor_scaled,
    mag_bound,
    precision_of,
    round_nearest,
)
from paramreals.apps.core.intervals import (
    FiniteInterval,
    clamp,
    diam_at_most,
    diameter_precision,
    iadd,
    imul,
    iscale,
    point,
)

from .app_settings import app_settings
from .names import IntervalFunctionName, IRRAMFunctionName, KCFunctionName


def _clamped(evaluate: Callable) -> Callable:
    return lambda J: evaluate(clamp(J))


def identity() -> IntervalFunctionName:
    return IntervalFunctionName(clamp, note="x")


def constant(c) -> IntervalFunctionName:
    answer = point(Dyadic.coerce(c))
    return IntervalFunctionName(lambda J: answer, note=f"{answer.center}")


def affine(a, b=ZERO) -> IntervalFunctionName:
    a, b = Dyadic.coerce(a), Dyadic.coerce(b)
    return IntervalFunctionName(
        _clamped(lambda J: iadd(iscale(J, a), point(b))), note=f"{a}·x + {b}"
    )


def quadratic(a, b=ZERO, c=ZERO) -> IntervalFunctionName:
    a, b, c = (Dyadic.coerce(value) for value in (a, b, c))

    def evaluate(J):
        return iadd(iadd(iscale(imul(J, J), a), iscale(J, b)), point(c))

    return IntervalFunctionName(_clamped(evaluate), note=f"{a}·x² + {b}·x + {c}")


def logistic() -> IntervalFunctionName:
    """4x(1 - x), evaluated as 4x - 4x² so the enclosures overestimate"""
    return quadratic(-4, 4)


def psi_k(k: int) -> IntervalFunctionName:
    """
    A name of the zero function that only commits once the query is
    narrower than 2^(-k). Its modulus part is k, and finding it by covers
    takes about 2^(k+2) probes.
    """
    threshold = Dyadic.power_of_two(-k)
    unit_ball = FiniteInterval(ZERO, ONE)
    zero = point(ZERO)

    return IntervalFunctionName(
        lambda J: zero if diam_at_most(J, threshold) else unit_ball, note=f"psi_{k}"
    )


def _is_trap(J) -> bool:
    # [3·2^(-n-2) ± 2^(-n-2)] for some n >= 0
    if not J.is_finite or J.radius.sign <= 0:
        return False
    radius = J.radius
    return radius.mantissa == 1 and radius <= Dyadic(1, 2) and J.center == radius * 3


def pathological() -> IRRAMFunctionName:
    """
    An iRRAM name of the zero function that answers [1/2 ± 1/2] on one
    interval of every width. It has no modulus on any cover.
    """
    trap = FiniteInterval(HALF, HALF)
    zero = point(ZERO)
    return IRRAMFunctionName(lambda J: trap if _is_trap(J) else zero, note="pathological")


def _slow_enclosure(J):
    precision = diameter_precision(J)
    if precision is None:
        return J
    grid = precision // 2
    return FiniteInterval.from_endpoints(
        Dyadic(floor_scaled(J.lower, grid) - 1, grid),
        Dyadic(ceil_scaled(J.upper, grid) + 1, grid),
    )


def slow_identity() -> IntervalFunctionName:
    """The identity, answered on a grid twice as coarse as the query: modulus about 2n"""
    return IntervalFunctionName(_clamped(_slow_enclosure), note="slow x")


def _parity_widened(J):
    radius = J.radius
    if radius.is_zero():
        return J
    return FiniteInterval(J.center, radius.scale(1) if radius.exponent % 2 else radius)


def hausdorff_identity() -> IRRAMFunctionName:
    """
    The identity, doubling the radius of queries whose radius has an odd
    binary exponent. Continuous in the Hausdorff sense, not monotone.
    """
    return IRRAMFunctionName(_clamped(_parity_widened), note="hausdorff x")


def _size_table(function, upto=None) -> MonotoneTable:
    upto = upto or app_settings.KC.string_table_length
    return MonotoneTable.from_function(function, upto, extension=EXTENSION_RULES.fail)


def kc_affine(a, b=ZERO) -> KCFunctionName:
    a, b = Dyadic.coerce(a), Dyadic.coerce(b)
    growth = 0 if a.is_zero() else max(0, -precision_of(abs(a)))

    def query(q):
        r, n = q
        return round_nearest(a * r + b, n + 1)

    return KCFunctionName(
        query,
        size_table=_size_table(lambda n: 0 if a.is_zero() else n + growth),
        norm_bits=mag_bound(abs(a) + abs(b)),
        note=f"kc {a}·x + {b}",
    )


def kc_identity() -> KCFunctionName:
    return kc_affine(ONE)


def kc_constant(c) -> KCFunctionName:
    return kc_affine(ZERO, c)


INTERVAL_FUNCTIONS: Dict[str, Callable[[], IntervalFunctionName]] = {
    "id": identity,
    "half": lambda: affine(HALF),
    "flip": lambda: affine(-1, 1),
    "square": lambda: quadratic(1),
    "logistic": logistic,
    "slow": slow_identity,
}


def interval_function(label: str) -> IntervalFunctionName:
    try:
        return INTERVAL_FUNCTIONS[label]()
    except KeyError:
        raise ValueError(f"Unknown function {label!r}, choose one of {sorted(INTERVAL_FUNCTIONS)}")


__all__ = [
    "identity",
    "constant",
    "affine",
    "quadratic",
    "logistic",
    "psi_k",
    "pathological",
    "slow_identity",
    "hausdorff_identity",
    "kc_affine",
    "kc_identity",
    "kc_constant",
    "INTERVAL_FUNCTIONS",
    "interval_function",
]
