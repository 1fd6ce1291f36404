import logging

import gmpy2
from gmpy2 import mpz

from paramreals.apps.core.costs import charge
from paramreals.apps.core.dyadic import ZERO, Dyadic
from paramreals.apps.core.exceptions import DomainError
from paramreals.apps.core.intervals import FiniteInterval

from .names import CauchyName, IntervalRealName

logger = logging.getLogger(__name__)


def cauchy_of_dyadic(d: Dyadic) -> CauchyName:
    d = Dyadic.coerce(d)
    return CauchyName(lambda n: d, note=f"cauchy {d}")


def interval_of_dyadic(d: Dyadic) -> IntervalRealName:
    d = Dyadic.coerce(d)
    return IntervalRealName(
        lambda n: FiniteInterval(d, Dyadic.power_of_two(-n)), note=f"interval {d}"
    )


def _divide_nearest(numerator, denominator):
    return (2 * numerator + denominator) // (2 * denominator)


def cauchy_of_rational(p: int, q: int) -> CauchyName:
    """Answers p/q rounded to n + 1 fractional bits"""
    if q == 0:
        raise DomainError(f"{p}/{q} is not a real number")
    if q < 0:
        p, q = -p, -q
    p, q = mpz(p), mpz(q)

    def approximate(n):
        charge((n + 2) * max(1, q.bit_length()))
        return Dyadic(_divide_nearest(p << (n + 1), q), n + 1)

    return CauchyName(approximate, note=f"cauchy {p}/{q}")


def cauchy_of_sqrt(p: int, q: int = 1, offset: Dyadic = ZERO) -> CauchyName:
    """sqrt(p/q) + offset, truncated to n + 1 fractional bits

    The truncation is gmpy2.isqrt of floor(p * 4^(n + 1) / q), the floor Newton's integer
    iteration converges to; no Newton step is run in Python.
    """
    if q <= 0 or p < 0:
        raise DomainError(f"No real square root of {p}/{q}")
    p, q = mpz(p), mpz(q)
    offset = Dyadic.coerce(offset)

    def approximate(n):
        scaled = (p << (2 * n + 2)) // q
        charge(max(1, scaled.bit_length()) ** 2)
        return Dyadic(gmpy2.isqrt(scaled), n + 1) + offset

    return CauchyName(approximate, note=f"cauchy sqrt({p}/{q}) + {offset}")


__all__ = ["cauchy_of_dyadic", "interval_of_dyadic", "cauchy_of_rational", "cauchy_of_sqrt"]
