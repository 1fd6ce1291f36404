"""
Exact descriptions of the real a name is supposed to denote, used to check
answers without any rounding.
"""
import gmpy2

from paramreals.apps.core.dyadic import Dyadic
from paramreals.apps.core.exceptions import DomainError
from paramreals.apps.core.intervals import DyadicInterval, FiniteInterval


def as_mpq(value):
    if isinstance(value, Dyadic):
        return value.as_mpq()
    return gmpy2.mpq(value)


class Witness:
    def within(self, J: DyadicInterval) -> bool:
        raise NotImplementedError

    def approximated_by(self, d: Dyadic, n: int) -> bool:
        """|d - x| <= 2^(-n)"""
        return self.within(FiniteInterval(d, Dyadic.power_of_two(-n)))


class ExactWitness(Witness):
    def __init__(self, value):
        self.value = as_mpq(value)

    def within(self, J):
        if not J.is_finite:
            return True
        return J.lower.as_mpq() <= self.value <= J.upper.as_mpq()

    def __repr__(self):
        return f"ExactWitness({self.value})"


class SqrtWitness(Witness):
    """x = sqrt(a) + c for rationals a >= 0 and c"""

    def __init__(self, radicand, offset=0):
        self.radicand = as_mpq(radicand)
        self.offset = as_mpq(offset)
        if self.radicand < 0:
            raise DomainError(f"No real square root of {self.radicand}")

    def within(self, J):
        if not J.is_finite:
            return True
        lower = J.lower.as_mpq() - self.offset
        upper = J.upper.as_mpq() - self.offset
        below_upper = upper >= 0 and upper * upper >= self.radicand
        above_lower = lower < 0 or lower * lower <= self.radicand
        return below_upper and above_lower

    def __repr__(self):
        return f"SqrtWitness(sqrt({self.radicand}) + {self.offset})"


__all__ = ["Witness", "ExactWitness", "SqrtWitness", "as_mpq"]
