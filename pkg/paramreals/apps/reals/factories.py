import factory

from paramreals.apps.core.dyadic import Dyadic
from paramreals.apps.core.factories import UnitDyadicFactory
from paramreals.apps.core.intervals import FiniteInterval

from .names import CauchyName, IntervalRealName, IRRAMRealName


def _constant(d):
    return lambda n: d


def _shrinking(d):
    return lambda n: FiniteInterval(d, Dyadic.power_of_two(-n))


def _alternating(d):
    """[d, d + 2^-n] for even n, [d - 2^-n, d] for odd n: never nested"""

    def query(n):
        half = Dyadic.power_of_two(-n - 1)
        return FiniteInterval(d + half if n % 2 == 0 else d - half, half)

    return query


class CauchyNameFactory(factory.Factory):
    query = factory.LazyAttribute(lambda obj: _constant(obj.value))
    note = factory.LazyAttribute(lambda obj: f"cauchy {obj.value}")

    class Params:
        value = factory.LazyFunction(UnitDyadicFactory)

    class Meta:
        model = CauchyName


class IntervalRealNameFactory(CauchyNameFactory):
    query = factory.LazyAttribute(lambda obj: _shrinking(obj.value))
    note = factory.LazyAttribute(lambda obj: f"interval {obj.value}")

    class Meta:
        model = IntervalRealName


class IRRAMRealNameFactory(CauchyNameFactory):
    query = factory.LazyAttribute(lambda obj: _alternating(obj.value))
    note = factory.LazyAttribute(lambda obj: f"alternating {obj.value}")

    class Meta:
        model = IRRAMRealName


__all__ = ["CauchyNameFactory", "IntervalRealNameFactory", "IRRAMRealNameFactory"]
